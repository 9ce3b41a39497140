#include "mpa/text.hpp"

#include <cctype>
#include <sstream>

namespace mpa {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError(pos, "unexpected end of input");
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(pos, std::string("expected '") + c + "'");
        ++pos;
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(start, "expected a value");
        if (pos - start > 6) throw ParseError(start, "value out of range");
        long v = std::stol(text.substr(start, pos - start));
        if (v < 1) throw ParseError(start, "values start at 1");
        return static_cast<int>(v);
    }
    void done() {
        skip_ws();
        if (pos != text.size()) throw ParseError(pos, "trailing input");
    }
};

}  // namespace

MultisetPartition parse_msp(const std::string& text, int k) {
    Cursor c{text};
    std::vector<Multiset> blocks;
    c.expect('[');
    if (!c.try_consume(']')) {
        do {
            size_t block_start = c.pos;
            c.expect('[');
            std::vector<int> e(2 * k, 0);
            bool any = false;
            if (!c.try_consume(']')) {
                do {
                    size_t at = c.pos;
                    int v = c.number();
                    bool barred = c.try_consume('\'');
                    if (v > k) throw ParseError(at, "value exceeds k=" + std::to_string(k));
                    ++e[(barred ? k : 0) + v - 1];
                    any = true;
                } while (c.try_consume(','));
                c.expect(']');
            }
            if (!any) throw ParseError(block_start, "empty block");
            blocks.emplace_back(std::move(e));
        } while (c.try_consume(','));
        c.expect(']');
    }
    c.done();
    return {k, 2, std::move(blocks)};
}

namespace {

void format_block(std::ostream& out, const Multiset& b, int k) {
    out << '[';
    bool first = true;
    for (int i = 0; i < 2 * k; ++i) {
        for (int c = 0; c < b.exponents()[i]; ++c) {
            if (!first) out << ',';
            first = false;
            out << (i % k) + 1;
            if (i >= k) out << '\'';
        }
    }
    out << ']';
}

}  // namespace

std::string format_msp(const MultisetPartition& pi) {
    if (pi.rows() != 2) throw std::invalid_argument("format_msp prints two-row partitions");
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < pi.length(); ++i) {
        if (i) out << ',';
        format_block(out, pi.blocks()[i], pi.k());
    }
    out << ']';
    return out.str();
}

std::vector<int> parse_int_partition(const std::string& text) {
    Cursor c{text};
    std::vector<int> parts;
    do {
        parts.push_back(c.number());
    } while (c.try_consume(','));
    c.done();
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw ParseError(0, "partition parts must be weakly decreasing");
    return parts;
}

std::string format_int_partition(const std::vector<int>& parts) {
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    return out.str();
}

nlohmann::json msp_to_json(const MultisetPartition& pi) {
    if (pi.rows() != 2) throw std::invalid_argument("msp_to_json exports two-row partitions");
    nlohmann::json blocks = nlohmann::json::array();
    int k = pi.k();
    for (const auto& b : pi.blocks()) {
        nlohmann::json blk = nlohmann::json::array();
        for (int i = 0; i < 2 * k; ++i)
            for (int c = 0; c < b.exponents()[i]; ++c) blk.push_back(i < k ? i + 1 : -(i - k + 1));
        blocks.push_back(std::move(blk));
    }
    return {{"r", pi.r()}, {"k", pi.k()}, {"blocks", std::move(blocks)}};
}

nlohmann::json rational_to_json(const Rational& q) {
    return nlohmann::json::array({q.get_num().get_str(), q.get_den().get_str()});
}

nlohmann::json poly_to_json(const PolyX& p) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [deg, v] : p.coefficients()) obj[std::to_string(deg)] = rational_to_json(v);
    return obj;
}

}  // namespace mpa
