#include "mpa/poly.hpp"

#include <sstream>

namespace mpa {

PolyX PolyX::falling_factorial_from(long a, long len) {
    PolyX p(Rational(1));
    for (long s = 0; s < len; ++s) {
        PolyX factor = PolyX::x();
        factor.add_to(0, Rational(-(a + s)));
        p = p * factor;
    }
    return p;
}

void PolyX::set(int deg, const Rational& v) {
    if (v == 0)
        coeff_.erase(deg);
    else
        coeff_[deg] = v;
}

void PolyX::add_to(int deg, const Rational& v) {
    auto it = coeff_.find(deg);
    if (it == coeff_.end()) {
        if (v != 0) coeff_.emplace(deg, v);
        return;
    }
    it->second += v;
    if (it->second == 0) coeff_.erase(it);
}

PolyX PolyX::operator+(const PolyX& o) const {
    PolyX r = *this;
    for (const auto& [d, v] : o.coeff_) r.add_to(d, v);
    return r;
}

PolyX PolyX::operator-(const PolyX& o) const {
    PolyX r = *this;
    for (const auto& [d, v] : o.coeff_) r.add_to(d, -v);
    return r;
}

PolyX PolyX::operator*(const PolyX& o) const {
    PolyX r;
    for (const auto& [d1, v1] : coeff_)
        for (const auto& [d2, v2] : o.coeff_) r.add_to(d1 + d2, v1 * v2);
    return r;
}

PolyX PolyX::operator*(const Rational& s) const {
    PolyX r;
    if (s == 0) return r;
    for (const auto& [d, v] : coeff_) r.coeff_[d] = v * s;
    return r;
}

Rational PolyX::evaluate(const Rational& at) const {
    // Horner over the sparse support.
    Rational acc(0);
    int prev_deg = -1;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        if (prev_deg >= 0)
            for (int i = 0; i < prev_deg - it->first; ++i) acc *= at;
        acc += it->second;
        prev_deg = it->first;
    }
    for (int i = 0; i < prev_deg; ++i) acc *= at;
    return acc;
}

namespace {
std::string coeff_str(const Rational& v, bool leading, bool with_term) {
    Rational a = v < 0 ? Rational(-v) : v;
    std::ostringstream out;
    if (leading)
        out << (v < 0 ? "-" : "");
    else
        out << (v < 0 ? " - " : " + ");
    if (!with_term || a != 1) {
        out << a.get_str();
        if (with_term) out << "*";
    }
    return out.str();
}
}  // namespace

std::string PolyX::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream out;
    bool leading = true;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        const auto& [d, v] = *it;
        out << coeff_str(v, leading, d > 0);
        if (d == 1)
            out << "x";
        else if (d > 1)
            out << "x^" << d;
        leading = false;
    }
    return out.str();
}

}  // namespace mpa
