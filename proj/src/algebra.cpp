#include "mpa/algebra.hpp"

#include <sstream>

#include "mpa/text.hpp"

namespace mpa {

AlgebraElement AlgebraElement::basis(const MultisetPartition& pi) {
    if (pi.rows() != 2) throw std::invalid_argument("basis elements are indexed by two-row partitions");
    AlgebraElement e(pi.r(), pi.k());
    e.terms_.emplace(pi, PolyX(Rational(1)));
    return e;
}

void AlgebraElement::add_term(const MultisetPartition& pi, const PolyX& coeff) {
    if (pi.rows() != 2 || pi.r() != r_ || pi.k() != k_)
        throw std::invalid_argument("term does not lie in Pi_{r,k}");
    auto it = terms_.find(pi);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(pi, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (o.r_ != r_ || o.k_ != k_) throw std::invalid_argument("algebra dimension mismatch");
    AlgebraElement out = *this;
    for (const auto& [pi, c] : o.terms_) out.add_term(pi, c);
    return out;
}

AlgebraElement AlgebraElement::operator*(const PolyX& s) const {
    AlgebraElement out(r_, k_);
    for (const auto& [pi, c] : terms_) out.add_term(pi, c * s);
    return out;
}

std::map<MultisetPartition, Rational> AlgebraElement::evaluate_at(long n) const {
    std::map<MultisetPartition, Rational> out;
    for (const auto& [pi, c] : terms_) {
        Rational v = c.evaluate(Rational(n));
        if (v != 0) out.emplace(pi, v);
    }
    return out;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [pi, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*X" << format_msp(pi);
    }
    return out.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.r() != b.r() || a.k() != b.k()) throw std::invalid_argument("algebra dimension mismatch");
    AlgebraElement out(a.r(), a.k());
    for (const auto& [pi, ca] : a.terms()) {
        for (const auto& [gamma, cb] : b.terms()) {
            PolyX scale = ca * cb;
            for (const auto& nu : enumerate_gluings(pi, gamma)) {
                PolyX coeff = coeff_b(nu) * Rational(coeff_a(nu)) * scale;
                out.add_term(nu.restrict({0, 2}), coeff);
            }
        }
    }
    return out;
}

AlgebraElement identity_element(int r, int k, const Limits& limits) {
    if (r < 0 || k < 1) throw std::invalid_argument("identity_element: need r >= 0, k >= 1");
    AlgebraElement out(r, k);
    // Self-symmetric partitions are in bijection with their barred halves:
    // enumerate partitions of the barred content alone and mirror them.
    for (const auto& half : enumerate_partitions({r}, k, std::nullopt, limits)) {
        std::vector<Multiset> blocks;
        for (const auto& hb : half.blocks()) {
            std::vector<int> e(2 * k, 0);
            for (int i = 0; i < k; ++i) e[i] = e[k + i] = hb.exponents()[i];
            blocks.emplace_back(std::move(e));
        }
        out.add_term(MultisetPartition(k, 2, std::move(blocks)), PolyX(Rational(1)));
    }
    return out;
}

AlgebraElement bar_involution(const AlgebraElement& a) {
    AlgebraElement out(a.r(), a.k());
    for (const auto& [pi, c] : a.terms()) out.add_term(pi.bar_involution(), c);
    return out;
}

}  // namespace mpa
