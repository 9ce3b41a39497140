#pragma once

#include <map>

#include "mpa/msp.hpp"
#include "mpa/poly.hpp"

namespace mpa {

/// An element of the multiset partition algebra: a finite linear combination
/// of canonical basis partitions with polynomial coefficients in x.  Values
/// are immutable; all operations return fresh elements.  Zero coefficients
/// are pruned so map equality is element equality.
class AlgebraElement {
public:
    AlgebraElement(int r, int k) : r_(r), k_(k) {}

    static AlgebraElement basis(const MultisetPartition& pi);
    static AlgebraElement zero(int r, int k) { return {r, k}; }

    int r() const { return r_; }
    int k() const { return k_; }
    const std::map<MultisetPartition, PolyX>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PolyX coefficient(const MultisetPartition& pi) const {
        auto it = terms_.find(pi);
        return it == terms_.end() ? PolyX() : it->second;
    }

    void add_term(const MultisetPartition& pi, const PolyX& coeff);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator*(const PolyX& s) const;
    bool operator==(const AlgebraElement& o) const = default;

    /// Specialize x = n in every coefficient; zero values dropped.
    std::map<MultisetPartition, Rational> evaluate_at(long n) const;

    std::string str() const;

private:
    int r_;
    int k_;
    std::map<MultisetPartition, PolyX> terms_;
};

/// The structural product: bilinear extension of
///   X_pi . X_gamma = sum over gluings nu of a_nu b_nu(x) X_{nu|{top,bot}}.
/// Throws on r/k mismatch.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// I_{r,k}: coefficient 1 on every self-symmetric element of Pi_{r,k}.
AlgebraElement identity_element(int r, int k, const Limits& limits = {});

/// X_pi -> X_{pi-bar} extended linearly; an algebra antihomomorphism.
AlgebraElement bar_involution(const AlgebraElement& a);

}  // namespace mpa
