#pragma once

#include <map>
#include <string>

#include "mpa/rational.hpp"

namespace mpa {

/// Univariate polynomial in the algebra parameter x with exact rational
/// coefficients.  Zero coefficients are never stored, so map equality is
/// polynomial equality.
class PolyX {
public:
    PolyX() = default;
    explicit PolyX(const Rational& constant) { set(0, constant); }
    static PolyX x() {
        PolyX p;
        p.set(1, 1);
        return p;
    }

    /// (x - a)(x - a - 1)...(x - a - len + 1), the color-counting falling factorial.
    static PolyX falling_factorial_from(long a, long len);

    const std::map<int, Rational>& coefficients() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return coeff_.empty() ? -1 : coeff_.rbegin()->first; }
    Rational coefficient(int deg) const {
        auto it = coeff_.find(deg);
        return it == coeff_.end() ? Rational(0) : it->second;
    }

    void set(int deg, const Rational& v);
    void add_to(int deg, const Rational& v);

    PolyX operator+(const PolyX& o) const;
    PolyX operator-(const PolyX& o) const;
    PolyX operator*(const PolyX& o) const;
    PolyX operator*(const Rational& s) const;
    PolyX& operator+=(const PolyX& o) { return *this = *this + o; }
    bool operator==(const PolyX& o) const { return coeff_ == o.coeff_; }

    Rational evaluate(const Rational& at) const;

    /// Human-readable form, e.g. "x^2 - 3*x + 2".
    std::string str() const;

private:
    std::map<int, Rational> coeff_;
};

}  // namespace mpa
