#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mpa {

// Exact arithmetic used throughout: no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

/// The two-argument mpq_class constructor does not canonicalize; every
/// num/den construction must go through here.
inline Rational rational_of(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q{num, den};
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) { return rational_of(Integer(num), Integer(den)); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Converts an integer-valued rational; throws if a fractional part is present.
inline Integer to_integer(const Rational& q) {
    if (!is_integral(q)) throw std::domain_error("rational is not an integer: " + q.get_str());
    return q.get_num();
}

inline Integer factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace mpa
