#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpa/rational.hpp"

namespace mpa {

/// Truncated formal power series in a few named variables with exact rational
/// coefficients.  Terms beyond the per-variable truncation degrees are
/// silently dropped, so ring operations stay closed under the truncation.
class QSeries {
public:
    QSeries(std::vector<char> vars, std::vector<int> truncation);

    static QSeries one(std::vector<char> vars, std::vector<int> truncation);

    /// (1 - monomial)^{-power}, truncated.
    static QSeries inv_power_one_minus(std::vector<char> vars, std::vector<int> truncation,
                                       const std::vector<int>& monomial, const Integer& power);

    const std::vector<char>& vars() const { return vars_; }
    const std::vector<int>& truncation() const { return trunc_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rational& c);
    Rational coefficient(const std::vector<int>& exps) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Rational& s) const;

    std::string str() const;

private:
    bool within(const std::vector<int>& exps) const;

    std::vector<char> vars_;
    std::vector<int> trunc_;
    std::map<std::vector<int>, Rational> terms_;
};

}  // namespace mpa
