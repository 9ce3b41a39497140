#include "mpa/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mpa {

QSeries::QSeries(std::vector<char> vars, std::vector<int> truncation)
    : vars_(std::move(vars)), trunc_(std::move(truncation)) {
    if (vars_.size() != trunc_.size()) throw std::invalid_argument("QSeries: vars/truncation mismatch");
}

QSeries QSeries::one(std::vector<char> vars, std::vector<int> truncation) {
    QSeries s(std::move(vars), std::move(truncation));
    s.add_term(std::vector<int>(s.vars_.size(), 0), 1);
    return s;
}

bool QSeries::within(const std::vector<int>& exps) const {
    if (exps.size() != trunc_.size()) throw std::invalid_argument("QSeries: exponent arity mismatch");
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < 0 || exps[i] > trunc_[i]) return false;
    return true;
}

void QSeries::add_term(const std::vector<int>& exps, const Rational& c) {
    if (c == 0 || !within(exps)) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational QSeries::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries out(vars_, trunc_);
    std::vector<int> e(vars_.size());
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            bool ok = true;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = e1[i] + e2[i];
                if (e[i] > trunc_[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.add_term(e, c1 * c2);
        }
    }
    return out;
}

QSeries QSeries::operator*(const Rational& s) const {
    QSeries out(vars_, trunc_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

QSeries QSeries::inv_power_one_minus(std::vector<char> vars, std::vector<int> truncation,
                                     const std::vector<int>& monomial, const Integer& power) {
    QSeries out(std::move(vars), std::move(truncation));
    // sum_s binom(power + s - 1, s) * monomial^s, stopping once the monomial
    // escapes the truncation box.
    std::vector<int> e(out.vars_.size(), 0);
    for (long s = 0;; ++s) {
        bool ok = true;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = monomial[i] * static_cast<int>(s);
            if (e[i] > out.trunc_[i]) ok = false;
        }
        if (!ok) break;
        Integer c;
        mpz_bin_ui(c.get_mpz_t(), Integer(power + s - 1).get_mpz_t(), static_cast<unsigned long>(s));
        out.add_term(e, Rational(c));
        bool constant = std::all_of(monomial.begin(), monomial.end(), [](int v) { return v == 0; });
        if (constant) {
            if (s == 0 && power != 0)
                throw std::invalid_argument("inv_power_one_minus: constant monomial does not truncate");
            break;
        }
    }
    return out;
}

std::string QSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str();
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            out << "*" << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace mpa
