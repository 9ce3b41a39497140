#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "mpa/msp.hpp"
#include "mpa/symfunc.hpp"

using namespace mpa;

namespace {

// ---- brute-force Schur polynomial oracle (monomial expansion) -------------
// Independent of the production Littlewood-Richardson path: polynomials in m
// variables as exponent-vector maps, Schur polynomials by direct semistandard
// tableau enumeration, Schur decomposition by leading-monomial subtraction.

using Mono = std::vector<int>;
using Poly = std::map<Mono, long long>;

Poly schur_poly(const IntPartition& lambda, int m) {
    Poly out;
    if (lambda.empty()) {
        out[Mono(m, 0)] = 1;
        return out;
    }
    int rows = static_cast<int>(lambda.size());
    if (rows > m) return out;
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(lambda[i], 0);
    std::function<void(int, int)> rec = [&](int row, int col) {
        if (row == rows) {
            Mono e(m, 0);
            for (const auto& tr : t)
                for (int v : tr) ++e[v - 1];
            ++out[e];
            return;
        }
        int nr = row, nc = col + 1;
        if (nc == lambda[row]) {
            nr = row + 1;
            nc = 0;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, t[row][col - 1]);
        if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
        for (int v = lo; v <= m; ++v) {
            t[row][col] = v;
            rec(nr, nc);
        }
        t[row][col] = 0;
    };
    rec(0, 0);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b, int m) {
    Poly out;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            Mono e(m);
            for (int i = 0; i < m; ++i) e[i] = e1[i] + e2[i];
            out[e] += c1 * c2;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<IntPartition, long long> schur_decompose(Poly p, int m) {
    std::map<IntPartition, long long> out;
    while (!p.empty()) {
        auto lead = std::prev(p.end());  // lexicographically largest exponent
        Mono e = lead->first;
        long long c = lead->second;
        IntPartition lambda;
        for (int v : e)
            if (v) lambda.push_back(v);
        REQUIRE(is_partition(lambda));  // symmetric input
        out[lambda] += c;
        for (const auto& [e2, c2] : schur_poly(lambda, m)) {
            auto it = p.find(e2);
            long long nv = (it == p.end() ? 0 : it->second) - c * c2;
            if (nv == 0) {
                if (it != p.end()) p.erase(it);
            } else
                p[e2] = nv;
        }
    }
    return out;
}

// number of partitions of r into parts of size at most n
long long bounded_partition_count(int r, int n) {
    std::vector<long long> dp(r + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int v = part; v <= r; ++v) dp[v] += dp[v - part];
    return dp[r];
}

long long sign_of_class(const IntPartition& gamma) {
    int transpositions = 0;
    for (int part : gamma) transpositions += part - 1;
    return transpositions % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("partition helpers") {
    CHECK(partitions_of(4) == std::vector<IntPartition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_of(0) == std::vector<IntPartition>{{}});
    CHECK(z_of({2, 1, 1}) == 4);   // 2 * 1^2 * 2!
    CHECK(z_of({3, 3}) == 18);     // 3^2 * 2!
    CHECK(conjugate({3, 1}) == IntPartition{2, 1, 1});
}

TEST_CASE("characters: known values") {
    for (const auto& gamma : partitions_of(5)) {
        CHECK(character({5}, gamma) == 1);
        CHECK(character(IntPartition(5, 1), gamma) == sign_of_class(gamma));
    }
    CHECK(character({2, 1}, {1, 1, 1}) == 2);
    CHECK_THROWS_AS(character({2, 1}, {4}), std::invalid_argument);
}

TEST_CASE("character table orthogonality up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        CharacterTable table(n);
        const auto& parts = table.index();
        size_t m = parts.size();
        // rows: sum_gamma chi(l) chi(m) / z_gamma = delta
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a; b < m; ++b) {
                Rational s(0);
                for (size_t g = 0; g < m; ++g)
                    s += rational_of(Integer(static_cast<long>(table.value(a, g) * table.value(b, g))),
                                  z_of(parts[g]));
                CHECK(s == (a == b ? 1 : 0));
            }
        // columns: sum_lambda chi(g) chi(d) = delta * z_g
        for (size_t g = 0; g < m; ++g)
            for (size_t d = g; d < m; ++d) {
                long long s = 0;
                for (size_t a = 0; a < m; ++a) s += table.value(a, g) * table.value(a, d);
                CHECK(Integer(static_cast<long>(s)) == (g == d ? z_of(parts[g]) : Integer(0)));
            }
    }
}

TEST_CASE("kronecker coefficients") {
    auto parts4 = partitions_of(4);
    for (const auto& mu : parts4)
        for (const auto& nu : parts4) {
            CHECK(kronecker_coefficient({4}, mu, nu) == (mu == nu ? 1 : 0));
            CHECK(kronecker_coefficient({1, 1, 1, 1}, mu, nu) == (conjugate(mu) == nu ? 1 : 0));
        }
    CHECK(kronecker_coefficient({2, 1}, {2, 1}, {2, 1}) == 1);

    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> pick(0, parts4.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        IntPartition a = parts4[pick(rng)], b = parts4[pick(rng)], c = parts4[pick(rng)];
        long long g = kronecker_coefficient(a, b, c);
        CHECK(g == kronecker_coefficient(a, c, b));
        CHECK(g == kronecker_coefficient(b, a, c));
        CHECK(g == kronecker_coefficient(b, c, a));
        CHECK(g == kronecker_coefficient(c, a, b));
        CHECK(g == kronecker_coefficient(c, b, a));
    }
}

TEST_CASE("littlewood-richardson: fixtures") {
    CHECK(lr_coefficient({{3, 1}}, {3, 1}) == 1);
    CHECK(lr_coefficient({{1}, {1}, {1}}, {2, 1}) == 2);
    CHECK(lr_coefficient({{2}, {1, 1}}, {3, 1}) == 1);

    auto p = schur_product({1}, {1});
    CHECK(p == std::map<IntPartition, long long>{{{2}, 1}, {{1, 1}, 1}});
}

TEST_CASE("littlewood-richardson matches the monomial-expansion oracle") {
    std::mt19937 rng(11);
    std::vector<IntPartition> shapes = {{1}, {2}, {1, 1}, {2, 1}, {3}, {2, 2}, {3, 1}, {1, 1, 1}};
    std::uniform_int_distribution<size_t> pick(0, shapes.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        IntPartition kappa = shapes[pick(rng)], tau = shapes[pick(rng)];
        int total = partition_size(kappa) + partition_size(tau);
        if (total > 7) continue;
        int m = total;  // enough variables to see every term
        auto oracle = schur_decompose(poly_mul(schur_poly(kappa, m), schur_poly(tau, m), m), m);
        CHECK(schur_product(kappa, tau) == oracle);
    }
}

TEST_CASE("plethysm series") {
    auto s = plethysm_series({1}, 1, 6);
    for (int d = 0; d <= 6; ++d) CHECK(s.coefficient({d}) == 1);

    for (int n = 1; n <= 4; ++n) {
        auto h = plethysm_series({n}, 1, 6);
        for (int d = 0; d <= 6; ++d)
            CHECK(h.coefficient({d}) == Rational(static_cast<long>(bounded_partition_count(d, n))));
    }

    // Eq-dim cross-check at the headline size
    Integer sum = 0;
    for (const auto& lambda : partitions_of(3)) {
        Integer d = irrep_dimension(lambda, 4, 3);
        sum += d * d;
    }
    CHECK(sum == 22736);
}

namespace {

// sum_r t^r s_r[V] for a finite alphabet V of q-powers: prod_v 1/(1 - t q^v).
QSeries omega_series(const std::vector<int>& powers, int qdeg, int tdeg) {
    QSeries s = QSeries::one({'q', 't'}, {qdeg, tdeg});
    for (int v : powers)
        s = s * QSeries::inv_power_one_minus({'q', 't'}, {qdeg, tdeg}, {v, 1}, 1);
    return s;
}

}  // namespace

TEST_CASE("omega additivity: s_r[X+Y] = sum_a s_a[X] s_{r-a}[Y] on q-specializations") {
    const int D = 6, R = 4;
    std::vector<int> x_powers{0, 1, 1, 3};  // X = 1 + 2q + q^3
    std::vector<int> y_powers{1, 2, 2};     // Y = q + 2q^2
    std::vector<int> both(x_powers);
    both.insert(both.end(), y_powers.begin(), y_powers.end());

    QSeries ox = omega_series(x_powers, D, R);
    QSeries oy = omega_series(y_powers, D, R);
    QSeries oxy = omega_series(both, D, R);
    CHECK(oxy.terms() == (ox * oy).terms());  // omega[X+Y] = omega[X] omega[Y]

    // per-degree form: s_r[X+Y] = sum_a s_a[X] s_{r-a}[Y]
    for (int r = 0; r <= R; ++r)
        for (int d = 0; d <= D; ++d) {
            Rational lhs = oxy.coefficient({d, r});
            Rational rhs(0);
            for (int a = 0; a <= r; ++a)
                for (int e = 0; e <= d; ++e)
                    rhs += ox.coefficient({e, a}) * oy.coefficient({d - e, r - a});
            CHECK(lhs == rhs);
        }
}

TEST_CASE("minimum degree thresholds") {
    for (int k : {1, 2, 3}) CHECK(min_degree_threshold({4}, k) == 0);
    for (const auto& lambda : partitions_of(5)) {
        long expected = 0;
        for (size_t i = 0; i < lambda.size(); ++i) expected += static_cast<long>(i) * lambda[i];
        CHECK(min_degree_threshold(lambda, 1) == expected);
    }
    CHECK(min_degree_threshold({1, 1, 1}, 2) == 2);

    // consistency with the series over small sizes
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& lambda : partitions_of(n)) {
                long t = min_degree_threshold(lambda, k);
                auto s = plethysm_series(lambda, k, static_cast<int>(t) + 2);
                for (long d = 0; d < t; ++d) CHECK(s.coefficient({static_cast<int>(d)}) == 0);
                CHECK(s.coefficient({static_cast<int>(t)}) != 0);
            }
}

TEST_CASE("algebra dimension generating function") {
    CHECK(algebra_dim(2, 2, 1) == static_cast<long>(enumerate_msp(2, 1, 2).size()));
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            CHECK(algebra_dim(n, 1, k) == static_cast<long>(enumerate_msp(1, k, n).size()));
    for (int n = 4; n <= 6; ++n)
        CHECK(algebra_dim(n, 2, 2) == static_cast<long>(enumerate_msp(2, 2).size()));

    CHECK_THROWS_AS(algebra_dim(1000000, 1000, 2), ResourceLimitError);
}

TEST_CASE("three routes to dim A_{r,k}(n) agree across the grid") {
    // squared irreducible dimensions == generating function == partition count
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 6; ++n) {
                Integer squares = 0;
                for (const auto& lambda : partitions_of(n)) {
                    Integer w = irrep_dimension(lambda, k, r);
                    squares += w * w;
                }
                Integer gf = algebra_dim(n, r, k);
                long long count = count_partitions({r, r}, k, n);
                CHECK(squares == gf);
                CHECK(gf == Integer(static_cast<long>(count)));
            }
}

TEST_CASE("branching multiplicities") {
    auto parts4 = partitions_of(4);
    for (const auto& lambda : parts4)
        for (const auto& mu : parts4) CHECK(branching_multiplicity(lambda, mu, 0) == (lambda == mu));

    CHECK(branching_multiplicity({4}, {4}, 1) == 1);
    CHECK(branching_multiplicity({3, 1}, {4}, 1) == 1);

    // d = 1: remove a corner of mu, then add a corner to reach lambda
    for (const auto& lambda : parts4)
        for (const auto& mu : parts4) {
            long long count = 0;
            for (size_t i = 0; i < mu.size(); ++i) {
                if (i + 1 < mu.size() && mu[i] == mu[i + 1]) continue;  // not a corner
                IntPartition removed = mu;
                if (--removed[i] == 0) removed.pop_back();
                for (size_t j = 0; j <= removed.size(); ++j) {
                    IntPartition added = removed;
                    if (j == removed.size())
                        added.push_back(1);
                    else
                        ++added[j];
                    if (is_partition(added) && added == lambda) ++count;
                }
            }
            CHECK(branching_multiplicity(lambda, mu, 1) == count);
        }

    // the two formulas are asserted equal inside branching_multiplicity; push
    // them through d = 2 as well
    for (const auto& lambda : partitions_of(3))
        for (const auto& mu : partitions_of(3))
            for (int d = 0; d <= 2; ++d) CHECK(branching_multiplicity(lambda, mu, d) >= 0);
}

TEST_CASE("branching decomposes the plethysm dimensions") {
    // dim W^lambda_{A_{r,k}} = sum_{d,mu} mult(lambda,mu,d) dim W^mu_{A_{r-d,k-1}}
    const int n = 3, r = 2, k = 2;
    for (const auto& lambda : partitions_of(n)) {
        Rational total(0);
        for (int d = 0; d <= r; ++d)
            for (const auto& mu : partitions_of(n)) {
                long long b = branching_multiplicity(lambda, mu, d);
                if (!b) continue;
                total += Rational(static_cast<long>(b)) *
                         plethysm_series(mu, k - 1, r - d).coefficient({r - d});
            }
        CHECK(total == plethysm_series(lambda, k, r).coefficient({r}));
    }
}

TEST_CASE("restriction multiplicities") {
    auto parts4 = partitions_of(4);
    for (const auto& lambda : parts4) CHECK(restriction_multiplicity(lambda, lambda, {4}) == 1);

    // dimension bookkeeping at (n, r, k, l) = (3, 2, 1, 1)
    const int n = 3, r = 2, kk = 1, ll = 1;
    for (const auto& lambda : partitions_of(n)) {
        Rational total(0);
        for (int d = 0; d <= r; ++d)
            for (const auto& nu : partitions_of(n))
                for (const auto& gamma : partitions_of(n)) {
                    long long g = restriction_multiplicity(lambda, nu, gamma);
                    if (!g) continue;
                    total += Rational(static_cast<long>(g)) *
                             plethysm_series(nu, kk, d).coefficient({d}) *
                             plethysm_series(gamma, ll, r - d).coefficient({r - d});
                }
        CHECK(total == plethysm_series(lambda, kk + ll, r).coefficient({r}));
    }
}
