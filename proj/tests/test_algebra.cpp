#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mpa/algebra.hpp"
#include "mpa/text.hpp"

using namespace mpa;

namespace {

PolyX linear(long c0, long c1) {
    PolyX p{Rational(c0)};
    p.add_to(1, Rational(c1));
    return p;
}

AlgebraElement basis_of(const std::string& text, int k) {
    return AlgebraElement::basis(parse_msp(text, k));
}

}  // namespace

TEST_CASE("the squared worked product in MP_{2,1}(x)") {
    auto x_pi = basis_of("[[1],[1,1'],[1']]", 1);
    auto sq = multiply(x_pi, x_pi);
    REQUIRE(sq.terms().size() == 3);
    CHECK(sq.coefficient(parse_msp("[[1],[1'],[1,1']]", 1)) == linear(-2, 1));
    CHECK(sq.coefficient(parse_msp("[[1,1'],[1,1']]", 1)) == linear(-4, 2));
    CHECK(sq.coefficient(parse_msp("[[1],[1],[1'],[1']]", 1)) == PolyX(Rational(4)));
}

TEST_CASE("the r=4, k=2 worked product") {
    auto prod = multiply(basis_of("[[1,1],[1',2'],[1,2,1',2']]", 2),
                         basis_of("[[1,2],[1',1'],[1,2,1',1']]", 2));
    REQUIRE(prod.terms().size() == 4);
    CHECK(prod.coefficient(parse_msp("[[1,1],[1',1'],[1,2,1',1']]", 2)) == linear(-3, 1));
    CHECK(prod.coefficient(parse_msp("[[1,1,1',1'],[1,2,1',1']]", 2)) == linear(-2, 1));
    CHECK(prod.coefficient(parse_msp("[[1,1,1',1'],[1,2],[1',1']]", 2)) == PolyX(Rational(1)));
    CHECK(prod.coefficient(parse_msp("[[1,1],[1',1'],[1,2],[1',1']]", 2)) == PolyX(Rational(2)));
}

TEST_CASE("incompatible rows multiply to zero") {
    auto prod = multiply(basis_of("[[1,1']]", 2), basis_of("[[2],[1']]", 2));
    CHECK(prod.is_zero());
    CHECK_THROWS_AS(multiply(basis_of("[[1,1']]", 1), basis_of("[[1],[1'],[1,1']]", 1)),
                    std::invalid_argument);
}

TEST_CASE("identity element") {
    CHECK(identity_element(1, 1) == basis_of("[[1,1']]", 1));

    for (const auto& [r, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
        auto id = identity_element(r, k);
        for (const auto& gamma : enumerate_msp(r, k)) {
            auto x = AlgebraElement::basis(gamma);
            CHECK(multiply(id, x) == x);
            CHECK(multiply(x, id) == x);
        }
    }

    // r = 0 convention: the empty partition spans, and is idempotent.
    auto id0 = identity_element(0, 2);
    CHECK(multiply(id0, id0) == id0);
}

TEST_CASE("bar involution") {
    auto fixed = basis_of("[[1],[1']]", 1);
    CHECK(bar_involution(fixed) == fixed);

    auto swapped = bar_involution(basis_of("[[1,2,2'],[2,1',2']]", 2));
    CHECK(swapped == basis_of("[[2,1',2'],[1,2,2']]", 2));  // parser re-canonicalizes

    auto all = enumerate_msp(2, 1);
    for (const auto& pi : all) {
        auto x = AlgebraElement::basis(pi);
        CHECK(bar_involution(bar_involution(x)) == x);
        for (const auto& gamma : all) {
            auto y = AlgebraElement::basis(gamma);
            CHECK(bar_involution(multiply(x, y)) == multiply(bar_involution(y), bar_involution(x)));
        }
    }
}

TEST_CASE("evaluation at integers") {
    auto x_pi = basis_of("[[1],[1,1'],[1']]", 1);
    auto sq = multiply(x_pi, x_pi);

    auto at2 = sq.evaluate_at(2);
    REQUIRE(at2.size() == 1);  // the x-2 coefficients vanish
    CHECK(at2.at(parse_msp("[[1],[1],[1'],[1']]", 1)) == 4);

    auto at4 = sq.evaluate_at(4);
    CHECK(at4.at(parse_msp("[[1],[1'],[1,1']]", 1)) == 2);
    CHECK(at4.at(parse_msp("[[1,1'],[1,1']]", 1)) == 4);
    CHECK(at4.at(parse_msp("[[1],[1],[1'],[1']]", 1)) == 4);

    for (int n = 1; n <= 5; ++n) {
        auto id = identity_element(1, 1).evaluate_at(n);
        REQUIRE(id.size() == 1);
        CHECK(id.begin()->second == 1);
    }
}

TEST_CASE("structure constants evaluate to non-negative integers for n >= 2r") {
    auto all = enumerate_msp(2, 1);
    for (const auto& pi : all)
        for (const auto& gamma : all) {
            auto prod = multiply(AlgebraElement::basis(pi), AlgebraElement::basis(gamma));
            for (const auto& [tau, poly] : prod.terms()) {
                CHECK(tau.r() == 2);  // grading
                for (int n = 4; n <= 7; ++n) {
                    Rational v = poly.evaluate(Rational(n));
                    CHECK(is_integral(v));
                    CHECK(v >= 0);
                }
            }
        }
}

TEST_CASE("associativity on random triples") {
    auto all = enumerate_msp(2, 1);
    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = AlgebraElement::basis(all[pick(rng)]);
        auto b = AlgebraElement::basis(all[pick(rng)]);
        auto c = AlgebraElement::basis(all[pick(rng)]);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}
