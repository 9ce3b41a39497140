#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpa/poly.hpp"
#include "mpa/qseries.hpp"
#include "mpa/rational.hpp"

using namespace mpa;

TEST_CASE("rational helpers") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-2, -4) == make_rational(1, 2));
    CHECK(is_integral(make_rational(6, 3)));
    CHECK(to_integer(make_rational(6, 3)) == 2);
    CHECK_THROWS_AS(to_integer(make_rational(1, 2)), std::domain_error);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(factorial(6) == 720);
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("polynomial arithmetic and falling factorials") {
    PolyX p = PolyX::falling_factorial_from(10, 3);  // (x-10)(x-11)(x-12)
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(3) == 1);
    CHECK(p.coefficient(2) == -33);
    CHECK(p.coefficient(1) == 362);
    CHECK(p.coefficient(0) == -1320);
    CHECK(p.evaluate(Rational(13)) == 6);
    CHECK(p.evaluate(Rational(11)) == 0);

    PolyX half = p * make_rational(1, 2);
    CHECK(half.evaluate(Rational(13)) == 3);

    PolyX x = PolyX::x();
    CHECK(((x + PolyX(Rational(1))) * (x - PolyX(Rational(1)))).coefficient(0) == -1);
    CHECK((x - x).is_zero());
    CHECK(PolyX::falling_factorial_from(5, 0) == PolyX(Rational(1)));

    CHECK(p.str() == "x^3 - 33*x^2 + 362*x - 1320");
}

TEST_CASE("truncated series arithmetic") {
    auto s = QSeries::inv_power_one_minus({'q'}, {5}, {1}, 2);  // 1/(1-q)^2
    for (int d = 0; d <= 5; ++d) CHECK(s.coefficient({d}) == d + 1);

    auto t = QSeries::inv_power_one_minus({'q'}, {5}, {2}, 1);  // 1/(1-q^2)
    auto prod = s * t;
    // coefficient of q^4 in 1/((1-q)^2 (1-q^2)) = 1+2q+4q^2+6q^3+9q^4...
    CHECK(prod.coefficient({4}) == 9);
    // truncation respected: nothing beyond degree 5
    for (const auto& [e, c] : prod.terms()) CHECK(e[0] <= 5);

    auto one = QSeries::one({'q'}, {5});
    CHECK((one * s).terms() == (s * Rational(1)).terms());
}
