#include "mpa/golden.hpp"

#include <sstream>

#include "mpa/algebra.hpp"
#include "mpa/centralizer.hpp"
#include "mpa/symfunc.hpp"
#include "mpa/text.hpp"

namespace mpa {

namespace {

MultisetPartition three_row(int k, const std::vector<std::vector<int>>& exps) {
    std::vector<Multiset> blocks;
    for (const auto& e : exps) blocks.emplace_back(e);
    return {k, 3, std::move(blocks)};
}

AlgebraElement expected_element(int r, int k,
                                const std::vector<std::pair<std::string, PolyX>>& terms) {
    AlgebraElement e(r, k);
    for (const auto& [text, poly] : terms) e.add_term(parse_msp(text, k), poly);
    return e;
}

PolyX linear(long c0, long c1) {  // c1*x + c0
    PolyX p{Rational(c0)};
    p.add_to(1, Rational(c1));
    return p;
}

void check(std::vector<GoldenResult>& out, const std::string& name, bool pass,
           const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
}

}  // namespace

std::vector<GoldenResult> run_golden_checks() {
    std::vector<GoldenResult> out;

    {
        // Square of X_pi for pi = {{1},{1,1'},{1'}} in MP_{2,1}(x).
        auto pi = parse_msp("[[1],[1,1'],[1']]", 1);
        auto product = multiply(AlgebraElement::basis(pi), AlgebraElement::basis(pi));
        auto expected = expected_element(2, 1,
                                         {{"[[1],[1'],[1,1']]", linear(-2, 1)},
                                          {"[[1,1'],[1,1']]", linear(-4, 2)},
                                          {"[[1],[1],[1'],[1']]", PolyX(Rational(4))}});
        check(out, "square of X[[1],[1,1'],[1']] in MP_{2,1}(x)", product == expected,
              "got " + product.str());
    }
    {
        // Product with r=4, k=2 and four contributing gluings.
        auto pi = parse_msp("[[1,1],[1',2'],[1,2,1',2']]", 2);
        auto gamma = parse_msp("[[1,2],[1',1'],[1,2,1',1']]", 2);
        auto product = multiply(AlgebraElement::basis(pi), AlgebraElement::basis(gamma));
        auto expected = expected_element(
            4, 2,
            {{"[[1,1],[1',1'],[1,2,1',1']]", linear(-3, 1)},
             {"[[1,1,1',1'],[1,2,1',1']]", linear(-2, 1)},
             {"[[1,1,1',1'],[1,2],[1',1']]", PolyX(Rational(1))},
             {"[[1,1],[1',1'],[1,2],[1',1']]", PolyX(Rational(2))}});
        check(out, "product of the r=4, k=2 pair", product == expected, "got " + product.str());
    }
    {
        // Structure-constant coefficients of the r=9, k=2 gluing.
        auto nu = three_row(2, {{1, 0, 0, 0, 0, 0},
                                {1, 0, 1, 0, 0, 0},
                                {1, 0, 0, 1, 0, 0},
                                {1, 0, 0, 1, 0, 0},
                                {1, 0, 0, 0, 0, 1},
                                {1, 1, 0, 0, 1, 0},
                                {1, 1, 0, 0, 2, 0},
                                {0, 0, 1, 0, 0, 0},
                                {0, 0, 1, 0, 0, 0},
                                {0, 0, 1, 1, 0, 0},
                                {0, 0, 1, 1, 1, 0},
                                {0, 0, 0, 0, 0, 2},
                                {0, 0, 0, 0, 0, 2}});
        bool a_ok = coeff_a(nu) == 12;
        PolyX expected_b =
            PolyX::falling_factorial_from(10, 3) * make_rational(1, 2);
        bool b_ok = coeff_b(nu) == expected_b;
        check(out, "a_nu = 12 on the r=9, k=2 example", a_ok, "got " + coeff_a(nu).get_str());
        check(out, "b_nu = (x-10)(x-11)(x-12)/2 on the r=9, k=2 example", b_ok,
              "got " + coeff_b(nu).str());
    }
    {
        // Headline dimensions of A_{3,4}(n).
        const long expected[] = {22736, 33712, 36912, 37312, 37312};
        bool ok = true;
        std::ostringstream got;
        for (int n = 3; n <= 7; ++n) {
            Integer d = algebra_dim(n, 3, 4);
            got << d.get_str() << " ";
            ok = ok && d == expected[n - 3];
        }
        check(out, "dim A_{3,4}(n) = 22736, 33712, 36912, 37312 (stable)", ok, "got " + got.str());
    }
    {
        auto id = identity_element(1, 1);
        auto expected = expected_element(1, 1, {{"[[1,1']]", PolyX(Rational(1))}});
        check(out, "identity of MP_{1,1}(x) is X[[1,1']]", id == expected, "got " + id.str());
    }
    {
        // Oracle agreement on the squared example at n = 4.
        auto pi = parse_msp("[[1],[1,1'],[1']]", 1);
        auto res = verify_isomorphism(pi, pi, 4);
        check(out, "orbit-basis oracle matches the squared example at n=4", res.match,
              res.match ? "" : "coefficient mismatch");
    }

    return out;
}

}  // namespace mpa
