#include "catch_amalgamated.hpp"

#include "chowlab/poly.hpp"

using namespace chowlab;

namespace {
IntPolynomial poly(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return IntPolynomial(std::move(v));
}
}  // namespace

TEST_CASE("arithmetic and normalization") {
    IntPolynomial a = poly({1, 4, 1});
    IntPolynomial b = poly({0, 1});
    CHECK((a + b) == poly({1, 5, 1}));
    CHECK((a - a).is_zero());
    CHECK((a * b) == poly({0, 1, 4, 1}));
    CHECK((a * Int(2)) == poly({2, 8, 2}));
    CHECK(IntPolynomial({Int(1), Int(0), Int(0)}).degree() == 0);
    CHECK(IntPolynomial::monomial(3, 2) == poly({0, 0, 0, 2}));
    CHECK(a.coeff(1) == 4);
    CHECK(a.coeff(7) == 0);
    CHECK(a.coeff_sum() == 6);
    CHECK(a.eval_int(2) == 13);
    CHECK(a.eval(Rat(1, 2)) == Rat(13, 4));
    CHECK(a.derivative() == poly({4, 2}));
}

TEST_CASE("shift down") {
    CHECK(poly({0, 0, 1, 2}).shift_down(2) == poly({1, 2}));
    CHECK_THROWS_AS(poly({0, 1, 1}).shift_down(2), std::invalid_argument);
}

TEST_CASE("text form") {
    CHECK(poly({1, 4, 1}).str() == "1 + 4*t + t^2");
    CHECK(poly({0, 1, -3}).str() == "t - 3*t^2");
    CHECK(poly({-1}).str() == "-1");
    CHECK(IntPolynomial().str() == "0");
}

TEST_CASE("palindromicity and gamma vector") {
    CHECK(is_palindromic(poly({1, 4, 1}), 2));
    CHECK_FALSE(is_palindromic(poly({1, 4, 2}), 2));
    CHECK(is_palindromic(poly({0, 1, 1, 0}), 3));  // stripped to degree 2, center 3
    auto gamma = gamma_vector(poly({1, 4, 1}));
    REQUIRE(gamma.size() == 2);
    CHECK(gamma[0] == 1);
    CHECK(gamma[1] == 2);
    CHECK_THROWS_AS(gamma_vector(poly({1, 4, 2})), std::invalid_argument);
}

TEST_CASE("unimodality and log concavity") {
    CHECK(is_unimodal(poly({1, 4, 1})));
    CHECK(is_unimodal(poly({1, 2, 3})));
    CHECK_FALSE(is_unimodal(poly({3, 1, 3})));
    CHECK(is_log_concave(poly({1, 4, 1})));
    CHECK_FALSE(is_log_concave(poly({1, 1, 4})));
    CHECK_FALSE(is_log_concave(poly({1, 0, 1})));  // internal zero
    CHECK(is_log_concave(poly({0, 0, 2, 3})));
}

TEST_CASE("Eulerian polynomials by two routes") {
    CHECK(eulerian(1) == poly({1}));
    CHECK(eulerian(2) == poly({1, 1}));
    CHECK(eulerian(3) == poly({1, 4, 1}));
    CHECK(eulerian(4) == poly({1, 11, 11, 1}));
    CHECK(eulerian(5) == poly({1, 26, 66, 26, 1}));
    for (int n = 1; n <= 7; ++n) {
        IntPolynomial a = eulerian(n);
        CHECK(a.coeff_sum() == [n] {
            Int f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        }());
        CHECK(is_palindromic(a, n - 1));
    }
}

TEST_CASE("derangement polynomials by two routes") {
    CHECK(derangement_poly(2) == poly({0, 1}));
    CHECK(derangement_poly(3) == poly({0, 1, 1}));
    CHECK(derangement_poly(4) == poly({0, 1, 7, 1}));
    CHECK(derangement_poly(5) == poly({0, 1, 21, 21, 1}));
    for (int n = 2; n <= 7; ++n) CHECK(is_palindromic(derangement_poly(n).shift_down(1), n - 2));
}
