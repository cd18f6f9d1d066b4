#include "catch_amalgamated.hpp"

#include "chowlab/poly.hpp"
#include "chowlab/realroot.hpp"

using namespace chowlab;

namespace {
IntPolynomial poly(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return IntPolynomial(std::move(v));
}

// (t + r1)(t + r2)...
IntPolynomial from_neg_roots(std::vector<long> rs) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (long r : rs) p = p * poly({r, 1});
    return p;
}
}  // namespace

TEST_CASE("root counting") {
    IntPolynomial p = from_neg_roots({1, 2, 3});
    CHECK(real_root_count(p) == 3);
    CHECK(real_root_count(p, Rat(-3), Rat(0)) == 2);   // (-3, 0] excludes the root at -3
    CHECK(real_root_count(p, Rat(-4), Rat(-1)) == 3);  // half-open catches -1
    CHECK(real_root_count(p, Rat(-2), Rat(0)) == 1);
    CHECK(real_root_count(poly({1, 0, 1})) == 0);  // t^2 + 1
    CHECK(real_root_count(poly({1, 1, 1})) == 0);
}

TEST_CASE("root counting ignores multiplicity but real-rootedness does not") {
    IntPolynomial p = poly({1, 2, 1});  // (t+1)^2
    CHECK(real_root_count(p) == 1);
    CHECK(is_real_rooted(p));
    CHECK(is_real_rooted(from_neg_roots({1, 2, 3})));
    CHECK(is_real_rooted(poly({1, 4, 1})));
    CHECK_FALSE(is_real_rooted(poly({1, 1, 1})));
    CHECK_FALSE(is_real_rooted(poly({1, 0, 0, 1}) * poly({1, 1})));  // one real root of t^3+1 times linear
    CHECK(is_real_rooted(poly({5})));
}

TEST_CASE("yun factorization") {
    // (t+1)^2 (t+2)
    IntPolynomial p = poly({1, 2, 1}) * poly({2, 1});
    auto fs = yun_factors(p);
    REQUIRE(fs.size() == 2);
    CHECK(detail::rp_deg(fs[0]) == 1);  // t + 2
    CHECK(detail::rp_deg(fs[1]) == 1);  // t + 1
    CHECK(detail::rp_eval(fs[0], Rat(-2)) == 0);
    CHECK(detail::rp_eval(fs[1], Rat(-1)) == 0);
}

TEST_CASE("root isolation with multiplicities") {
    IntPolynomial p = poly({1, 2, 1}) * poly({2, 1}) * poly({-3, 1});  // (t+1)^2 (t+2)(t-3)
    RootIsolation iso = isolate_roots(p);
    REQUIRE(iso.intervals.size() == 3);
    CHECK(iso.root_count_with_multiplicity() == 4);
    // Intervals are increasing and each contains the expected root.
    CHECK(iso.intervals[0].multiplicity == 1);  // -2
    CHECK(iso.intervals[1].multiplicity == 2);  // -1
    CHECK(iso.intervals[2].multiplicity == 1);  // 3
    for (const auto& iv : iso.intervals) CHECK(iv.lo < iv.hi);
}

TEST_CASE("interlacing of pairs") {
    IntPolynomial p = from_neg_roots({2, 4});
    IntPolynomial q = from_neg_roots({1, 3});
    // roots of q (-1, -3) weakly alternate above roots of p (-2, -4)
    CHECK(interlaces(p, q));
    CHECK_FALSE(interlaces(q, p));

    // Derivative interlaces from below: interlaces(p', p).
    IntPolynomial r = from_neg_roots({1, 3});
    CHECK(interlaces(r.derivative(), r));

    // Degree gap of two is rejected.
    CHECK_FALSE(interlaces(poly({1}), from_neg_roots({1, 2})));
    // Shared roots are fine under weak alternation.
    CHECK(interlaces(poly({1, 2, 1}), poly({1, 2, 1})));
    CHECK(interlaces(from_neg_roots({1}), from_neg_roots({1, 2})));
    // Zero polynomial interlaces everything.
    CHECK(interlaces(IntPolynomial(), p));
    CHECK(interlaces(p, IntPolynomial()));
    CHECK_THROWS_AS(interlaces(poly({1, 1, 1}), p), std::invalid_argument);
}

TEST_CASE("interlacing sequences") {
    // p_i = (t+3-i)(t+6-i): shifting roots upward keeps the sequence
    // interlacing in order.
    std::vector<IntPolynomial> good = {from_neg_roots({3, 6}), from_neg_roots({2, 5}),
                                       from_neg_roots({1, 4})};
    CHECK(is_interlacing_sequence(good));
    std::vector<IntPolynomial> bad = {from_neg_roots({3, 6}), from_neg_roots({1, 4}),
                                      from_neg_roots({2, 5})};
    CHECK_FALSE(is_interlacing_sequence(bad));
}
