#include "catch_amalgamated.hpp"

#include <set>

#include "chowlab/normal.hpp"
#include "chowlab/poly.hpp"

using namespace chowlab;

namespace {
Subset labs(const GroundSet& g, std::vector<int> xs) { return Subset::of_labels(g, xs); }
}  // namespace

TEST_CASE("initial segments and the part order") {
    GroundSet g = GroundSet::canonical(4);
    CHECK(is_initial_segment(labs(g, {1, 2}), labs(g, {1, 2, 4})));
    CHECK_FALSE(is_initial_segment(labs(g, {1, 4}), labs(g, {1, 2, 4})));
    CHECK_FALSE(is_initial_segment(Subset(), labs(g, {1, 2})));

    CHECK(triangle_less(labs(g, {1, 2}), labs(g, {1, 3, 4})));
    CHECK_FALSE(triangle_less(labs(g, {1, 3, 4}), labs(g, {1, 2})));
    // {1,3} vs {2,3}: neither precedes the other.
    CHECK_FALSE(triangle_less(labs(g, {1, 3}), labs(g, {2, 3})));
    CHECK_FALSE(triangle_less(labs(g, {2, 3}), labs(g, {1, 3})));
    // A part never precedes one that still contains its maximum: the
    // superset comes first in the order.
    CHECK_FALSE(triangle_less(labs(g, {1, 2}), labs(g, {1, 2, 3})));
    CHECK(triangle_less(labs(g, {1, 2, 3}), labs(g, {1, 2})));
}

TEST_CASE("quadratic normality on [3]") {
    GroundSet g = GroundSet::canonical(3);
    Subset s12 = labs(g, {1, 2}), s13 = labs(g, {1, 3}), s23 = labs(g, {2, 3}),
           s123 = labs(g, {1, 2, 3});
    CHECK(quad_normal(s12, s123));
    CHECK_FALSE(quad_normal(s13, s123));
    CHECK_FALSE(quad_normal(s23, s123));
    CHECK_FALSE(quad_normal(s12, s13));
    CHECK_FALSE(quad_normal(s12, s23));
    CHECK_FALSE(quad_normal(s13, s23));
    CHECK_THROWS_AS(quad_normal(s12, s12), std::invalid_argument);
}

TEST_CASE("NM([3]) is exactly the six monomials of the worked example") {
    GroundSet g = GroundSet::canonical(3);
    std::set<std::string> names;
    for (const NormalMonomial& m : enumerate_normal_monomials(g)) names.insert(to_string(m, g));
    std::set<std::string> expected = {"1",        "h{1,2}",   "h{1,3}",
                                      "h{2,3}",   "h{1,2,3}", "h{1,2,3}*h{1,2}"};
    CHECK(names == expected);
}

TEST_CASE("enumeration counts match factorials") {
    for (int n = 1; n <= 6; ++n) {
        std::size_t count = 0;
        for_each_normal_chain(GroundSet::canonical(n),
                              [&](const std::vector<Subset>&) { ++count; });
        Int expected = 1;
        for (int i = 2; i <= n; ++i) expected *= i;
        CHECK(Int(count) == expected);
    }
}

TEST_CASE("hilbert series of the boolean Chow ring") {
    CHECK(hilbert_boolean(1) == IntPolynomial::constant(1));
    CHECK(hilbert_boolean(3) == IntPolynomial({Int(1), Int(4), Int(1)}));
    for (int n = 1; n <= 7; ++n) CHECK(hilbert_boolean(n) == eulerian(n));
}

TEST_CASE("psi on the worked examples") {
    GroundSet g = GroundSet::canonical(5);
    CHECK(to_string(psi(Permutation({5, 1, 4, 3, 2}, g), g), g) ==
          "h{1,2,3,4,5}*h{2,3,4}*h{2,3}");
    CHECK(to_string(psi(Permutation({5, 4, 3, 2, 1}, g), g), g) ==
          "h{1,2,3,4,5}*h{1,2,3,4}*h{1,2,3}*h{1,2}");
    CHECK(to_string(psi(Permutation({3, 5, 2, 4, 1}, g), g), g) == "h{1,2,4,5}*h{1,4}");
    CHECK(psi(Permutation({1, 2, 3, 4, 5}, g), g).empty());
}

TEST_CASE("phi inverts psi") {
    GroundSet g = GroundSet::canonical(5);
    for (auto vals : {std::vector<int>{5, 1, 4, 3, 2}, std::vector<int>{5, 4, 3, 2, 1},
                      std::vector<int>{3, 5, 2, 4, 1}}) {
        Permutation p(vals, g);
        CHECK(phi(psi(p, g), g) == p);
    }
    // Both directions, exhaustively on [4].
    GroundSet g4 = GroundSet::canonical(4);
    std::set<NormalMonomial> seen;
    for_each_permutation(g4, [&](const Permutation& p) {
        NormalMonomial m = psi(p, g4);
        CHECK(phi(m, g4) == p);
        seen.insert(m);
    });
    for (const NormalMonomial& m : enumerate_normal_monomials(g4)) {
        REQUIRE(seen.count(m) == 1);
        CHECK(psi(phi(m, g4), g4) == m);
    }
}

TEST_CASE("psi degree is the descent count") {
    GroundSet g = GroundSet::canonical(5);
    for_each_permutation(g, [&](const Permutation& p) {
        REQUIRE(static_cast<std::size_t>(psi(p, g).degree()) == descent_set(p).size());
    });
}

TEST_CASE("monomial text round trip") {
    GroundSet g = GroundSet::canonical(5);
    NormalMonomial m({labs(g, {1, 4}), labs(g, {1, 2, 4, 5})});
    CHECK(to_string(m, g) == "h{1,2,4,5}*h{1,4}");
    CHECK(parse_monomial("h{1,2,4,5}*h{1,4}", g) == m);
    CHECK(parse_monomial("h{1,4}*h{1,2,4,5}", g) == m);  // canonical order restored
    CHECK(parse_monomial("1", g).empty());
    CHECK(to_string(NormalMonomial(), g) == "1");
    CHECK_THROWS_AS(parse_monomial("h{1,4", g), std::invalid_argument);
    CHECK_THROWS_AS(NormalMonomial({labs(g, {3})}), std::invalid_argument);
}

TEST_CASE("psi works on non-canonical ground sets") {
    GroundSet g({2, 3, 5, 7});
    Permutation p({7, 2, 5, 3}, g);
    NormalMonomial m = psi(p, g);
    CHECK(phi(m, g) == p);
    CHECK(static_cast<std::size_t>(m.degree()) == descent_set(p).size());
}
