#include "catch_amalgamated.hpp"

#include <cstdio>
#include <fstream>

#include "chowlab/oracle.hpp"
#include "chowlab/poly.hpp"

using namespace chowlab;

namespace {
IntPolynomial poly(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return IntPolynomial(std::move(v));
}
}  // namespace

TEST_CASE("lattice construction and validation") {
    FlatsLattice b3 = FlatsLattice::boolean_lattice(3);
    CHECK(b3.flats().size() == 8);
    CHECK(b3.rank() == 3);
    CHECK(b3.rank_of(Subset::of_positions({0, 2})) == 2);
    CHECK(b3.variables().size() == 7);

    FlatsLattice u23 = FlatsLattice::uniform_lattice(2, 3);
    CHECK(u23.flats().size() == 5);  // empty, three points, E
    CHECK(u23.rank() == 2);
    CHECK_FALSE(u23.is_flat(Subset::of_positions({0, 1})));

    // The full-rank uniform matroid is boolean.
    FlatsLattice u33 = FlatsLattice::uniform_lattice(3, 3);
    CHECK(u33.flats() == b3.flats());

    GroundSet g = GroundSet::canonical(3);
    Subset e = Subset::full(3);
    // Not intersection-closed: {1,2} n {2,3} = {2} is missing.
    CHECK_THROWS_AS(FlatsLattice(g, {Subset(), Subset::of_labels(g, {1, 2}),
                                     Subset::of_labels(g, {2, 3}), e}),
                    std::invalid_argument);
    // Missing the empty flat.
    CHECK_THROWS_AS(FlatsLattice(g, {Subset::of_labels(g, {1}), e}), std::invalid_argument);
    // Covers above the empty flat fail to cover E.
    CHECK_THROWS_AS(FlatsLattice(g, {Subset(), Subset::of_labels(g, {1}), e}),
                    std::invalid_argument);
}

TEST_CASE("lattice file round trip") {
    std::string path = "chowlab_test_lattice.txt";
    {
        std::ofstream out(path);
        out << "n=3\n\n1\n2\n3\n1,2,3\n";
    }
    FlatsLattice l = FlatsLattice::from_file(path);
    std::remove(path.c_str());
    CHECK(l.flats() == FlatsLattice::uniform_lattice(2, 3).flats());
}

TEST_CASE("hilbert series of small rings") {
    CHECK(ChowRing(FlatsLattice::boolean_lattice(3)).hilbert_series() == poly({1, 4, 1}));
    CHECK(ChowRing(FlatsLattice::boolean_lattice(4)).hilbert_series() == eulerian(4));
    CHECK(ChowRing(FlatsLattice::uniform_lattice(2, 3)).hilbert_series() == poly({1, 1}));
    CHECK(ChowRing(FlatsLattice::uniform_lattice(3, 4)).hilbert_series() == poly({1, 7, 1}));
    // Corank one matches the shifted derangement polynomial.
    CHECK(ChowRing(FlatsLattice::uniform_lattice(4, 5)).hilbert_series() ==
          derangement_poly(5).shift_down(1));
}

TEST_CASE("chain counting agrees with row reduction") {
    for (int n = 2; n <= 4; ++n) {
        FlatsLattice l = FlatsLattice::boolean_lattice(n);
        CHECK(fy_chain_count(l) == ChowRing(l).hilbert_series());
    }
    for (int n = 3; n <= 5; ++n) {
        for (int r = 2; r <= n; ++r) {
            FlatsLattice l = FlatsLattice::uniform_lattice(r, n);
            CHECK(fy_chain_count(l) == ChowRing(l).hilbert_series());
        }
    }
}

TEST_CASE("defining relations vanish") {
    ChowRing ring(FlatsLattice::boolean_lattice(3));
    const FlatsLattice& l = ring.lattice();
    // Linear relations sum x over flats through a point.
    for (int i = 0; i < 3; ++i) {
        Element li = Element::zero(1);
        for (Subset f : l.flats())
            if (!f.empty() && f.contains(i)) li.add(ChainKey{{f.bits(), 1}}, 1);
        CHECK(ring.is_zero_in_ring(li));
        CHECK(ring.canonical_form(li).empty());
        // The h class of an atom is the same linear relation.
        CHECK(ring.is_zero_in_ring(ring.h_element(Subset().with(i))));
    }
    // A representative quadratic relation: join of {1} and {2} is {1,2}.
    Subset f = Subset::of_positions({0, 1});
    Element rel = (ring.h_element(f) - ring.h_element(Subset().with(0))) *
                  (ring.h_element(f) - ring.h_element(Subset().with(1)));
    CHECK(ring.is_zero_in_ring(rel));
    // Incomparable products are zero before any reduction.
    CHECK((ring.x_element(Subset().with(0)) * ring.x_element(Subset().with(1))).is_zero());
}

TEST_CASE("g and h closed forms") {
    ChowRing ring(FlatsLattice::boolean_lattice(4));
    Subset e = Subset::full(4);
    CHECK(ring.equal_in_ring(ring.g_element(e), ring.h_element(e)));
    // When F contains the ground-set maximum, g_F collapses to x_F.
    Subset f = Subset::of_positions({1, 3});
    CHECK(ring.equal_in_ring(ring.g_element(f), ring.x_element(f)));
    // Otherwise g_F sums x over F plus tails above max F.
    Subset f2 = Subset::of_positions({0, 1});
    Element expected = ring.x_element(f2) + ring.x_element(f2.with(2)) +
                       ring.x_element(f2.with(3)) + ring.x_element(f2.with(2).with(3));
    CHECK(ring.equal_in_ring(ring.g_element(f2), expected));
}

TEST_CASE("dimensions and quotient bases") {
    ChowRing ring(FlatsLattice::boolean_lattice(4));
    CHECK(ring.dimension(0) == 1);
    CHECK(ring.dimension(1) == 11);
    CHECK(ring.dimension(2) == 11);
    CHECK(ring.dimension(3) == 1);
    CHECK(ring.dimension(4) == 0);
    CHECK(ring.quotient_basis(2).size() == 11);
    for (const ChainKey& k : ring.quotient_basis(2)) {
        auto cf = ring.canonical_form(Element::monomial(k));
        REQUIRE(cf.size() == 1);
        CHECK(cf.begin()->first == k);
        CHECK(cf.begin()->second == 1);
    }
}

TEST_CASE("principal ideal hilbert functions") {
    CHECK(ChowRing(FlatsLattice::boolean_lattice(3)).principal_ideal_hilbert(1) ==
          poly({0, 1, 1}));
    CHECK(ChowRing(FlatsLattice::boolean_lattice(4)).principal_ideal_hilbert(2) ==
          poly({0, 0, 1, 1}));
    ChowRing r3(FlatsLattice::boolean_lattice(3));
    CHECK(r3.principal_ideal_hilbert(0) == r3.hilbert_series());
    CHECK(r3.principal_ideal_hilbert(3) == IntPolynomial());
    CHECK_THROWS_AS(r3.principal_ideal_hilbert(4), std::invalid_argument);
}
