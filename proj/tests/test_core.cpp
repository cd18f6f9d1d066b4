#include "catch_amalgamated.hpp"

#include "chowlab/core.hpp"

using namespace chowlab;

TEST_CASE("ground sets and subsets") {
    GroundSet g = GroundSet::canonical(5);
    REQUIRE(g.n() == 5);
    REQUIRE(g.label(0) == 1);
    REQUIRE(g.position(5) == 4);
    REQUIRE(g.position(6) == -1);
    CHECK_THROWS_AS(GroundSet({3, 1}), std::invalid_argument);

    Subset s = Subset::of_labels(g, {2, 4, 5});
    CHECK(s.size() == 3);
    CHECK(s.min_pos() == 1);
    CHECK(s.max_pos() == 4);
    CHECK(s.max_label(g) == 5);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(0));
    CHECK(to_string(s, g) == "{2,4,5}");

    Subset t = Subset::of_labels(g, {2, 4});
    CHECK(t.subset_of(s));
    CHECK(t.comparable(s));
    CHECK(s.minus(t) == Subset::of_labels(g, {5}));
    Subset u = Subset::of_labels(g, {1, 3});
    CHECK_FALSE(u.comparable(s));

    CHECK(Subset::positions_le(2) == Subset::of_positions({0, 1, 2}));
    CHECK(Subset::positions_gt(2, 5) == Subset::of_positions({3, 4}));
}

TEST_CASE("subset embedding across ground sets") {
    GroundSet parent = GroundSet::canonical(5);
    GroundSet sub({2, 3, 5});
    Subset s = Subset::of_labels(sub, {3, 5});
    CHECK(embed_subset(s, sub, parent) == Subset::of_labels(parent, {3, 5}));
    CHECK(remove_subset(parent, Subset::of_labels(parent, {1, 4})) == sub);
}

TEST_CASE("lehmer code and its inverse") {
    GroundSet g = GroundSet::canonical(5);
    Permutation p({5, 1, 4, 3, 2}, g);
    InversionSequence e = lehmer_code(p);
    CHECK(e.entries() == std::vector<int>{0, 1, 1, 2, 3});
    CHECK(lehmer_inverse(e, g) == p);

    // Full round trip over S_5.
    for_each_permutation(g, [&](const Permutation& q) {
        REQUIRE(lehmer_inverse(lehmer_code(q), g) == q);
    });
}

TEST_CASE("statistics") {
    GroundSet g = GroundSet::canonical(5);
    Permutation p({5, 1, 4, 3, 2}, g);
    CHECK(descent_set(p) == std::vector<int>{1, 3, 4});
    InversionSequence e({0, 1, 1, 2, 3});
    CHECK(ascent_set(e) == std::vector<int>{1, 3, 4});
    CHECK(ascent_count(e) == 3);

    // Descents of a permutation match ascents of its Lehmer code.
    for_each_permutation(g, [&](const Permutation& q) {
        REQUIRE(descent_set(q).size() == ascent_set(lehmer_code(q)).size());
    });

    CHECK(excedance_count(Permutation({2, 3, 1}, GroundSet::canonical(3))) == 2);
    CHECK(is_derangement_perm(Permutation({2, 3, 1}, GroundSet::canonical(3))));
    CHECK_FALSE(is_derangement_perm(Permutation({2, 1, 3}, GroundSet::canonical(3))));
}

TEST_CASE("derangement sequences") {
    CHECK(is_derangement_seq(InversionSequence({0, 1, 1})));
    CHECK(is_derangement_seq(InversionSequence({0, 1, 2})));
    CHECK_FALSE(is_derangement_seq(InversionSequence({0, 1, 0})));
    CHECK_FALSE(is_derangement_seq(InversionSequence({0, 0, 1})));
    CHECK(enumerate_derangement_seqs(3).size() == 2);
    CHECK(enumerate_derangement_seqs(4).size() == 9);

    // Counts match derangement permutations.
    for (int n = 2; n <= 6; ++n) {
        std::size_t count = 0;
        for_each_permutation(GroundSet::canonical(n), [&](const Permutation& p) {
            if (is_derangement_perm(p)) ++count;
        });
        REQUIRE(enumerate_derangement_seqs(n).size() == count);
    }
}

TEST_CASE("first zero and first peak") {
    InversionSequence e({0, 1, 2, 0, 0, 3});
    CHECK(first_zero(e) == 4);
    CHECK(first_peak(e).entries() == std::vector<int>{0, 1});
    CHECK(first_zero(InversionSequence({0, 1, 1})) == 4);
    CHECK_THROWS_AS(first_peak(InversionSequence({0, 0, 1})), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and restartable") {
    CHECK(enumerate_inversion_sequences(4).size() == 24);
    std::vector<InversionSequence> all;
    for_each_inversion_sequence(3, [&](const InversionSequence& e) { all.push_back(e); });
    REQUIRE(all.size() == 6);
    CHECK(all.front().entries() == std::vector<int>{0, 0, 0});
    CHECK(all.back().entries() == std::vector<int>{0, 1, 2});
    CHECK(std::is_sorted(all.begin(), all.end()));

    std::vector<InversionSequence> restarted;
    for_each_inversion_sequence(3, {0, 1}, [&](const InversionSequence& e) { restarted.push_back(e); });
    REQUIRE(restarted.size() == 3);
    CHECK(restarted.front().entries() == std::vector<int>{0, 1, 0});
}

TEST_CASE("text formats") {
    GroundSet g = GroundSet::canonical(4);
    Permutation p({3, 1, 4, 2}, g);
    CHECK(to_string(p) == "3,1,4,2");
    CHECK(parse_permutation("3,1,4,2", g) == p);
    InversionSequence e({0, 1, 0, 2});
    CHECK(to_string(e) == "0,1,0,2");
    CHECK(parse_inversion_sequence("0,1,0,2") == e);
    CHECK_THROWS_AS(parse_inversion_sequence("0,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1,1,2,3", g), std::invalid_argument);
}
