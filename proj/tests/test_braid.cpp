#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vkn/braid.hpp"

using namespace vkn;
using namespace vkn::braid;

TEST_CASE("parsing") {
    BraidWord b = parse_braid("1 -2 1 -2", 3);
    CHECK(b.length() == 4);
    CHECK(b.letters()[1] == BraidLetter{2, -1});
    CHECK(to_string(b) == "1 -2 1 -2");

    CHECK(parse_braid("", 4).length() == 0);
    CHECK_THROWS_WITH_AS(parse_braid("3", 3), doctest::Contains("strands"), Error);
    CHECK_THROWS_AS(parse_braid("0", 3), Error);
    CHECK_THROWS_AS(parse_braid("x", 3), Error);
}

TEST_CASE("closure summary") {
    ClosureSummary hopf = closure_summary(parse_braid("1 1", 2));
    CHECK(hopf.components == 2);
    CHECK(hopf.lk[0][1] == 1);

    ClosureSummary bor = closure_summary(parse_braid("1 -2 1 -2 1 -2", 3));
    CHECK(bor.components == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(bor.lk[i][j] == 0);

    ClosureSummary triv = closure_summary(BraidWord(5));
    CHECK(triv.components == 5);

    ClosureSummary tref = closure_summary(parse_braid("1 1 1", 2));
    CHECK(tref.components == 1);
}

TEST_CASE("linking is symmetric and additive over disjoint unions") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        BraidWord b = random_braid(6, 16, rng);
        ClosureSummary cs = closure_summary(b);
        for (int x = 0; x < cs.components; ++x) {
            CHECK(cs.lk[x][x] == 0);
            for (int y = 0; y < cs.components; ++y) CHECK(cs.lk[x][y] == cs.lk[y][x]);
        }
        // concatenating two words on disjoint strand sets adds linking blockwise
        BraidWord wide(b.strands() + 2, b.letters());
        wide.push(b.strands() + 1, 1);
        wide.push(b.strands() + 1, 1);
        ClosureSummary ws = closure_summary(wide);
        CHECK(ws.components == cs.components + 2);
        CHECK(ws.lk[ws.component_of[b.strands()]][ws.component_of[b.strands() + 1]] == 1);
        for (int x = 0; x < cs.components; ++x)
            for (int y = 0; y < cs.components; ++y) CHECK(ws.lk[x][y] == cs.lk[x][y]);
    }
}

TEST_CASE("homogeneity predicates") {
    CHECK(is_homogeneous(parse_braid("-2 1 -2 1", 3)));
    CHECK_FALSE(is_homogeneous(parse_braid("1 -1", 2)));
    CHECK_FALSE(is_homogeneous(parse_braid("1", 3)));  // sigma_2 absent
    CHECK(is_sign_consistent(parse_braid("1", 3)));
    CHECK(is_sign_consistent(BraidWord(4)));
    CHECK_FALSE(is_sign_consistent(parse_braid("2 1 -2", 3)));
}

TEST_CASE("strand deletion") {
    BraidWord b = parse_braid("1 2 1 -2", 3);
    // dropping the strand that starts in position 3 (0-based 2)
    BraidWord d = delete_strands(b, {false, false, true});
    CHECK(to_string(d) == "1 -1");
    CHECK_THROWS_AS(delete_strands(b, {true, true, true}), Error);
    CHECK_THROWS_AS(delete_strands(b, {true, true}), Error);
}

TEST_CASE("stallings homogenization") {
    SUBCASE("already homogeneous words come back untouched") {
        BraidWord b = parse_braid("-2 1 -2 1", 3);
        StallingsResult sr = stallings_homogenize(b);
        CHECK(sr.k == 0);
        CHECK(sr.result == b);
    }
    SUBCASE("absent generators alone add no strands") {
        StallingsResult sr = stallings_homogenize(parse_braid("1", 4));
        CHECK(sr.k == 0);
    }
    SUBCASE("the smallest incorrect word") {
        StallingsResult sr = stallings_homogenize(parse_braid("1 -1", 2));
        CHECK(sr.k == 1);
        CHECK(sr.epsilon == -1);
        CHECK(to_string(sr.result) == "1 -2 1 -2 1 -2");
        CHECK(is_homogeneous(sr.result));
        CHECK(delete_strands(sr.result, {false, false, true}) == parse_braid("1 -1", 2));
    }
}

TEST_CASE("fiber euler characteristic") {
    FiberEuler hopf = fiber_euler(parse_braid("1", 2));
    CHECK(hopf.chi == 1);
    CHECK(hopf.genus == 0);

    FiberEuler fig8 = fiber_euler(parse_braid("-2 1 -2 1", 3));
    CHECK(fig8.chi == -1);
    CHECK(fig8.genus == 1);

    FiberEuler tref = fiber_euler(parse_braid("1 1 1", 2));
    CHECK(tref.chi == -1);
    CHECK(tref.genus == 1);

    FiberEuler split = fiber_euler(BraidWord(3));  // three disc factors
    CHECK(split.chi == 3);
    CHECK(split.genus == 0);

    CHECK_THROWS_AS(fiber_euler(parse_braid("1 -1", 2)), Error);
}

TEST_CASE("genus is a nonnegative integer on random sign-consistent words") {
    std::mt19937_64 rng(52);
    int seen = 0;
    while (seen < 150) {
        BraidWord b = random_braid(6, 14, rng);
        if (!is_sign_consistent(b)) continue;
        ++seen;
        FiberEuler fe = fiber_euler(b);  // throws NonIntegralGenus on failure
        CHECK(fe.genus >= 0);
    }
}

TEST_CASE("mixed braid validation") {
    MixedBraid mb{1, 0, 1, parse_braid("", 2), true};
    validate_mixed(mb);
    CHECK(total_intersection(mb) == 0);

    MixedBraid bad{1, 0, 1, parse_braid("1", 2), true};
    CHECK_THROWS_AS(validate_mixed(bad), Error);  // swaps fixed and moving

    MixedBraid unparted{1, 0, 1, parse_braid("", 2), false};
    CHECK_THROWS_AS(validate_mixed(unparted), Error);

    MixedBraid twoknots{1, 0, 2, parse_braid("", 3), true};
    CHECK_THROWS_WITH_AS(total_intersection(twoknots), doctest::Contains("single knot"), Error);
}

TEST_CASE("fiber stabilization") {
    SUBCASE("split case is a fixed point") {
        MixedBraid mb{1, 0, 1, parse_braid("", 2), true};
        MixedBraid st = fiber_stabilize(mb);
        CHECK(st.k == 0);
        CHECK(st.word == mb.word);
    }
    SUBCASE("trefoil with a doubly linked satellite gets two negative twists") {
        MixedBraid mb{2, 0, 1, parse_braid("1 1 1 2 2 2 2", 3), true};
        CHECK(total_intersection(mb) == 2);
        MixedBraid st = fiber_stabilize(mb);
        CHECK(st.k == 0);
        CHECK(to_string(st.word) == "1 1 1 2 2 2 2 -2 -2 -2 -2");
        CHECK(total_intersection(st) == 0);
        CHECK(fiber_stabilize(st).word == st.word);
    }
    SUBCASE("non-homogeneous fixed part grows added strands") {
        MixedBraid mb{2, 0, 1, parse_braid("1 -1 2 2", 3), true};
        MixedBraid st = fiber_stabilize(mb);
        CHECK(st.k == 1);
        CHECK(total_intersection(st) == 0);
        // deleting the moving strand leaves the Stallings extension
        std::vector<bool> del(st.word.strands(), false);
        del[st.m + st.k] = true;
        CHECK(delete_strands(st.word, del) ==
              stallings_homogenize(parse_braid("1 -1", 2)).result);
        // deleting the added strand recovers the input word plus the twists
        std::vector<bool> del_added(st.word.strands(), false);
        del_added[st.m] = true;
        BraidWord wo_added = delete_strands(st.word, del_added);
        CHECK(to_string(wo_added).substr(0, to_string(mb.word).size()) == to_string(mb.word));
        CHECK(fiber_stabilize(st).word == st.word);
    }
    SUBCASE("existing added strands must match the construction") {
        MixedBraid mb{1, 1, 1, parse_braid("", 3), true};
        CHECK_THROWS_AS(fiber_stabilize(mb), Error);
    }
    SUBCASE("moving part must be a knot") {
        MixedBraid mb{1, 0, 2, parse_braid("", 3), true};
        CHECK_THROWS_AS(fiber_stabilize(mb), Error);
    }
}
