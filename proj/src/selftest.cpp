#include "vkn/selftest.hpp"

#include <random>

#include "vkn/braid.hpp"
#include "vkn/gauss.hpp"
#include "vkn/milnor.hpp"
#include "vkn/seifert.hpp"

namespace vkn::selftest {

using la::Int;

SuiteResult thm31_random(uint64_t seed, int cases) {
    SuiteResult r{"thm31-random", cases, 0};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        seifert::BlockSeifert bs = seifert::random_block_seifert(2, rng);
        if (!seifert::thm31_check(bs).pass) ++r.failures;
    }
    return r;
}

SuiteResult thm41_random(uint64_t seed, int cases) {
    SuiteResult r{"thm41-random", cases, 0};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gd(1, 4);
    std::uniform_int_distribution<long> vd(-9, 9);
    for (int i = 0; i < cases; ++i) {
        int g = gd(rng);
        std::vector<Int> k2(2 * g), k3(2 * g);
        for (auto& v : k2) v = vd(rng);
        for (auto& v : k3) v = vd(rng);
        if (!milnor::thm41_check(k2, k3, g).pass) ++r.failures;
    }
    return r;
}

SuiteResult ac_index_equivalence(uint64_t seed, int cases) {
    SuiteResult r{"ac-index-equivalence", cases, 0};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        gauss::GaussDiagram d = gauss::random_diagram(8, rng);
        bool ac = gauss::is_almost_classical(d);
        bool feasible = gauss::alexander_numbering(d).has_value();
        if (ac != feasible) ++r.failures;
    }
    return r;
}

SuiteResult writhe_move_invariance(uint64_t seed, int diagrams, int moves_each) {
    SuiteResult r{"writhe-move-invariance", diagrams * moves_each, 0};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < diagrams; ++i) {
        gauss::GaussDiagram d = gauss::random_diagram(6, rng);
        poly::LaurentPoly1 w = gauss::writhe_index_polynomial(d);
        for (int j = 0; j < moves_each; ++j) {
            gauss::MoveSpec mv = gauss::random_move(d, rng);
            d = gauss::apply_move(d, mv);
            if (!(gauss::writhe_index_polynomial(d) == w)) ++r.failures;
        }
    }
    return r;
}

namespace {

bool added_part_unknotted(const braid::BraidWord& full, int originals, int k) {
    if (k == 0) return true;
    // Sub-permutation of the added strands must be one k-cycle ...
    std::vector<int> perm = full.permutation();
    int s = originals, steps = 0;
    do {
        s = perm[s];
        ++steps;
    } while (s != originals && steps <= k);
    if (steps != k) return false;
    // ... and their sub-braid must close to one genus-zero component.
    std::vector<bool> del(full.strands(), true);
    for (int i = originals; i < originals + k; ++i) del[i] = false;
    braid::BraidWord sub = braid::delete_strands(full, del);
    braid::ClosureSummary cs = braid::closure_summary(sub);
    if (cs.components != 1) return false;
    braid::FiberEuler fe = braid::fiber_euler(sub);
    return fe.genus == 0;
}

bool stallings_postconditions(const braid::BraidWord& b) {
    braid::StallingsResult sr = braid::stallings_homogenize(b);
    if (!braid::is_sign_consistent(sr.result)) return false;
    if ((sr.k == 0) != braid::is_sign_consistent(b)) return false;
    // With every generator present in the input, the output is homogeneous
    // in the strict sense.
    bool all_present = true;
    std::vector<bool> seen(b.strands(), false);
    for (const braid::BraidLetter& l : b.letters()) seen[l.index] = true;
    for (int g = 1; g < b.strands(); ++g)
        if (!seen[g]) all_present = false;
    if (all_present && !braid::is_homogeneous(sr.result)) return false;
    // Strand deletion round trip.
    std::vector<bool> del(sr.result.strands(), false);
    for (int s = b.strands(); s < sr.result.strands(); ++s) del[s] = true;
    if (!(braid::delete_strands(sr.result, del) == b)) return false;
    return added_part_unknotted(sr.result, b.strands(), sr.k);
}

} // namespace

SuiteResult stallings_random(uint64_t seed, int cases) {
    SuiteResult r{"stallings-random", cases, 0};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        braid::BraidWord b = braid::random_braid(6, 20, rng);
        if (!stallings_postconditions(b)) ++r.failures;
    }
    return r;
}

SuiteResult stabilize_random(uint64_t seed, int cases) {
    SuiteResult r{"stabilize-random", cases, 0};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        braid::MixedBraid mb = braid::random_mixed_braid(4, 3, 16, rng);
        braid::MixedBraid st = braid::fiber_stabilize(mb);
        bool ok = true;
        // The fixed+added sub-braid is the Stallings extension of the fixed part.
        std::vector<bool> del_moving(st.word.strands(), false);
        for (int s = st.m + st.k; s < st.word.strands(); ++s) del_moving[s] = true;
        braid::BraidWord fa = braid::delete_strands(st.word, del_moving);
        std::vector<bool> del_nonfixed(mb.word.strands(), false);
        for (int s = mb.m; s < mb.word.strands(); ++s) del_nonfixed[s] = true;
        braid::BraidWord fixed_part = braid::delete_strands(mb.word, del_nonfixed);
        braid::StallingsResult sr = braid::stallings_homogenize(fixed_part);
        ok = ok && (fa == sr.result) && (st.k == sr.k);
        ok = ok && braid::is_sign_consistent(fa);
        ok = ok && braid::total_intersection(st) == 0;
        // Added strands close to one unknotted component; they occupy the
        // trailing positions of the fixed+added sub-braid.
        ok = ok && added_part_unknotted(fa, st.m, st.k);
        braid::MixedBraid again = braid::fiber_stabilize(st);
        ok = ok && (again.word == st.word) && again.k == st.k;
        if (!ok) ++r.failures;
    }
    return r;
}

SuiteResult braid_milnor_lk(uint64_t seed, int cases) {
    SuiteResult r{"braid-milnor-lk", cases, 0};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        braid::BraidWord b = braid::random_pure_braid(3, 14, rng);
        braid::ClosureSummary cs = braid::closure_summary(b);
        milnor::LongitudeSet ls = milnor::longitudes_from_pure_braid(b);
        bool ok = true;
        for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c) {
                if (a == c) continue;
                ok = ok && ls.longitudes[a].exponent_sum(c + 1) == cs.lk[a][c];
            }
        if (ok && cs.lk[0][1] == 0 && cs.lk[0][2] == 0 && cs.lk[1][2] == 0) {
            poly::NoncommSeries s =
                poly::magnus_expand([&] {
                    std::vector<poly::MLetter> v;
                    for (const grp::Letter& l : ls.longitudes[2].letters())
                        v.push_back({l.gen, l.exp});
                    return v;
                }(), 2);
            ok = poly::coeff(s, {1, 2}) == -poly::coeff(s, {2, 1});
        }
        if (!ok) ++r.failures;
    }
    return r;
}

std::vector<SuiteResult> run_all(uint64_t seed) {
    return {
        thm31_random(seed),         thm41_random(seed + 1),   ac_index_equivalence(seed + 2),
        writhe_move_invariance(seed + 3), stallings_random(seed + 4), stabilize_random(seed + 5),
        braid_milnor_lk(seed + 6),
    };
}

} // namespace vkn::selftest
