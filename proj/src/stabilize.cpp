#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "vkn/braid.hpp"

namespace vkn::braid {

namespace {

enum class Cls { Fixed, Added, Moving };

Cls class_of(const MixedBraid& mb, int strand) {
    if (strand < mb.m) return Cls::Fixed;
    if (strand < mb.m + mb.k) return Cls::Added;
    return Cls::Moving;
}

// Push distances and correct signs of the Stallings construction for one
// fixed-part word. Mirrors stallings_homogenize letter for letter.
struct StallingsPlan {
    int k = 0;
    int epsilon = 1;
    std::vector<int> push;            // per letter of the fixed word
    std::map<int, int> first_sign;    // generator -> sign of first occurrence

    int correct(int g, int m) const {
        if (g <= m - 1) {
            auto it = first_sign.find(g);
            return it != first_sign.end() ? it->second : -epsilon;
        }
        return g == m ? epsilon : -epsilon;
    }
};

StallingsPlan make_plan(const BraidWord& b) {
    StallingsPlan plan;
    plan.push.assign(b.letters().size(), 0);
    for (const BraidLetter& l : b.letters()) plan.first_sign.emplace(l.index, l.exp);
    int eps = 0;
    for (const BraidLetter& l : b.letters())
        if (l.exp != plan.first_sign[l.index]) {
            eps = l.exp;
            break;
        }
    if (eps == 0) return plan;  // sign-consistent, nothing to add
    plan.epsilon = eps;
    const int m = b.strands();
    for (size_t li = 0; li < b.letters().size(); ++li) {
        const BraidLetter& l = b.letters()[li];
        if (l.exp == plan.correct(l.index, m)) continue;
        int t = l.index + 1;
        while (plan.correct(t, m) != l.exp) ++t;
        plan.push[li] = t - l.index;
        plan.k = std::max(plan.k, plan.push[li]);
    }
    return plan;
}

std::vector<bool> moving_mask(const MixedBraid& mb) {
    std::vector<bool> mask(mb.m + mb.k + mb.n, false);
    for (int s = mb.m + mb.k; s < mb.m + mb.k + mb.n; ++s) mask[s] = true;
    return mask;
}

std::vector<bool> nonfixed_mask(const MixedBraid& mb) {
    std::vector<bool> mask(mb.m + mb.k + mb.n, false);
    for (int s = mb.m; s < mb.m + mb.k + mb.n; ++s) mask[s] = true;
    return mask;
}

bool moving_part_is_knot(const MixedBraid& mb) {
    std::vector<int> perm = mb.word.permutation();
    const int base = mb.m + mb.k;
    int s = base;
    int steps = 0;
    do {
        s = perm[s];
        ++steps;
    } while (s != base && steps <= mb.n);
    return steps == mb.n;
}

} // namespace

void validate_mixed(const MixedBraid& mb) {
    if (mb.m < 1 || mb.k < 0 || mb.n < 1)
        throw Error("NotParted", "need at least one fixed and one moving strand");
    if (mb.word.strands() != mb.m + mb.k + mb.n)
        throw Error("NotParted", "strand count does not match m + k + n");
    if (!mb.parted) throw Error("NotParted", "mixed braid is not marked parted");
    std::vector<int> perm = mb.word.permutation();
    for (int s = 0; s < mb.word.strands(); ++s)
        if (class_of(mb, s) != class_of(mb, perm[s]))
            throw Error("NotParted", "braid permutation mixes fixed/added/moving strands");
}

long total_intersection(const MixedBraid& mb) {
    validate_mixed(mb);
    if (!moving_part_is_knot(mb))
        throw Error("MovingPartNotKnot", "moving strands do not close to a single knot");
    ClosureSummary cs = closure_summary(mb.word);
    int kc = cs.component_of[mb.m + mb.k];
    long total = 0;
    for (int c = 0; c < cs.components; ++c)
        if (c != kc) total += cs.lk[kc][c];
    return total;
}

MixedBraid fiber_stabilize(const MixedBraid& mb) {
    validate_mixed(mb);
    if (!moving_part_is_knot(mb))
        throw Error("MovingPartNotKnot", "moving strands do not close to a single knot");

    const BraidWord fixed_word = delete_strands(mb.word, nonfixed_mask(mb));
    StallingsResult target = stallings_homogenize(fixed_word);

    if (mb.k > 0) {
        // Already carries added strands: they must be exactly the Stallings
        // extension of the fixed part.
        if (mb.k != target.k || !(delete_strands(mb.word, moving_mask(mb)) == target.result))
            throw Error("AddedPartInconsistent",
                        "existing added strands do not match the fixed part's homogenization");
        long t = total_intersection(mb);
        if (t == 0) return mb;
        MixedBraid out = mb;
        int r = mb.m + mb.k;
        int s = t > 0 ? -1 : 1;
        for (long i = 0; i < (t > 0 ? t : -t); ++i) {
            out.word.push(r, s);
            out.word.push(r, s);
        }
        return out;
    }

    const int m = mb.m, n = mb.n;
    const StallingsPlan plan = make_plan(fixed_word);
    const int k = plan.k;
    const int n_old = m + n;

    // Simulation state: ids 0..n_old-1 are the original strands, n_old+j the
    // added ones. Original relative order is preserved throughout; the added
    // strands live between fixed and moving except while dipping.
    std::vector<int> pos_of(n_old + k);
    std::vector<int> occ(m + k + n);
    for (int s = 0; s < m; ++s) pos_of[s] = s;
    for (int j = 0; j < k; ++j) pos_of[n_old + j] = m + j;
    for (int s = m; s < n_old; ++s) pos_of[s] = s + k;
    for (int id = 0; id < n_old + k; ++id) occ[pos_of[id]] = id;

    auto cls = [&](int id) {
        if (id >= n_old) return Cls::Added;
        return id < m ? Cls::Fixed : Cls::Moving;
    };

    BraidWord out(m + k + n);
    auto emit_swap = [&](int left_pos, int exp) {
        out.push(left_pos + 1, exp);
        int a = occ[left_pos], b = occ[left_pos + 1];
        std::swap(occ[left_pos], occ[left_pos + 1]);
        pos_of[a] = left_pos + 1;
        pos_of[b] = left_pos;
    };
    auto nonmoving_left = [&](int id) {
        int c = 0;
        for (int p = 0; p < pos_of[id]; ++p)
            if (cls(occ[p]) != Cls::Moving) ++c;
        return c;
    };
    auto dip_down = [&](int j, int i) {  // added strand j parks left of fixed slot i
        int a = n_old + (j - 1);
        while (nonmoving_left(a) > i + j - 2) {
            int p = pos_of[a];
            if (cls(occ[p - 1]) == Cls::Moving)
                emit_swap(p - 1, 1);
            else
                emit_swap(p - 1, plan.correct(nonmoving_left(a), m));
        }
    };
    auto dip_up = [&](int j) {
        int a = n_old + (j - 1);
        while (nonmoving_left(a) < m + j - 1) {
            int p = pos_of[a];
            if (cls(occ[p + 1]) == Cls::Moving)
                emit_swap(p, -1);
            else
                emit_swap(p, plan.correct(nonmoving_left(a) + 1, m));
        }
    };

    std::vector<int> at_old(n_old);
    std::iota(at_old.begin(), at_old.end(), 0);
    size_t f_index = 0;  // which fixed-word letter we are at
    for (const BraidLetter& l : mb.word.letters()) {
        int a = at_old[l.index - 1], b = at_old[l.index];
        if (cls(a) == Cls::Fixed && cls(b) == Cls::Fixed) {
            int i = fixed_word.letters()[f_index].index;
            int p = plan.push[f_index];
            ++f_index;
            for (int j = 1; j <= p; ++j) dip_down(j, i);
            emit_swap(pos_of[a] < pos_of[b] ? pos_of[a] : pos_of[b], l.exp);
            for (int j = p; j >= 1; --j) dip_up(j);
        } else {
            // Route the moving strand over the added block when it separates
            // the crossing pair.
            while (pos_of[b] > pos_of[a] + 1) {
                assert(cls(b) == Cls::Moving && cls(occ[pos_of[b] - 1]) == Cls::Added);
                emit_swap(pos_of[b] - 1, -1);
            }
            emit_swap(pos_of[a], l.exp);
        }
        std::swap(at_old[l.index - 1], at_old[l.index]);
    }

    // Any moving strand still left of the added block returns across it.
    while (true) {
        int worst = -1;
        for (int id = m; id < n_old; ++id) {
            bool misplaced = false;
            for (int j = 0; j < k; ++j)
                if (pos_of[id] < pos_of[n_old + j]) misplaced = true;
            if (misplaced && (worst < 0 || pos_of[id] > pos_of[worst])) worst = id;
        }
        if (worst < 0) break;
        while (pos_of[worst] + 1 < m + k + n && cls(occ[pos_of[worst] + 1]) == Cls::Added)
            emit_swap(pos_of[worst], 1);
    }

    // Closing word of the added strands: one unknotted component.
    for (int g = m + 1; g <= m + k - 1; ++g) emit_swap(g - 1, -plan.epsilon);

    MixedBraid out_mb{m, k, n, out, true};
    long t = total_intersection(out_mb);
    int r = m + k;
    int sgn = t > 0 ? -1 : 1;
    for (long i = 0; i < (t > 0 ? t : -t); ++i) {
        out_mb.word.push(r, sgn);
        out_mb.word.push(r, sgn);
    }
    return out_mb;
}

MixedBraid random_mixed_braid(int max_fixed, int max_moving, int max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> md(1, max_fixed), nd(1, max_moving);
    const int m = md(rng), n = nd(rng);
    const int total = m + n;
    BraidWord w(total);
    if (total >= 2) {
        std::uniform_int_distribution<int> ld(0, max_len);
        std::uniform_int_distribution<int> gd(1, total - 1);
        std::uniform_int_distribution<int> bit(0, 1);
        int len = ld(rng);
        for (int i = 0; i < len; ++i) w.push(gd(rng), bit(rng) ? 1 : -1);
        // Repair: sort strands back into their class regions.
        std::vector<int> at(total);
        std::iota(at.begin(), at.end(), 0);
        for (const BraidLetter& l : w.letters()) std::swap(at[l.index - 1], at[l.index]);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int p = 0; p + 1 < total; ++p)
                if (at[p] >= m && at[p + 1] < m) {
                    w.push(p + 1, bit(rng) ? 1 : -1);
                    std::swap(at[p], at[p + 1]);
                    dirty = true;
                }
        }
        // Make the moving closure a single cycle.
        while (true) {
            std::vector<int> perm = w.permutation();
            int s = m, steps = 0;
            do {
                s = perm[s];
                ++steps;
            } while (s != m && steps <= n);
            if (steps == n) break;
            // Join two moving cycles with one crossing.
            std::vector<int> comp(total, -1);
            int cc = 0;
            for (int i = 0; i < total; ++i) {
                if (comp[i] >= 0) continue;
                for (int j = i; comp[j] < 0; j = perm[j]) comp[j] = cc;
                ++cc;
            }
            std::vector<int> at2(total);
            std::iota(at2.begin(), at2.end(), 0);
            for (const BraidLetter& l : w.letters()) std::swap(at2[l.index - 1], at2[l.index]);
            bool joined = false;
            for (int p = m; p + 1 < total && !joined; ++p)
                if (comp[at2[p]] != comp[at2[p + 1]]) {
                    w.push(p + 1, bit(rng) ? 1 : -1);
                    joined = true;
                }
            if (!joined) break;  // cannot happen: distinct adjacent cycles exist
        }
    }
    return MixedBraid{m, 0, n, w, true};
}

} // namespace vkn::braid
