#include "vkn/milnor.hpp"

#include <numeric>

#include "vkn/seifert.hpp"

namespace vkn::milnor {

using grp::FreeWord;
using grp::Letter;
using poly::HWord;
using poly::MLetter;
using poly::NoncommSeries;

Residue::Residue(Int v, Int m) : value(std::move(v)), modulus(std::move(m)) {
    if (modulus < 0) throw Error("DimensionMismatch", "modulus must be nonnegative");
    if (modulus > 0) {
        value %= modulus;
        if (value < 0) value += modulus;
    }
}

LongitudeSet::LongitudeSet(int components, std::vector<grp::FreeWord> ls)
    : k(components), longitudes(std::move(ls)) {
    if (k < 1 || static_cast<int>(longitudes.size()) != k)
        throw Error("BadComponentCount", "need one longitude per component");
    for (int i = 0; i < k; ++i) {
        for (const Letter& l : longitudes[i].letters())
            if (l.gen > k)
                throw Error("IndexOutOfRange", "longitude uses a meridian index beyond k");
        if (longitudes[i].exponent_sum(i + 1) != 0)
            throw Error("IndexOutOfRange",
                        "longitude " + std::to_string(i + 1) + " is not framing-corrected");
    }
}

namespace {

std::vector<MLetter> as_mletters(const FreeWord& w) {
    std::vector<MLetter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters()) out.push_back({l.gen, l.exp});
    return out;
}

} // namespace

Residue mu123_from_longitudes(const LongitudeSet& ls, const Int& delta) {
    if (ls.k != 3) throw Error("BadComponentCount", "mu123 needs exactly three components");
    NoncommSeries s = magnus_expand(as_mletters(ls.longitudes[2]), 2);
    return Residue(poly::coeff(s, HWord{1, 2}), delta);
}

FreeWord artin_apply(const braid::BraidWord& beta, const grp::FreeWord& w) {
    for (const Letter& l : w.letters())
        if (l.gen > beta.strands())
            throw Error("IndexOutOfRange", "word generator exceeds the strand count");
    FreeWord cur = w;
    for (const braid::BraidLetter& bl : beta.letters()) {
        const int i = bl.index;
        FreeWord next;
        for (const Letter& l : cur.letters()) {
            if (l.gen != i && l.gen != i + 1) {
                next.push(l.gen, l.exp);
                continue;
            }
            if (bl.exp == 1) {
                if (l.gen == i) {
                    // x_i -> x_i x_{i+1} x_i^-1
                    if (l.exp == 1) {
                        next.push(i, 1);
                        next.push(i + 1, 1);
                        next.push(i, -1);
                    } else {
                        next.push(i, 1);
                        next.push(i + 1, -1);
                        next.push(i, -1);
                    }
                } else {
                    next.push(i, l.exp);  // x_{i+1} -> x_i
                }
            } else {
                if (l.gen == i) {
                    next.push(i + 1, l.exp);  // x_i -> x_{i+1}
                } else {
                    // x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
                    if (l.exp == 1) {
                        next.push(i + 1, -1);
                        next.push(i, 1);
                        next.push(i + 1, 1);
                    } else {
                        next.push(i + 1, -1);
                        next.push(i, -1);
                        next.push(i + 1, 1);
                    }
                }
            }
        }
        cur = next;
    }
    return cur;
}

LongitudeSet longitudes_from_pure_braid(const braid::BraidWord& beta) {
    std::vector<int> perm = beta.permutation();
    for (int i = 0; i < beta.strands(); ++i)
        if (perm[i] != i) throw Error("NotPure", "closure permutation is not the identity");
    std::vector<FreeWord> ls;
    for (int i = 1; i <= beta.strands(); ++i) {
        FreeWord xi(std::vector<Letter>{{i, 1}});
        FreeWord image = artin_apply(beta, xi);
        FreeWord w = image.conjugating_prefix(i);
        long e = w.exponent_sum(i);
        for (long j = 0; j < (e > 0 ? e : -e); ++j) w.push(i, e > 0 ? -1 : 1);
        ls.push_back(w);
    }
    return LongitudeSet(beta.strands(), std::move(ls));
}

Residue mu123_of_closure(const braid::BraidWord& beta) {
    if (beta.strands() != 3) throw Error("BadComponentCount", "expected a 3-strand braid");
    LongitudeSet ls = longitudes_from_pure_braid(beta);
    braid::ClosureSummary cs = braid::closure_summary(beta);
    long d = std::gcd(std::gcd(std::abs(cs.lk[0][1]), std::abs(cs.lk[0][2])),
                      std::abs(cs.lk[1][2]));
    return mu123_from_longitudes(ls, Int(d));
}

Int m123_from_words(const FreeWord& w1, const FreeWord& w2, const FreeWord& w3) {
    const FreeWord* words[3] = {&w1, &w2, &w3};
    for (int i = 0; i < 3; ++i)
        for (const Letter& l : words[i]->letters()) {
            if (l.gen < 1 || l.gen > 3)
                throw Error("IndexOutOfRange", "intersection words use letters 1..3");
            if (l.gen == i + 1)
                throw Error("LetterClash",
                            "w" + std::to_string(i + 1) + " may not contain its own letter");
        }
    auto e = [&](int i, int j, int k) {
        NoncommSeries s = magnus_expand(as_mletters(*words[k - 1]), 2);
        return poly::coeff(s, HWord{i, j});
    };
    return e(1, 2, 3) + e(2, 3, 1) + e(3, 1, 2);
}

Residue mellor_melvin(const MMData& d) {
    Int m123 = m123_from_words(d.w1, d.w2, d.w3);
    long delta = std::gcd(std::gcd(std::abs(d.lk[0]), std::abs(d.lk[1])), std::abs(d.lk[2]));
    return Residue(m123 - d.t123, Int(delta));
}

Int t123_from_homology(const std::vector<Int>& k2, const std::vector<Int>& k3, int g) {
    if (static_cast<int>(k2.size()) != 2 * g || static_cast<int>(k3.size()) != 2 * g)
        throw Error("DimensionMismatch", "homology vectors must have length 2g");
    IntMat f = seifert::intersection_form(g);
    return la::dot(k2, f * k3);
}

std::vector<Int> derivative_class(const std::vector<Int>& k_vec, int g) {
    if (static_cast<int>(k_vec.size()) != 2 * g)
        throw Error("DimensionMismatch", "homology vector must have length 2g");
    IntMat f = seifert::intersection_form(g);
    return la::negated(f) * k_vec;  // F^-1 = -F
}

Int t123_via_chain(const IntMat& a_j, const std::vector<Int>& k2, const std::vector<Int>& k3) {
    if (a_j.rows() != a_j.cols()) throw Error("NonSquare", "A_J must be square");
    if (static_cast<int>(k2.size()) != a_j.rows() || static_cast<int>(k3.size()) != a_j.rows())
        throw Error("DimensionMismatch", "vector length must match A_J");
    IntMat f = a_j - a_j.transposed();
    IntMat b = la::inverse_unimodular(f);
    std::vector<Int> c2 = b * (a_j * k2);
    std::vector<Int> c3 = b * (a_j * k3);
    return la::dot(c2, f * c3);
}

Thm41Report thm41_check(const std::vector<Int>& k2, const std::vector<Int>& k3, int g,
                        const Int& lk23) {
    Thm41Report rep;
    rep.index = t123_from_homology(k2, k3, g);
    rep.t123 = t123_via_chain(seifert::trefoil_sum_seifert(g), k2, k3);
    rep.pass = (rep.index == rep.t123);
    Int mod = lk23 < 0 ? Int(-lk23) : lk23;
    rep.mu = Residue(-rep.index, mod);
    return rep;
}

} // namespace vkn::milnor
