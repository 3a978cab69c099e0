#pragma once

#include <array>

#include "vkn/braid.hpp"
#include "vkn/freeword.hpp"
#include "vkn/matrix.hpp"
#include "vkn/noncomm.hpp"

namespace vkn::milnor {

using la::Int;
using la::IntMat;

/// Integer defined up to a modulus; modulus 0 means an ordinary integer.
/// With a positive modulus the value is normalized into [0, modulus).
struct Residue {
    Int value;
    Int modulus;

    Residue(Int v = 0, Int m = 0);
    bool operator==(const Residue&) const = default;
};

/// Per-component longitudes written in the preferred meridians m_1..m_k.
/// Longitude i must have zero exponent sum in m_i (framing corrected).
struct LongitudeSet {
    int k = 0;
    std::vector<grp::FreeWord> longitudes;

    LongitudeSet() = default;
    LongitudeSet(int components, std::vector<grp::FreeWord> ls);  // validates
};

/// Mellor-Melvin counting data: component-surface intersection words over
/// the letters {1,2,3} (word i avoiding letter i), the signed triple point
/// count, and the pairwise linking numbers (lk12, lk13, lk23).
struct MMData {
    grp::FreeWord w1, w2, w3;
    Int t123 = 0;
    std::array<long, 3> lk{0, 0, 0};
};

/// Coefficient of h1 h2 in the degree-2 Magnus expansion of the third
/// longitude, reduced mod delta.
Residue mu123_from_longitudes(const LongitudeSet& ls, const Int& delta);

/// Image of a free-group word under the Artin automorphism of the braid:
/// sigma_i sends x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i. Letters are
/// applied in word order. The result is freely reduced.
grp::FreeWord artin_apply(const braid::BraidWord& beta, const grp::FreeWord& w);

/// Longitudes of the closure of a pure braid: the conjugating words of
/// artin_apply(beta, x_i) with the exponent sum of x_i corrected to zero by
/// a right factor x_i^-e. Throws NotPure when the closure permutation is
/// not the identity.
LongitudeSet longitudes_from_pure_braid(const braid::BraidWord& beta);

/// Full pipeline for a pure 3-braid: delta is the gcd of the pairwise
/// closure linking numbers.
Residue mu123_of_closure(const braid::BraidWord& beta);

/// m123 = e123 + e231 + e312 with e_ijk the coefficient of h_i h_j in the
/// Magnus expansion of w_k. Throws LetterClash when w_i uses letter i.
Int m123_from_words(const grp::FreeWord& w1, const grp::FreeWord& w2, const grp::FreeWord& w3);

/// mu123 = m123 - t123 mod gcd of the pairwise linking numbers.
Residue mellor_melvin(const MMData& d);

/// k2^T F k3 with F the standard intersection form of genus g.
Int t123_from_homology(const std::vector<Int>& k2, const std::vector<Int>& k3, int g);

/// F^-1 K (= -F K) for the trefoil-sum intersection form.
std::vector<Int> derivative_class(const std::vector<Int>& k_vec, int g);

/// k2^T F k3 routed through B = (A_J - A_J^T)^-1:
/// (B A_J k2)^T F (B A_J k3). Equals the direct pairing exactly when
/// A_J^T F A_J = F.
Int t123_via_chain(const IntMat& a_j, const std::vector<Int>& k2, const std::vector<Int>& k3);

struct Thm41Report {
    Int index = 0;  // direct intersection pairing
    Int t123 = 0;   // value through the chain
    bool pass = false;
    Residue mu;  // -index mod lk23
};

/// Direct pairing versus the chain with A_J a trefoil sum; pass means the
/// two agree exactly.
Thm41Report thm41_check(const std::vector<Int>& k2, const std::vector<Int>& k3, int g,
                        const Int& lk23 = 0);

} // namespace vkn::milnor
