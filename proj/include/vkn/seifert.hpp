#pragma once

#include <random>

#include "vkn/laurent.hpp"
#include "vkn/matrix.hpp"

namespace vkn::seifert {

using la::Int;
using la::IntMat;
using poly::LaurentPoly1;
using poly::LaurentPoly2;

/// Seifert data of a two-component boundary link: square even-dimensional
/// blocks A_J (2g1 x 2g1), A_K (2g2 x 2g2) and the mixed block B (2g1 x 2g2).
struct BlockSeifert {
    IntMat a_j;
    IntMat a_k;
    IntMat b;

    BlockSeifert() = default;
    BlockSeifert(IntMat aj, IntMat ak, IntMat mixed);

    int g1() const { return a_j.rows() / 2; }
    int g2() const { return a_k.rows() / 2; }

    /// The full Seifert matrix [[A_J, B], [B^T, A_K]].
    IntMat assembled() const;
};

/// The two Seifert matrices of an almost classical knot.
struct ACSeifertPair {
    IntMat v_minus;
    IntMat v_plus;

    ACSeifertPair() = default;
    ACSeifertPair(IntMat vm, IntMat vp);
};

/// det(tV - V^T) for a classical Seifert matrix V.
LaurentPoly1 alexander_classical(const IntMat& v);

/// det(tV^- - V^+).
LaurentPoly1 alexander_ac(const ACSeifertPair& p);

/// det(AT - A^T) with T = diag(t1 on the A_J block, t2 on the A_K block).
LaurentPoly2 mvap(const BlockSeifert& bs);

/// V^- = A_K - B^T A_J^-1 B and V^+ = A_K^T - B^T A_J^-1 B.
/// Requires det(A_J) = +-1 (throws NotUnimodular otherwise).
ACSeifertPair vpm_from_block(const BlockSeifert& bs);

/// lk_Sigma(y, x) = lk(y, x) - l_y^T A_J^-1 l_x.
Int lk_sigma(const Int& lk, const std::vector<Int>& l_y, const std::vector<Int>& l_x,
             const IntMat& a_j);

struct Thm31Report {
    LaurentPoly1 lhs;
    LaurentPoly1 rhs;
    int sign = 1;  // det(A_J)
    bool pass = false;
};

/// Checks det(tV^- - V^+) = det(A_J) * t^(2g2) * mvap(bs)(0, t^-1) exactly.
Thm31Report thm31_check(const BlockSeifert& bs);

/// 2g x 2g block diagonal of [[0,1],[-1,0]].
IntMat intersection_form(int g);

/// 2g x 2g block diagonal of H = [[-1,1],[0,-1]].
IntMat trefoil_sum_seifert(int g);

/// Random unimodular matrix: elementary row/column operations applied to
/// trefoil_sum_seifert(g), keeping entries within the given bound. A random
/// row+column swap may flip the determinant to -1.
IntMat random_unimodular(int g, std::mt19937_64& rng, int max_ops = 20, long entry_bound = 3);

/// Random BlockSeifert with the A_J block unimodular by construction.
BlockSeifert random_block_seifert(int max_g, std::mt19937_64& rng, long entry_bound = 3);

/// Random square matrix with A - A^T equal to the standard intersection
/// form, the shape every honest Seifert matrix has.
IntMat random_seifert_like(int g, std::mt19937_64& rng, long entry_bound = 3);

/// Random BlockSeifert whose blocks are both Seifert-like; this is the
/// family on which the one-variable specializations of mvap recover the
/// per-component Alexander polynomials.
BlockSeifert random_seifert_block(int max_g, std::mt19937_64& rng, long entry_bound = 3);

} // namespace vkn::seifert
