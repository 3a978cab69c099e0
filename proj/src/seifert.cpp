#include "vkn/seifert.hpp"

namespace vkn::seifert {

using la::PolyMat1;
using la::PolyMat2;

BlockSeifert::BlockSeifert(IntMat aj, IntMat ak, IntMat mixed)
    : a_j(std::move(aj)), a_k(std::move(ak)), b(std::move(mixed)) {
    if (a_j.rows() != a_j.cols()) throw Error("NonSquare", "A_J must be square");
    if (a_k.rows() != a_k.cols()) throw Error("NonSquare", "A_K must be square");
    if (a_j.rows() % 2 != 0) throw Error("OddDimension", "A_J must be even-dimensional");
    if (a_k.rows() % 2 != 0) throw Error("OddDimension", "A_K must be even-dimensional");
    if (b.rows() != a_j.rows() || b.cols() != a_k.rows())
        throw Error("DimensionMismatch", "B must be 2g1 x 2g2");
}

IntMat BlockSeifert::assembled() const {
    const int n1 = a_j.rows(), n2 = a_k.rows();
    IntMat a(n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) a.at(i, j) = a_j.at(i, j);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) a.at(i, n1 + j) = b.at(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n1; ++j) a.at(n1 + i, j) = b.at(j, i);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) a.at(n1 + i, n1 + j) = a_k.at(i, j);
    return a;
}

ACSeifertPair::ACSeifertPair(IntMat vm, IntMat vp) : v_minus(std::move(vm)), v_plus(std::move(vp)) {
    if (v_minus.rows() != v_minus.cols() || v_plus.rows() != v_plus.cols())
        throw Error("NonSquare", "Seifert matrices must be square");
    if (v_minus.rows() != v_plus.rows())
        throw Error("DimensionMismatch", "V- and V+ must have equal dimensions");
}

LaurentPoly1 alexander_classical(const IntMat& v) {
    if (v.rows() != v.cols()) throw Error("NonSquare", "Seifert matrix must be square");
    if (v.rows() % 2 != 0) throw Error("OddDimension", "Seifert matrix must be even-dimensional");
    const int n = v.rows();
    PolyMat1 m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = LaurentPoly1::monomial(v.at(i, j), 1);
            m.at(i, j) -= LaurentPoly1(v.at(j, i));
        }
    return la::det_exact(m);
}

LaurentPoly1 alexander_ac(const ACSeifertPair& p) {
    const int n = p.v_minus.rows();
    if (n != p.v_plus.rows())
        throw Error("DimensionMismatch", "V- and V+ must have equal dimensions");
    PolyMat1 m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = LaurentPoly1::monomial(p.v_minus.at(i, j), 1);
            m.at(i, j) -= LaurentPoly1(p.v_plus.at(i, j));
        }
    return la::det_exact(m);
}

LaurentPoly2 mvap(const BlockSeifert& bs) {
    IntMat a = bs.assembled();
    const int n1 = bs.a_j.rows();
    const int n = a.rows();
    PolyMat2 m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // (AT)_{ij} = A_{ij} * t_{1 or 2 by column}, minus (A^T)_{ij}.
            m.at(i, j) = (j < n1) ? LaurentPoly2::monomial(a.at(i, j), 1, 0)
                                  : LaurentPoly2::monomial(a.at(i, j), 0, 1);
            m.at(i, j) -= LaurentPoly2(a.at(j, i));
        }
    return la::det_exact(m);
}

ACSeifertPair vpm_from_block(const BlockSeifert& bs) {
    IntMat inv = la::inverse_unimodular(bs.a_j);
    IntMat bt = bs.b.transposed();
    IntMat corr = bt * inv * bs.b;
    return {bs.a_k - corr, bs.a_k.transposed() - corr};
}

Int lk_sigma(const Int& lk, const std::vector<Int>& l_y, const std::vector<Int>& l_x,
             const IntMat& a_j) {
    if (static_cast<int>(l_y.size()) != a_j.rows() || static_cast<int>(l_x.size()) != a_j.rows())
        throw Error("DimensionMismatch", "vector length must match A_J dimension");
    IntMat inv = la::inverse_unimodular(a_j);
    return lk - la::dot(l_y, inv * l_x);
}

Thm31Report thm31_check(const BlockSeifert& bs) {
    Thm31Report rep;
    Int d = la::det_int(bs.a_j);
    if (d != 1 && d != -1) throw Error("NotUnimodular", "A_J must have determinant +-1");
    rep.sign = (d < 0) ? -1 : 1;
    rep.lhs = alexander_ac(vpm_from_block(bs));
    LaurentPoly1 spec =
        poly::specialize(mvap(bs), poly::SubstInt{0}, poly::SubstTInv{});
    rep.rhs = spec.shifted(rep.sign, 2 * bs.g2());
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

IntMat intersection_form(int g) {
    if (g < 0) throw Error("DimensionMismatch", "genus must be nonnegative");
    IntMat f(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        f.at(2 * i, 2 * i + 1) = 1;
        f.at(2 * i + 1, 2 * i) = -1;
    }
    return f;
}

IntMat trefoil_sum_seifert(int g) {
    if (g < 1) throw Error("DimensionMismatch", "genus must be >= 1");
    IntMat a(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        a.at(2 * i, 2 * i) = -1;
        a.at(2 * i, 2 * i + 1) = 1;
        a.at(2 * i + 1, 2 * i + 1) = -1;
    }
    return a;
}

IntMat random_unimodular(int g, std::mt19937_64& rng, int max_ops, long entry_bound) {
    IntMat a = trefoil_sum_seifert(g);
    const int n = a.rows();
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-1, 1);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int step = 0; step < max_ops; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        int k = kind(rng);
        if (k == 2) {
            // Row swap plus column swap keeps det; a lone row swap flips it.
            for (int c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
            continue;
        }
        Int c = coef(rng);
        if (c == 0) continue;
        IntMat trial = a;
        if (k == 0)
            for (int col = 0; col < n; ++col) trial.at(j, col) += c * trial.at(i, col);
        else
            for (int row = 0; row < n; ++row) trial.at(row, j) += c * trial.at(row, i);
        bool ok = true;
        for (int r = 0; r < n && ok; ++r)
            for (int col = 0; col < n; ++col)
                if (trial.at(r, col) > entry_bound || trial.at(r, col) < -entry_bound) {
                    ok = false;
                    break;
                }
        if (ok) a = trial;
    }
    return a;
}

IntMat random_seifert_like(int g, std::mt19937_64& rng, long entry_bound) {
    IntMat f = intersection_form(g);
    std::uniform_int_distribution<long> ent(-entry_bound, entry_bound);
    const int n = 2 * g;
    IntMat a(n, n);
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = ent(rng);
        for (int j = i + 1; j < n; ++j) {
            a.at(i, j) = ent(rng);
            a.at(j, i) = a.at(i, j) - f.at(i, j);
        }
    }
    return a;
}

BlockSeifert random_seifert_block(int max_g, std::mt19937_64& rng, long entry_bound) {
    std::uniform_int_distribution<int> gd(1, max_g);
    int g1 = gd(rng), g2 = gd(rng);
    std::uniform_int_distribution<long> ent(-entry_bound, entry_bound);
    IntMat b(2 * g1, 2 * g2);
    for (int i = 0; i < 2 * g1; ++i)
        for (int j = 0; j < 2 * g2; ++j) b.at(i, j) = ent(rng);
    return {random_seifert_like(g1, rng, entry_bound), random_seifert_like(g2, rng, entry_bound),
            std::move(b)};
}

BlockSeifert random_block_seifert(int max_g, std::mt19937_64& rng, long entry_bound) {
    std::uniform_int_distribution<int> g1d(1, max_g);
    std::uniform_int_distribution<int> g2d(0, max_g);
    int g1 = g1d(rng), g2 = g2d(rng);
    std::uniform_int_distribution<long> ent(-entry_bound, entry_bound);
    IntMat aj = random_unimodular(g1, rng);
    IntMat ak(2 * g2, 2 * g2), b(2 * g1, 2 * g2);
    for (int i = 0; i < 2 * g2; ++i)
        for (int j = 0; j < 2 * g2; ++j) ak.at(i, j) = ent(rng);
    for (int i = 0; i < 2 * g1; ++i)
        for (int j = 0; j < 2 * g2; ++j) b.at(i, j) = ent(rng);
    return {std::move(aj), std::move(ak), std::move(b)};
}

} // namespace vkn::seifert
