#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vkn/seifert.hpp"

using namespace vkn;
using namespace vkn::seifert;
using la::Int;
using la::IntMat;
using poly::LaurentPoly1;
using poly::LaurentPoly2;

namespace {

IntMat from_rows(std::vector<std::vector<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

IntMat trefoil_h() { return from_rows({{-1, 1}, {0, -1}}); }

IntMat random_int_matrix(int n, std::mt19937_64& rng, long bound = 4) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

} // namespace

TEST_CASE("det_exact basics and the Bareiss/cofactor cross-check") {
    CHECK(la::det_exact(la::PolyMat1{}) == LaurentPoly1(1));

    la::PolyMat1 m(2, 2);
    m.at(0, 0) = LaurentPoly1::var();
    m.at(0, 1) = LaurentPoly1(1);
    m.at(1, 0) = LaurentPoly1(1);
    m.at(1, 1) = LaurentPoly1::var();
    CHECK(poly::to_string(la::det_exact(m)) == "-1 + t^2");

    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        for (int n = 1; n <= 5; ++n) {
            IntMat a = random_int_matrix(n, rng);
            CHECK(la::det_bareiss(a) == la::det_cofactor(a));
        }
        IntMat b = random_int_matrix(6, rng, 3);
        CHECK(la::det_bareiss(b) == la::det_cofactor(b));
    }

    IntMat ns(2, 3);
    CHECK_THROWS_AS(la::det_exact(ns), Error);
}

TEST_CASE("alexander_classical") {
    CHECK(alexander_classical(IntMat{}) == LaurentPoly1(1));
    CHECK(poly::to_string(alexander_classical(trefoil_h())) == "1 - t + t^2");
    CHECK(poly::to_string(alexander_classical(from_rows({{1, 1}, {0, -1}}))) ==
          "-1 + 3*t - t^2");
    CHECK_THROWS_AS(alexander_classical(from_rows({{1}})), Error);
    CHECK_THROWS_AS(alexander_classical(la::IntMat(2, 3)), Error);
}

TEST_CASE("alexander_ac and congruence invariance") {
    CHECK(alexander_ac(ACSeifertPair{}) == LaurentPoly1(1));
    // V- = V+ = H: det((t-1)H) = (t-1)^2
    ACSeifertPair eq{trefoil_h(), trefoil_h()};
    CHECK(poly::to_string(alexander_ac(eq)) == "1 - 2*t + t^2");

    std::mt19937_64 rng(32);
    for (int i = 0; i < 60; ++i) {
        IntMat vm = random_int_matrix(4, rng), vp = random_int_matrix(4, rng);
        IntMat m = random_unimodular(2, rng);
        ACSeifertPair orig{vm, vp};
        ACSeifertPair conj{m.transposed() * vm * m, m.transposed() * vp * m};
        CHECK(alexander_ac(orig) == alexander_ac(conj));
    }

    CHECK_THROWS_AS(alexander_ac(ACSeifertPair{IntMat(2, 2), IntMat(4, 4)}), Error);
}

TEST_CASE("mvap basics") {
    BlockSeifert just_j{trefoil_h(), IntMat{}, IntMat(2, 0)};
    CHECK(poly::to_string(mvap(just_j)) == "1 - t1 + t1^2");
}

TEST_CASE("mvap specializations recover the one-variable polynomials") {
    // Needs Seifert-like blocks: setting t2 = 1 factors out det(A_K - A_K^T),
    // which is a unit exactly when A_K has honest Seifert shape.
    std::mt19937_64 rng(33);
    for (int i = 0; i < 40; ++i) {
        BlockSeifert bs = random_seifert_block(2, rng);
        LaurentPoly2 nabla = mvap(bs);
        CHECK(poly::eq_up_to_units(poly::specialize(nabla, poly::SubstT{}, poly::SubstInt{1}),
                                   alexander_classical(bs.a_j)));
        CHECK(poly::eq_up_to_units(poly::specialize(nabla, poly::SubstInt{1}, poly::SubstT{}),
                                   alexander_classical(bs.a_k)));
    }
}

TEST_CASE("mvap block swap symmetry") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 40; ++i) {
        BlockSeifert bs = random_block_seifert(2, rng);
        BlockSeifert swapped{bs.a_k, bs.a_j, bs.b.transposed()};
        CHECK(mvap(swapped).swap_vars() == mvap(bs));
    }
}

TEST_CASE("vpm_from_block") {
    IntMat h = trefoil_h();
    SUBCASE("zero B gives the split pair") {
        BlockSeifert bs{h, h, IntMat(2, 2)};
        ACSeifertPair p = vpm_from_block(bs);
        CHECK(p.v_minus == h);
        CHECK(p.v_plus == h.transposed());
    }
    SUBCASE("difference is always A_K - A_K^T") {
        std::mt19937_64 rng(35);
        for (int i = 0; i < 60; ++i) {
            BlockSeifert bs = random_block_seifert(2, rng);
            ACSeifertPair p = vpm_from_block(bs);
            CHECK(p.v_minus - p.v_plus == bs.a_k - bs.a_k.transposed());
        }
    }
    SUBCASE("hand-checked 2x2 instance") {
        IntMat b(2, 2);
        b.at(0, 0) = 1;
        BlockSeifert bs{h, h, b};
        ACSeifertPair p = vpm_from_block(bs);
        CHECK(p.v_minus == from_rows({{0, 1}, {0, -1}}));
    }
    SUBCASE("non-unimodular A_J is rejected") {
        BlockSeifert bs{IntMat(2, 2), h, IntMat(2, 2)};
        CHECK_THROWS_WITH_AS(vpm_from_block(bs), doctest::Contains("not +-1"), Error);
    }
}

TEST_CASE("lk_sigma") {
    IntMat h = trefoil_h();
    CHECK(lk_sigma(7, {0, 0}, {1, -2}, h) == 7);
    CHECK(lk_sigma(0, {1, 0}, {0, 1}, h) == 1);
    CHECK(lk_sigma(5, {1, 0}, {1, 0}, h) == 6);
    CHECK_THROWS_AS(lk_sigma(0, {1}, {0, 1}, h), Error);
    IntMat twice = from_rows({{2, 0}, {0, 1}});
    CHECK_THROWS_AS(lk_sigma(0, {1, 0}, {0, 1}, twice), Error);
}

TEST_CASE("thm31_check") {
    IntMat h = trefoil_h();
    SUBCASE("genus-zero K") {
        BlockSeifert bs{h, IntMat{}, IntMat(2, 0)};
        Thm31Report rep = thm31_check(bs);
        CHECK(rep.pass);
        CHECK(rep.lhs == LaurentPoly1(1));
        CHECK(rep.rhs == LaurentPoly1(1));
        CHECK(rep.sign == 1);
    }
    SUBCASE("split trefoil pair") {
        BlockSeifert bs{h, h, IntMat(2, 2)};
        Thm31Report rep = thm31_check(bs);
        CHECK(rep.pass);
        CHECK(poly::to_string(rep.lhs) == "1 - t + t^2");
        CHECK(rep.rhs == rep.lhs);
    }
    SUBCASE("negative-determinant fixed part") {
        // swap the rows of H: determinant -1
        IntMat a = from_rows({{0, -1}, {-1, 1}});
        BlockSeifert bs{a, h, IntMat(2, 2)};
        Thm31Report rep = thm31_check(bs);
        CHECK(rep.sign == -1);
        CHECK(rep.pass);
    }
}

TEST_CASE("intersection form and trefoil sums") {
    CHECK(intersection_form(0).empty());
    CHECK(intersection_form(1) == from_rows({{0, 1}, {-1, 0}}));
    IntMat f2 = intersection_form(2);
    CHECK(f2.at(0, 1) == 1);
    CHECK(f2.at(2, 3) == 1);
    CHECK(f2.at(1, 2) == 0);

    for (int g = 1; g <= 4; ++g) {
        IntMat f = intersection_form(g);
        IntMat a = trefoil_sum_seifert(g);
        CHECK(a - a.transposed() == f);
        CHECK(la::negated(f) == la::inverse_unimodular(f));  // F^-1 = -F
        CHECK(f.transposed() == la::negated(f));             // F^T = -F
        CHECK(a.transposed() * f * a == f);
        // Delta(1) = +-1
        Int at1 = alexander_classical(a).eval(1);
        CHECK((at1 == 1 || at1 == -1));
    }
}

TEST_CASE("random unimodular matrices are unimodular and bounded") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 80; ++i) {
        IntMat a = random_unimodular(2, rng);
        Int d = la::det_int(a);
        CHECK((d == 1 || d == -1));
        CHECK(la::inverse_unimodular(a) * a == la::identity(4));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                CHECK(a.at(r, c) <= 3);
                CHECK(a.at(r, c) >= -3);
            }
    }
}
