#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vkn/laurent.hpp"
#include "vkn/noncomm.hpp"

using namespace vkn::poly;

namespace {

LaurentPoly1 random_poly1(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expd(-4, 4), coefd(-6, 6);
    LaurentPoly1 p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly1::monomial(coefd(rng), expd(rng));
    return p;
}

LaurentPoly2 random_poly2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expd(-3, 3), coefd(-6, 6);
    LaurentPoly2 p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly2::monomial(coefd(rng), expd(rng), expd(rng));
    return p;
}

std::vector<MLetter> random_mword(std::mt19937_64& rng, int symbols = 3, int max_len = 6) {
    std::uniform_int_distribution<int> lend(0, max_len), gend(1, symbols), bit(0, 1);
    std::vector<MLetter> w;
    int n = lend(rng);
    for (int i = 0; i < n; ++i) w.push_back({gend(rng), bit(rng) ? 1 : -1});
    return w;
}

// The two-variable polynomial printed for the 8_21 boundary link example;
// reused by the acceptance suite.
LaurentPoly2 example_nabla() {
    LaurentPoly2 p;
    const long c[3][5] = {
        {-2, 8, -10, 6, -1},  // t2^0
        {2, -10, 15, -10, 2}, // t2^1
        {-1, 6, -10, 8, -2},  // t2^2
    };
    for (long b = 0; b < 3; ++b)
        for (long a = 0; a < 5; ++a) p += LaurentPoly2::monomial(c[b][a], a, b);
    return p;
}

} // namespace

TEST_CASE("normalization: zero, shifted, monomial") {
    UnitNormalForm1 z = normalize(LaurentPoly1{});
    CHECK(z.normal.is_zero());
    CHECK(z.unit_sign == 1);
    CHECK(z.unit_exp == 0);

    // -2t^2 + 2t^3 - t^4  ->  2 - 2t + t^2, unit -t^2
    LaurentPoly1 p;
    p += LaurentPoly1::monomial(-2, 2);
    p += LaurentPoly1::monomial(2, 3);
    p += LaurentPoly1::monomial(-1, 4);
    UnitNormalForm1 nf = normalize(p);
    CHECK(to_string(nf.normal) == "2 - 2*t + t^2");
    CHECK(nf.unit_sign == -1);
    CHECK(nf.unit_exp == 2);

    UnitNormalForm2 m = normalize(LaurentPoly2::monomial(1, 1, 1));
    CHECK(to_string(m.normal) == "1");
    CHECK(m.unit_sign == 1);
    CHECK(m.unit_exp1 == 1);
    CHECK(m.unit_exp2 == 1);
}

TEST_CASE("normalize reconstructs the original and is idempotent") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly1 p = random_poly1(rng);
        UnitNormalForm1 nf = normalize(p);
        CHECK(nf.normal.shifted(nf.unit_sign, nf.unit_exp) == p);
        CHECK(normalize(nf.normal).normal == nf.normal);
        LaurentPoly2 q = random_poly2(rng);
        UnitNormalForm2 nf2 = normalize(q);
        CHECK(nf2.normal.shifted(nf2.unit_sign, nf2.unit_exp1, nf2.unit_exp2) == q);
        CHECK(normalize(nf2.normal).normal == nf2.normal);
    }
}

TEST_CASE("eq_up_to_units") {
    LaurentPoly1 a = parse_poly1("1 - 2*t + 2*t^2");
    // -t^2 * (-2 + 2t^-1 - t^-2)
    LaurentPoly1 b = parse_poly1("-2 + 2*t^-1 - t^-2").shifted(-1, 2);
    CHECK(eq_up_to_units(a, b));
    CHECK_FALSE(eq_up_to_units(parse_poly1("t"), parse_poly1("t + 1")));

    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly1 p = random_poly1(rng);
        CHECK(eq_up_to_units(p, p.shifted(-1, 3)));
        CHECK(eq_up_to_units(p, p));  // reflexive
        LaurentPoly1 q = random_poly1(rng);
        CHECK(eq_up_to_units(p, q) == eq_up_to_units(q, p));  // symmetric
    }
}

TEST_CASE("specialize on the boundary-link example polynomial") {
    LaurentPoly2 nabla = example_nabla();
    LaurentPoly1 at0 = specialize(nabla, SubstInt{0}, SubstTInv{});
    CHECK(to_string(at0) == "-t^-2 + 2*t^-1 - 2");

    LaurentPoly1 diag = specialize(nabla, SubstT{}, SubstInt{1});
    CHECK(to_string(diag) == "-1 + 4*t - 5*t^2 + 4*t^3 - t^4");

    LaurentPoly1 both1 = specialize(nabla, SubstInt{1}, SubstInt{1});
    CHECK(to_string(both1) == "1");
}

TEST_CASE("specialize rejects 0 at negative exponents") {
    LaurentPoly2 p = LaurentPoly2::monomial(3, -1, 2);
    CHECK_THROWS_WITH_AS(specialize(p, SubstInt{0}, SubstT{}), doctest::Contains("t1"),
                         vkn::Error);
    // but 0 in the other variable is fine
    CHECK(specialize(p, SubstT{}, SubstInt{0}).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 150; ++i) {
        LaurentPoly1 p = random_poly1(rng), q = random_poly1(rng), r = random_poly1(rng);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        LaurentPoly2 a = random_poly2(rng), b = random_poly2(rng), c = random_poly2(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 150; ++i) {
        LaurentPoly1 p = random_poly1(rng), d = random_poly1(rng);
        if (d.is_zero()) continue;
        CHECK(exact_div(p * d, d) == p);
        LaurentPoly2 a = random_poly2(rng), e = random_poly2(rng);
        if (e.is_zero()) continue;
        CHECK(exact_div(a * e, e) == a);
    }
    CHECK_THROWS_AS(exact_div(parse_poly1("t + 1"), parse_poly1("2*t")), vkn::Error);
}

TEST_CASE("text format round trip") {
    CHECK(to_string(LaurentPoly1{}) == "0");
    const char* samples1[] = {"1 - 2*t + 2*t^2", "-t^-2 + 2*t^-1 - 2", "q", "-3*t^5"};
    for (const char* s : samples1) {
        std::string var = (s[0] == 'q') ? "q" : "t";
        CHECK(to_string(parse_poly1(s, var), var) == s);
    }
    LaurentPoly2 nabla = example_nabla();
    CHECK(parse_poly2(to_string(nabla)) == nabla);
    CHECK(to_string(parse_poly2("-2 + 8*t1 - 10*t1^2*t2")) == "-2 + 8*t1 - 10*t1^2*t2");
    CHECK_THROWS_AS(parse_poly1("1 + + t"), vkn::Error);
    CHECK_THROWS_AS(parse_poly1("2*s"), vkn::Error);
    CHECK_THROWS_AS(parse_poly1(""), vkn::Error);
}

TEST_CASE("magnus expansion examples") {
    NoncommSeries one = magnus_expand({}, 2);
    CHECK(one == NoncommSeries::one(2));

    // m1 m2 m1^-1 m2^-1 -> 1 + h1 h2 - h2 h1
    NoncommSeries comm = magnus_expand({{1, 1}, {2, 1}, {1, -1}, {2, -1}}, 2);
    CHECK(coeff(comm, {}) == 1);
    CHECK(coeff(comm, {1, 2}) == 1);
    CHECK(coeff(comm, {2, 1}) == -1);
    CHECK(coeff(comm, {1}) == 0);
    CHECK(coeff(comm, {2}) == 0);
    CHECK(comm.terms().size() == 3);

    // m1^3 -> 1 + 3 h1 + 3 h1 h1
    NoncommSeries cube = magnus_expand({{1, 1}, {1, 1}, {1, 1}}, 2);
    CHECK(coeff(cube, {}) == 1);
    CHECK(coeff(cube, {1}) == 3);
    CHECK(coeff(cube, {1, 1}) == 3);

    CHECK(coeff(magnus_expand({{2, 1}, {3, 1}}, 2), {2, 3}) == 1);
    CHECK_THROWS_AS(coeff(one, {1, 1, 1}), vkn::Error);
}

TEST_CASE("magnus expansion is multiplicative and kills inverses") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 120; ++i) {
        auto w1 = random_mword(rng), w2 = random_mword(rng);
        auto cat = w1;
        cat.insert(cat.end(), w2.begin(), w2.end());
        CHECK(magnus_expand(cat, 2) == magnus_expand(w1, 2) * magnus_expand(w2, 2));

        auto inv = w1;
        std::reverse(inv.begin(), inv.end());
        for (auto& l : inv) l.exponent = -l.exponent;
        auto prod = w1;
        prod.insert(prod.end(), inv.begin(), inv.end());
        CHECK(magnus_expand(prod, 2) == NoncommSeries::one(2));
        CHECK(magnus_expand(prod, 3) == NoncommSeries::one(3));
    }
}
