#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include "vkn/errors.hpp"

namespace vkn::poly {

using Int = mpz_class;

/// Exact integer Laurent polynomial in one variable.
///
/// Terms are kept in a map from exponent to coefficient; no stored
/// coefficient is zero, so the zero polynomial is the empty map.
class LaurentPoly1 {
public:
    using Terms = std::map<long, Int>;

    LaurentPoly1() = default;
    explicit LaurentPoly1(const Int& constant);
    static LaurentPoly1 monomial(const Int& coeff, long exp);
    static LaurentPoly1 var();  // t

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Int coeff(long exp) const;
    long min_exp() const;  // requires nonzero
    long max_exp() const;

    LaurentPoly1& operator+=(const LaurentPoly1& o);
    LaurentPoly1& operator-=(const LaurentPoly1& o);
    friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
    friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
    LaurentPoly1 operator-() const;
    bool operator==(const LaurentPoly1& o) const { return terms_ == o.terms_; }

    // Multiply by coeff * t^exp.
    LaurentPoly1 shifted(const Int& coeff, long exp) const;

    Int eval(const Int& x) const;  // requires min_exp >= 0 or x invertible; x=0 guarded

    void set(long exp, const Int& c);

private:
    Terms terms_;
};

/// Exact integer Laurent polynomial in two variables t1, t2.
class LaurentPoly2 {
public:
    using Exp = std::pair<long, long>;
    using Terms = std::map<Exp, Int>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(const Int& constant);
    static LaurentPoly2 monomial(const Int& coeff, long e1, long e2);
    static LaurentPoly2 var1();
    static LaurentPoly2 var2();

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Int coeff(long e1, long e2) const;

    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    LaurentPoly2 operator-() const;
    bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

    LaurentPoly2 shifted(const Int& coeff, long e1, long e2) const;
    LaurentPoly2 swap_vars() const;

    void set(long e1, long e2, const Int& c);

private:
    Terms terms_;
};

/// Canonical representative modulo multiplication by units +-t^k
/// (resp. +-t1^a t2^b). The normal form has minimal exponent 0 in each
/// variable and positive coefficient on its lexicographically least
/// monomial; original = unit * normal.
struct UnitNormalForm1 {
    LaurentPoly1 normal;
    int unit_sign = 1;   // +-1
    long unit_exp = 0;   // unit = unit_sign * t^unit_exp
};

struct UnitNormalForm2 {
    LaurentPoly2 normal;
    int unit_sign = 1;
    long unit_exp1 = 0;
    long unit_exp2 = 0;
};

UnitNormalForm1 normalize(const LaurentPoly1& p);
UnitNormalForm2 normalize(const LaurentPoly2& p);

bool eq_up_to_units(const LaurentPoly1& p, const LaurentPoly1& q);
bool eq_up_to_units(const LaurentPoly2& p, const LaurentPoly2& q);

/// Substitution target for one variable of a LaurentPoly2.
struct SubstInt { Int value; };
struct SubstT {};     // variable -> t
struct SubstTInv {};  // variable -> t^-1
using Substitution = std::variant<SubstInt, SubstT, SubstTInv>;

/// Substitute both variables. Substituting 0 into a variable that occurs
/// with negative exponents throws NegativeExponentAtZero.
LaurentPoly1 specialize(const LaurentPoly2& p, const Substitution& s1, const Substitution& s2);

/// Exact division; throws Error("InexactDivision") if d does not divide p.
LaurentPoly1 exact_div(const LaurentPoly1& p, const LaurentPoly1& d);
LaurentPoly2 exact_div(const LaurentPoly2& p, const LaurentPoly2& d);

// Text format: monomials sorted by exponent, e.g. "1 - 2*t + 2*t^2" and
// "-2 + 8*t1 - 10*t1^2*t2". to_string/parse round-trip.
std::string to_string(const LaurentPoly1& p, const std::string& var = "t");
std::string to_string(const LaurentPoly2& p,
                      const std::string& var1 = "t1", const std::string& var2 = "t2");
LaurentPoly1 parse_poly1(const std::string& text, const std::string& var = "t");
LaurentPoly2 parse_poly2(const std::string& text,
                         const std::string& var1 = "t1", const std::string& var2 = "t2");

} // namespace vkn::poly
