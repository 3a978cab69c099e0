#include "vkn/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vkn::poly {

// --- LaurentPoly1 ---

LaurentPoly1::LaurentPoly1(const Int& constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly1 LaurentPoly1::monomial(const Int& coeff, long exp) {
    LaurentPoly1 p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

LaurentPoly1 LaurentPoly1::var() { return monomial(1, 1); }

Int LaurentPoly1::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly1::min_exp() const { return terms_.begin()->first; }
long LaurentPoly1::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly1::set(long exp, const Int& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto& slot = r.terms_[ea + eb];
            slot += ca * cb;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

LaurentPoly1 LaurentPoly1::operator-() const {
    LaurentPoly1 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly1 LaurentPoly1::shifted(const Int& coeff, long exp) const {
    LaurentPoly1 r;
    if (coeff == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e + exp] = c * coeff;
    return r;
}

Int LaurentPoly1::eval(const Int& x) const {
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0) {
            if (x != 1 && x != -1)
                throw Error("NegativeExponentAtZero",
                            "cannot evaluate negative exponent at non-unit integer");
            Int p = (x == -1 && (e % 2 != 0)) ? Int(-1) : Int(1);
            acc += c * p;
            continue;
        }
        Int p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
        acc += c * p;
    }
    return acc;
}

// --- LaurentPoly2 ---

LaurentPoly2::LaurentPoly2(const Int& constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

LaurentPoly2 LaurentPoly2::monomial(const Int& coeff, long e1, long e2) {
    LaurentPoly2 p;
    if (coeff != 0) p.terms_[{e1, e2}] = coeff;
    return p;
}

LaurentPoly2 LaurentPoly2::var1() { return monomial(1, 1, 0); }
LaurentPoly2 LaurentPoly2::var2() { return monomial(1, 0, 1); }

Int LaurentPoly2::coeff(long e1, long e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::set(long e1, long e2, const Int& c) {
    if (c == 0)
        terms_.erase({e1, e2});
    else
        terms_[{e1, e2}] = c;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto& slot = r.terms_[{ea.first + eb.first, ea.second + eb.second}];
            slot += ca * cb;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly2 LaurentPoly2::shifted(const Int& coeff, long e1, long e2) const {
    LaurentPoly2 r;
    if (coeff == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first + e1, e.second + e2}] = c * coeff;
    return r;
}

LaurentPoly2 LaurentPoly2::swap_vars() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_[{e.second, e.first}] = c;
    return r;
}

// --- normalization ---

UnitNormalForm1 normalize(const LaurentPoly1& p) {
    UnitNormalForm1 nf;
    if (p.is_zero()) return nf;  // zero normalizes to zero with unit +1
    long m = p.min_exp();
    LaurentPoly1 shifted = p.shifted(1, -m);
    int sign = (shifted.terms().begin()->second < 0) ? -1 : 1;
    nf.normal = (sign < 0) ? -shifted : shifted;
    nf.unit_sign = sign;
    nf.unit_exp = m;
    return nf;
}

UnitNormalForm2 normalize(const LaurentPoly2& p) {
    UnitNormalForm2 nf;
    if (p.is_zero()) return nf;
    long m1 = p.terms().begin()->first.first;
    long m2 = p.terms().begin()->first.second;
    for (const auto& [e, c] : p.terms()) {
        m1 = std::min(m1, e.first);
        m2 = std::min(m2, e.second);
    }
    LaurentPoly2 shifted = p.shifted(1, -m1, -m2);
    int sign = (shifted.terms().begin()->second < 0) ? -1 : 1;
    nf.normal = (sign < 0) ? -shifted : shifted;
    nf.unit_sign = sign;
    nf.unit_exp1 = m1;
    nf.unit_exp2 = m2;
    return nf;
}

bool eq_up_to_units(const LaurentPoly1& p, const LaurentPoly1& q) {
    return normalize(p).normal == normalize(q).normal;
}

bool eq_up_to_units(const LaurentPoly2& p, const LaurentPoly2& q) {
    return normalize(p).normal == normalize(q).normal;
}

// --- specialization ---

namespace {

// x^e for integer x, e possibly negative only when |x| == 1.
Int int_pow(const Int& x, long e) {
    if (e < 0) {
        if (x == 1) return 1;
        if (x == -1) return (e % 2 == 0) ? Int(1) : Int(-1);
        throw Error("NegativeExponentAtZero",
                    "negative exponent cannot be specialized at this integer");
    }
    Int p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    return p;
}

} // namespace

LaurentPoly1 specialize(const LaurentPoly2& p, const Substitution& s1, const Substitution& s2) {
    for (const auto& [e, c] : p.terms()) {
        if (e.first < 0)
            if (const auto* si = std::get_if<SubstInt>(&s1); si && si->value == 0)
                throw Error("NegativeExponentAtZero", "t1 -> 0 with negative t1 exponent");
        if (e.second < 0)
            if (const auto* si = std::get_if<SubstInt>(&s2); si && si->value == 0)
                throw Error("NegativeExponentAtZero", "t2 -> 0 with negative t2 exponent");
    }
    LaurentPoly1 out;
    auto apply = [](const Substitution& s, long e) -> std::pair<Int, long> {
        if (const auto* si = std::get_if<SubstInt>(&s)) {
            if (si->value == 0) return {e == 0 ? Int(1) : Int(0), 0};
            return {int_pow(si->value, e), 0};
        }
        if (std::holds_alternative<SubstT>(s)) return {Int(1), e};
        return {Int(1), -e};  // SubstTInv
    };
    for (const auto& [e, c] : p.terms()) {
        auto [c1, x1] = apply(s1, e.first);
        auto [c2, x2] = apply(s2, e.second);
        Int coeff = c * c1 * c2;
        if (coeff == 0) continue;
        out += LaurentPoly1::monomial(coeff, x1 + x2);
    }
    return out;
}

// --- exact division ---

LaurentPoly1 exact_div(const LaurentPoly1& p, const LaurentPoly1& d) {
    if (d.is_zero()) throw Error("InexactDivision", "division by zero polynomial");
    if (p.is_zero()) return {};
    // Strip monomial units so both are honest polynomials.
    long sp = p.min_exp(), sd = d.min_exp();
    LaurentPoly1 r = p.shifted(1, -sp);
    LaurentPoly1 dd = d.shifted(1, -sd);
    const long dde = dd.max_exp();
    const Int& dlc = dd.terms().rbegin()->second;
    LaurentPoly1 q;
    while (!r.is_zero()) {
        long re = r.max_exp();
        if (re < dde) throw Error("InexactDivision", "remainder of lower degree");
        const Int& rlc = r.terms().rbegin()->second;
        Int qc = rlc / dlc;
        if (qc * dlc != rlc) throw Error("InexactDivision", "leading coefficient not divisible");
        LaurentPoly1 m = LaurentPoly1::monomial(qc, re - dde);
        q += m;
        r -= m * dd;
    }
    return q.shifted(1, sp - sd);
}

LaurentPoly2 exact_div(const LaurentPoly2& p, const LaurentPoly2& d) {
    if (d.is_zero()) throw Error("InexactDivision", "division by zero polynomial");
    if (p.is_zero()) return {};
    long sp1 = 0, sp2 = 0, sd1 = 0, sd2 = 0;
    auto mins = [](const LaurentPoly2& f, long& a, long& b) {
        a = f.terms().begin()->first.first;
        b = f.terms().begin()->first.second;
        for (const auto& [e, c] : f.terms()) {
            a = std::min(a, e.first);
            b = std::min(b, e.second);
        }
    };
    mins(p, sp1, sp2);
    mins(d, sd1, sd2);
    LaurentPoly2 r = p.shifted(1, -sp1, -sp2);
    LaurentPoly2 dd = d.shifted(1, -sd1, -sd2);
    // Lex-leading term of dd (largest (e1,e2) in map order).
    const auto dlead = *dd.terms().rbegin();
    LaurentPoly2 q;
    while (!r.is_zero()) {
        const auto rlead = *r.terms().rbegin();
        long e1 = rlead.first.first - dlead.first.first;
        long e2 = rlead.first.second - dlead.first.second;
        if (e1 < 0 || e2 < 0) throw Error("InexactDivision", "leading monomial not divisible");
        Int qc = rlead.second / dlead.second;
        if (qc * dlead.second != rlead.second)
            throw Error("InexactDivision", "leading coefficient not divisible");
        LaurentPoly2 m = LaurentPoly2::monomial(qc, e1, e2);
        q += m;
        r -= m * dd;
    }
    return q.shifted(1, sp1 - sd1, sp2 - sd2);
}

// --- text format ---

namespace {

void append_term(std::ostringstream& os, bool first, const Int& c, const std::string& vars) {
    Int a = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (vars.empty()) {
        os << a.get_str();
    } else if (a == 1) {
        os << vars;
    } else {
        os << a.get_str() << "*" << vars;
    }
}

std::string var_part(const std::string& var, long e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

} // namespace

std::string to_string(const LaurentPoly1& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        append_term(os, first, c, var_part(var, e));
        first = false;
    }
    return os.str();
}

std::string to_string(const LaurentPoly2& p, const std::string& var1, const std::string& var2) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string v = var_part(var1, e.first);
        std::string w = var_part(var2, e.second);
        std::string vars = v.empty() ? w : (w.empty() ? v : v + "*" + w);
        append_term(os, first, c, vars);
        first = false;
    }
    return os.str();
}

namespace {

struct Tok {
    int sign = 1;
    Int coeff = 1;
    bool has_coeff = false;
    std::map<std::string, long> exps;
};

// Split "c*v1^e1*v2^e2" pieces separated by +/-.
std::vector<Tok> lex_poly(const std::string& text) {
    std::vector<Tok> toks;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw syntax_error("empty polynomial");
    bool expect_term = true;
    int pending_sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        char ch = text[i];
        if (ch == '+' || ch == '-') {
            if (expect_term && !toks.empty()) throw syntax_error("dangling sign");
            pending_sign *= (ch == '-') ? -1 : 1;
            ++i;
            expect_term = true;
            continue;
        }
        // One term: factors separated by '*'.
        Tok t;
        t.sign = pending_sign;
        pending_sign = 1;
        bool want_factor = true;
        while (true) {
            skip_ws();
            if (i < text.size() && want_factor) {
                char c0 = text[i];
                if (std::isdigit(static_cast<unsigned char>(c0))) {
                    size_t j = i;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                    Int v(text.substr(i, j - i));
                    t.coeff *= v;
                    t.has_coeff = true;
                    i = j;
                } else if (std::isalpha(static_cast<unsigned char>(c0))) {
                    size_t j = i;
                    while (j < text.size() &&
                           (std::isalnum(static_cast<unsigned char>(text[j])))) ++j;
                    std::string name = text.substr(i, j - i);
                    i = j;
                    long e = 1;
                    skip_ws();
                    if (i < text.size() && text[i] == '^') {
                        ++i;
                        skip_ws();
                        bool neg = false;
                        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                            neg = text[i] == '-';
                            ++i;
                        }
                        size_t k = i;
                        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                        if (k == i) throw syntax_error("missing exponent");
                        e = std::stol(text.substr(i, k - i));
                        if (neg) e = -e;
                        i = k;
                    }
                    t.exps[name] += e;
                } else {
                    throw syntax_error(std::string("unexpected character '") + c0 + "'");
                }
                want_factor = false;
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                want_factor = true;
                continue;
            }
            break;
        }
        if (want_factor) throw syntax_error("dangling '*'");
        toks.push_back(std::move(t));
        expect_term = false;
    }
    if (expect_term) throw syntax_error("dangling sign at end");
    if (toks.empty()) throw syntax_error("empty polynomial");
    return toks;
}

} // namespace

LaurentPoly1 parse_poly1(const std::string& text, const std::string& var) {
    LaurentPoly1 p;
    for (const auto& t : lex_poly(text)) {
        long e = 0;
        for (const auto& [name, ex] : t.exps) {
            if (name != var) throw syntax_error("unknown variable '" + name + "'");
            e += ex;
        }
        if (!t.has_coeff && t.exps.empty()) throw syntax_error("empty term");
        p += LaurentPoly1::monomial(t.sign * t.coeff, e);
    }
    return p;
}

LaurentPoly2 parse_poly2(const std::string& text, const std::string& var1, const std::string& var2) {
    LaurentPoly2 p;
    for (const auto& t : lex_poly(text)) {
        long e1 = 0, e2 = 0;
        for (const auto& [name, ex] : t.exps) {
            if (name == var1)
                e1 += ex;
            else if (name == var2)
                e2 += ex;
            else
                throw syntax_error("unknown variable '" + name + "'");
        }
        if (!t.has_coeff && t.exps.empty()) throw syntax_error("empty term");
        p += LaurentPoly2::monomial(t.sign * t.coeff, e1, e2);
    }
    return p;
}

} // namespace vkn::poly
