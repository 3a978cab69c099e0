#include "vkn/noncomm.hpp"

namespace vkn::poly {

NoncommSeries::NoncommSeries(int degree) : degree_(degree) {
    if (degree < 1) throw Error("BadTruncation", "truncation degree must be >= 1");
}

NoncommSeries NoncommSeries::one(int degree) {
    NoncommSeries s(degree);
    s.terms_[{}] = 1;
    return s;
}

NoncommSeries NoncommSeries::one_plus(int symbol, int degree) {
    NoncommSeries s = one(degree);
    s.terms_[HWord{symbol}] = 1;
    return s;
}

NoncommSeries NoncommSeries::one_plus_inverse(int symbol, int degree) {
    // 1 - h + h^2 - ... up to the truncation degree.
    NoncommSeries s(degree);
    HWord w;
    mpz_class c = 1;
    for (int len = 0; len <= degree; ++len) {
        s.terms_[w] = c;
        w.push_back(symbol);
        c = -c;
    }
    return s;
}

void NoncommSeries::add(const HWord& w, const mpz_class& c) {
    if (static_cast<int>(w.size()) > degree_) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NoncommSeries& NoncommSeries::operator+=(const NoncommSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NoncommSeries operator*(const NoncommSeries& a, const NoncommSeries& b) {
    NoncommSeries r(a.degree_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            if (static_cast<int>(wa.size() + wb.size()) > r.degree_) continue;
            HWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

NoncommSeries magnus_expand(const std::vector<MLetter>& word, int degree) {
    NoncommSeries acc = NoncommSeries::one(degree);
    for (const MLetter& l : word) {
        if (l.symbol < 1) throw Error("IndexOutOfRange", "symbol indices are 1-based");
        if (l.exponent != 1 && l.exponent != -1)
            throw Error("IndexOutOfRange", "letter exponents must be +-1");
        acc = acc * (l.exponent == 1 ? NoncommSeries::one_plus(l.symbol, degree)
                                     : NoncommSeries::one_plus_inverse(l.symbol, degree));
    }
    return acc;
}

mpz_class coeff(const NoncommSeries& s, const HWord& w) {
    if (static_cast<int>(w.size()) > s.degree())
        throw Error("WordTooLong", "word exceeds the series truncation degree");
    auto it = s.terms().find(w);
    return it == s.terms().end() ? mpz_class(0) : it->second;
}

} // namespace vkn::poly
