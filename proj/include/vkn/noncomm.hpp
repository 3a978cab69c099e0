#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "vkn/errors.hpp"

namespace vkn::poly {

/// Word in noncommuting symbols h_1, h_2, ... (1-based indices).
using HWord = std::vector<int>;

/// Truncated integer series in noncommuting symbols h_1..h_k.
/// Words longer than the truncation degree are discarded on the fly.
class NoncommSeries {
public:
    explicit NoncommSeries(int degree = 2);
    static NoncommSeries one(int degree = 2);
    // 1 + h_i, or the truncated geometric series for (1 + h_i)^-1.
    static NoncommSeries one_plus(int symbol, int degree);
    static NoncommSeries one_plus_inverse(int symbol, int degree);

    int degree() const noexcept { return degree_; }
    const std::map<HWord, mpz_class>& terms() const noexcept { return terms_; }

    NoncommSeries& operator+=(const NoncommSeries& o);
    friend NoncommSeries operator+(NoncommSeries a, const NoncommSeries& b) { return a += b; }
    friend NoncommSeries operator*(const NoncommSeries& a, const NoncommSeries& b);
    bool operator==(const NoncommSeries& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    void add(const HWord& w, const mpz_class& c);

private:
    int degree_;
    std::map<HWord, mpz_class> terms_;
};

/// Letter of a word in the free generators m_1^+-1, ..., m_k^+-1.
struct MLetter {
    int symbol;    // 1-based
    int exponent;  // +1 or -1
};

/// Magnus expansion: m_i -> 1 + h_i and m_i^-1 -> 1 - h_i + h_i^2 - ...,
/// truncated at the given degree. The empty word expands to 1.
NoncommSeries magnus_expand(const std::vector<MLetter>& word, int degree);

/// Stored coefficient of w, or 0. Throws WordTooLong past the truncation.
mpz_class coeff(const NoncommSeries& s, const HWord& w);

} // namespace vkn::poly
