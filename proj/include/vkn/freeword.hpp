#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "vkn/errors.hpp"

namespace vkn::grp {

/// Letter x_g^e with e in {+1, -1}; generators are 1-based.
struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter&) const = default;
};

/// Word in a free group, kept freely reduced by the mutating operations.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce(); }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    size_t size() const noexcept { return letters_.size(); }

    void push(int gen, int exp);  // appends and cancels
    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const;
    bool operator==(const FreeWord&) const = default;

    long exponent_sum(int gen) const;

    /// Conjugate-of-generator decomposition: if *this == w x_g w^-1 with the
    /// center letter x_g^{+1}, returns w; throws otherwise.
    FreeWord conjugating_prefix(int gen) const;

    /// Removes matching inverse letters from both ends.
    FreeWord cyclically_reduced() const;

private:
    void reduce();
    std::vector<Letter> letters_;
};

/// Word syntax: whitespace-separated `m<k>` or `m<k>^-1` (prefix letter
/// configurable, e.g. "x" or bare digits for surface-intersection words).
FreeWord parse_word(const std::string& text, const std::string& prefix = "m");
std::string to_string(const FreeWord& w, const std::string& prefix = "m");

} // namespace vkn::grp
