#pragma once

#include <random>
#include <string>
#include <vector>

#include "vkn/errors.hpp"

namespace vkn::braid {

/// One crossing sigma_index^exp, generator indices 1-based.
struct BraidLetter {
    int index;
    int exp;  // +1 or -1
    bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
public:
    BraidWord() : strands_(1) {}
    explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

    int strands() const noexcept { return strands_; }
    const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
    size_t length() const noexcept { return letters_.size(); }

    void push(int index, int exp);
    bool operator==(const BraidWord&) const = default;

    /// perm[i] = final position of the strand starting at position i (0-based).
    std::vector<int> permutation() const;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

/// Whitespace-separated nonzero integers, sign = exponent: "1 -2 1 -2".
BraidWord parse_braid(const std::string& text, int strands);
std::string to_string(const BraidWord& b);

struct ClosureSummary {
    std::vector<int> permutation;        // 0-based
    std::vector<int> component_of;       // strand -> component id (0-based)
    int components = 0;
    std::vector<std::vector<long>> lk;   // components x components, symmetric, zero diagonal
};

/// Closure bookkeeping: permutation cycles and pairwise linking numbers
/// (half the signed crossing count between strands of distinct components).
ClosureSummary closure_summary(const BraidWord& b);

/// Strict homogeneity: every generator appears, and always with one sign.
bool is_homogeneous(const BraidWord& b);

/// Relaxed check: no generator carries both signs (absent generators allowed).
bool is_sign_consistent(const BraidWord& b);

/// Deletes the flagged strands (by starting position): letters touching a
/// deleted strand are dropped, surviving letters renumbered.
BraidWord delete_strands(const BraidWord& b, const std::vector<bool>& deleted);

struct StallingsResult {
    BraidWord result;  // on m + k strands
    int k = 0;         // strands added
    int epsilon = 1;   // sign of the first incorrectly-signed letter (+1 when k = 0)
};

/// Makes the word sign-consistent by adding strands that push incorrectly
/// signed crossings to the right. The correct sign of sigma_i is the sign of
/// its first occurrence; the added-strand generators get correct sign
/// -epsilon, and the closing word sigma_{m+1}^-e ... sigma_{m+k-1}^-e ties
/// the added strands into one unknotted component. Deleting the added
/// strands recovers the input exactly.
StallingsResult stallings_homogenize(const BraidWord& b);

struct FiberEuler {
    long chi = 0;
    long genus = 0;
};

/// Euler characteristic chi = strands - letters of the banded-disc surface,
/// and its genus. Throws NotHomogeneous when a generator carries both
/// signs; split words (absent generators) are handled factor by factor.
FiberEuler fiber_euler(const BraidWord& b);

/// Parted mixed braid: fixed strands first, the added strands of a fiber
/// stabilization next, moving strands last. The braid permutation must
/// preserve the three classes.
struct MixedBraid {
    int m = 0;  // fixed
    int k = 0;  // added
    int n = 0;  // moving
    BraidWord word;
    bool parted = true;
};

/// Validates the class-preservation invariant; throws NotParted.
void validate_mixed(const MixedBraid& mb);

/// Sum of lk(K, c) over the fixed and added closure components c, where K
/// is the closure of the moving part (which must be a knot).
long total_intersection(const MixedBraid& mb);

/// Homogenizes the fixed part via stallings_homogenize, re-embeds the word
/// with the added strands between fixed and moving (moving strands crossing
/// over them), and appends interface full twists until the total algebraic
/// intersection of K with the fibered sublink vanishes. Idempotent.
MixedBraid fiber_stabilize(const MixedBraid& mb);

/// Random word; letters uniform.
BraidWord random_braid(int max_strands, int max_len, std::mt19937_64& rng);

/// Random parted mixed braid (k = 0) whose moving part closes to a knot.
MixedBraid random_mixed_braid(int max_fixed, int max_moving, int max_len, std::mt19937_64& rng);

/// Random pure braid (identity permutation).
BraidWord random_pure_braid(int strands, int max_len, std::mt19937_64& rng);

} // namespace vkn::braid
