#include "vkn/braid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace vkn::braid {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw Error("IndexOutOfRange", "a braid needs at least one strand");
    for (const BraidLetter& l : letters_) {
        if (l.index < 1 || l.index >= strands_)
            throw Error("IndexOutOfRange",
                        "generator index " + std::to_string(l.index) + " out of range");
        if (l.exp != 1 && l.exp != -1)
            throw Error("IndexOutOfRange", "letter exponent must be +-1");
    }
}

void BraidWord::push(int index, int exp) {
    if (index < 1 || index >= strands_)
        throw Error("IndexOutOfRange", "generator index " + std::to_string(index) + " out of range");
    if (exp != 1 && exp != -1) throw Error("IndexOutOfRange", "letter exponent must be +-1");
    letters_.push_back({index, exp});
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> at(strands_);
    std::iota(at.begin(), at.end(), 0);  // at[pos] = strand
    for (const BraidLetter& l : letters_) std::swap(at[l.index - 1], at[l.index]);
    std::vector<int> perm(strands_);
    for (int pos = 0; pos < strands_; ++pos) perm[at[pos]] = pos;
    return perm;
}

BraidWord parse_braid(const std::string& text, int strands) {
    BraidWord b(strands);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int v;
        try {
            size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw syntax_error("bad braid letter '" + tok + "'");
        }
        if (v == 0) throw syntax_error("braid letters are nonzero integers");
        int idx = v > 0 ? v : -v;
        if (idx >= strands)
            throw Error("IndexOutOfRange",
                        "generator " + std::to_string(idx) + " needs more than " +
                            std::to_string(strands) + " strands");
        b.push(idx, v > 0 ? 1 : -1);
    }
    return b;
}

std::string to_string(const BraidWord& b) {
    std::string out;
    for (const BraidLetter& l : b.letters()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(l.exp * l.index);
    }
    return out;
}

ClosureSummary closure_summary(const BraidWord& b) {
    ClosureSummary s;
    s.permutation = b.permutation();
    const int n = b.strands();
    s.component_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (s.component_of[i] >= 0) continue;
        int c = s.components++;
        for (int j = i; s.component_of[j] < 0; j = s.permutation[j]) s.component_of[j] = c;
    }
    std::vector<std::vector<long>> twice(s.components, std::vector<long>(s.components, 0));
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 0);
    for (const BraidLetter& l : b.letters()) {
        int a = at[l.index - 1], c = at[l.index];
        int ca = s.component_of[a], cc = s.component_of[c];
        if (ca != cc) {
            twice[ca][cc] += l.exp;
            twice[cc][ca] += l.exp;
        }
        std::swap(at[l.index - 1], at[l.index]);
    }
    s.lk.assign(s.components, std::vector<long>(s.components, 0));
    for (int i = 0; i < s.components; ++i)
        for (int j = 0; j < s.components; ++j) {
            if (twice[i][j] % 2 != 0)
                throw Error("Internal", "odd crossing sum between closure components");
            s.lk[i][j] = twice[i][j] / 2;
        }
    return s;
}

bool is_homogeneous(const BraidWord& b) {
    std::vector<int> seen(b.strands(), 0);  // 1-based generator -> sign
    for (const BraidLetter& l : b.letters()) {
        int& s = seen[l.index];
        if (s == 0)
            s = l.exp;
        else if (s != l.exp)
            return false;
    }
    for (int g = 1; g < b.strands(); ++g)
        if (seen[g] == 0) return false;
    return true;
}

bool is_sign_consistent(const BraidWord& b) {
    std::vector<int> seen(b.strands(), 0);
    for (const BraidLetter& l : b.letters()) {
        int& s = seen[l.index];
        if (s == 0)
            s = l.exp;
        else if (s != l.exp)
            return false;
    }
    return true;
}

BraidWord delete_strands(const BraidWord& b, const std::vector<bool>& deleted) {
    if (static_cast<int>(deleted.size()) != b.strands())
        throw Error("DimensionMismatch", "deletion mask length must match strand count");
    const int n = b.strands();
    int removed = static_cast<int>(std::count(deleted.begin(), deleted.end(), true));
    if (n - removed < 1) throw Error("DimensionMismatch", "cannot delete every strand");
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 0);
    std::vector<BraidLetter> out;
    for (const BraidLetter& l : b.letters()) {
        int a = at[l.index - 1], c = at[l.index];
        if (!deleted[a] && !deleted[c]) {
            int below = 0;
            for (int p = 0; p < l.index - 1; ++p)
                if (deleted[at[p]]) ++below;
            out.push_back({l.index - below, l.exp});
        }
        std::swap(at[l.index - 1], at[l.index]);
    }
    return BraidWord(n - removed, std::move(out));
}

StallingsResult stallings_homogenize(const BraidWord& b) {
    const int m = b.strands();
    // Correct signs of the original generators: first occurrence.
    std::map<int, int> first_sign;
    for (const BraidLetter& l : b.letters())
        first_sign.emplace(l.index, l.exp);
    int epsilon = 0;
    for (const BraidLetter& l : b.letters()) {
        if (l.exp != first_sign[l.index]) {
            epsilon = l.exp;
            break;
        }
    }
    if (epsilon == 0) return {b, 0, 1};  // already sign-consistent; nothing to add

    auto correct = [&](int g) -> int {
        if (g <= m - 1) {
            auto it = first_sign.find(g);
            return it != first_sign.end() ? it->second : -epsilon;
        }
        return g == m ? epsilon : -epsilon;
    };

    // Push distance of each incorrect letter; k is the maximum.
    int k = 0;
    std::vector<int> push(b.letters().size(), 0);
    for (size_t li = 0; li < b.letters().size(); ++li) {
        const BraidLetter& l = b.letters()[li];
        if (l.exp == correct(l.index)) continue;
        int t = l.index + 1;
        while (correct(t) != l.exp) ++t;
        push[li] = t - l.index;
        k = std::max(k, push[li]);
    }

    BraidWord out(m + k);
    for (size_t li = 0; li < b.letters().size(); ++li) {
        const BraidLetter& l = b.letters()[li];
        int p = push[li];
        if (p == 0) {
            out.push(l.index, l.exp);
            continue;
        }
        int i = l.index;
        for (int j = 1; j <= p; ++j)  // added strand j dips to the left of the letter
            for (int g = m + j - 1; g >= i + j - 1; --g) out.push(g, correct(g));
        out.push(i + p, l.exp);
        for (int j = p; j >= 1; --j)  // parked strands return, innermost last
            for (int g = i + j - 1; g <= m + j - 1; ++g) out.push(g, correct(g));
    }
    for (int g = m + 1; g <= m + k - 1; ++g) out.push(g, -epsilon);
    return {std::move(out), k, epsilon};
}

FiberEuler fiber_euler(const BraidWord& b) {
    if (!is_sign_consistent(b))
        throw Error("NotHomogeneous", "a generator appears with both signs");
    const int n = b.strands();
    FiberEuler fe;
    fe.chi = n - static_cast<long>(b.length());
    // Factors: strands joined by the generators that occur.
    std::vector<int> factor(n);
    std::iota(factor.begin(), factor.end(), 0);
    std::function<int(int)> find = [&](int x) { return factor[x] == x ? x : factor[x] = find(factor[x]); };
    for (const BraidLetter& l : b.letters()) {
        int a = find(l.index - 1), c = find(l.index);
        if (a != c) factor[a] = c;
    }
    ClosureSummary cs = closure_summary(b);
    std::map<int, long> strands_in, letters_in;
    for (int i = 0; i < n; ++i) ++strands_in[find(i)];
    for (const BraidLetter& l : b.letters()) ++letters_in[find(l.index - 1)];
    std::map<int, std::set<int>> comp_set;
    for (int i = 0; i < n; ++i) comp_set[find(i)].insert(cs.component_of[i]);
    fe.genus = 0;
    for (const auto& [root, sc] : strands_in) {
        long chi_f = sc - letters_in[root];
        long c_f = static_cast<long>(comp_set[root].size());
        long twice_genus = 2 - c_f - chi_f;
        if (twice_genus < 0 || twice_genus % 2 != 0)
            throw Error("NonIntegralGenus", "surface bookkeeping is inconsistent");
        fe.genus += twice_genus / 2;
    }
    return fe;
}

BraidWord random_braid(int max_strands, int max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> sd(2, max_strands);
    int n = sd(rng);
    std::uniform_int_distribution<int> ld(0, max_len);
    int len = ld(rng);
    BraidWord b(n);
    std::uniform_int_distribution<int> gd(1, n - 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < len; ++i) b.push(gd(rng), bit(rng) ? 1 : -1);
    return b;
}

BraidWord random_pure_braid(int strands, int max_len, std::mt19937_64& rng) {
    BraidWord out(strands);
    std::uniform_int_distribution<int> ld(0, max_len);
    std::uniform_int_distribution<int> gd(1, strands - 1);
    std::uniform_int_distribution<int> sbit(0, 1);
    int len = ld(rng);
    for (int i = 0; i < len; ++i) out.push(gd(rng), sbit(rng) ? 1 : -1);
    // Append letters realizing the inverse permutation (selection sort).
    std::vector<int> at(strands);
    std::iota(at.begin(), at.end(), 0);
    for (const BraidLetter& l : out.letters()) std::swap(at[l.index - 1], at[l.index]);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int target = 0; target < strands; ++target) {
        int pos = target;
        while (at[pos] != target) ++pos;
        for (int p = pos; p > target; --p) {
            out.push(p, bit(rng) ? 1 : -1);
            std::swap(at[p - 1], at[p]);
        }
    }
    return out;
}

} // namespace vkn::braid
