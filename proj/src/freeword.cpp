#include "vkn/freeword.hpp"

#include <cctype>
#include <sstream>

namespace vkn::grp {

void FreeWord::push(int gen, int exp) {
    if (gen < 1) throw Error("IndexOutOfRange", "generators are 1-based");
    if (exp != 1 && exp != -1) throw Error("IndexOutOfRange", "letter exponent must be +-1");
    if (!letters_.empty() && letters_.back().gen == gen && letters_.back().exp == -exp)
        letters_.pop_back();
    else
        letters_.push_back({gen, exp});
}

void FreeWord::reduce() {
    std::vector<Letter> out;
    for (const Letter& l : letters_) {
        if (l.gen < 1) throw Error("IndexOutOfRange", "generators are 1-based");
        if (l.exp != 1 && l.exp != -1) throw Error("IndexOutOfRange", "letter exponent must be +-1");
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters_ = std::move(out);
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push(it->gen, -it->exp);
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    FreeWord w = *this;
    for (const Letter& l : o.letters_) w.push(l.gen, l.exp);
    return w;
}

long FreeWord::exponent_sum(int gen) const {
    long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == gen) s += l.exp;
    return s;
}

FreeWord FreeWord::conjugating_prefix(int gen) const {
    if (letters_.size() % 2 != 1)
        throw Error("NotConjugate", "word is not a conjugate of a single generator");
    size_t half = letters_.size() / 2;
    const Letter& center = letters_[half];
    if (center.gen != gen || center.exp != 1)
        throw Error("NotConjugate", "center letter is not the expected generator");
    FreeWord w(std::vector<Letter>(letters_.begin(), letters_.begin() + half));
    FreeWord suffix(std::vector<Letter>(letters_.begin() + half + 1, letters_.end()));
    if (!(suffix == w.inverse()))
        throw Error("NotConjugate", "word is not symmetric around its center");
    return w;
}

FreeWord FreeWord::cyclically_reduced() const {
    std::vector<Letter> v = letters_;
    while (v.size() >= 2 && v.front().gen == v.back().gen && v.front().exp == -v.back().exp) {
        v.erase(v.begin());
        v.pop_back();
    }
    return FreeWord(std::move(v));
}

FreeWord parse_word(const std::string& text, const std::string& prefix) {
    FreeWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        size_t p = 0;
        if (!prefix.empty()) {
            if (tok.rfind(prefix, 0) != 0)
                throw syntax_error("letter must start with '" + prefix + "': " + tok);
            p = prefix.size();
        }
        size_t q = p;
        while (q < tok.size() && std::isdigit(static_cast<unsigned char>(tok[q]))) ++q;
        if (q == p) throw syntax_error("missing generator index in '" + tok + "'");
        int gen = std::stoi(tok.substr(p, q - p));
        int exp = 1;
        if (q != tok.size()) {
            std::string rest = tok.substr(q);
            if (rest == "^-1")
                exp = -1;
            else if (rest == "^1")
                exp = 1;
            else
                throw syntax_error("bad exponent '" + rest + "' in '" + tok + "'");
        }
        w.push(gen, exp);
    }
    return w;
}

std::string to_string(const FreeWord& w, const std::string& prefix) {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += prefix + std::to_string(l.gen);
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

} // namespace vkn::grp
