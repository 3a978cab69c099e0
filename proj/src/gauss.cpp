#include "vkn/gauss.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vkn::gauss {

GaussDiagram::GaussDiagram(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    std::map<int, std::vector<const Token*>> by_chord;
    for (const Token& t : tokens_) {
        if (t.chord <= 0) throw Error("ChordMismatch", "chord ids must be positive");
        if (t.sign != 1 && t.sign != -1) throw Error("ChordMismatch", "token sign must be +-1");
        by_chord[t.chord].push_back(&t);
    }
    for (const auto& [id, ts] : by_chord) {
        if (ts.size() != 2)
            throw Error("ChordMismatch",
                        "chord " + std::to_string(id) + " must have exactly two endpoints");
        if (ts[0]->role == ts[1]->role)
            throw Error("ChordMismatch",
                        "chord " + std::to_string(id) + " needs one Over and one Under endpoint");
        if (ts[0]->sign != ts[1]->sign)
            throw Error("ChordMismatch",
                        "chord " + std::to_string(id) + " has inconsistent signs");
    }
}

std::vector<int> GaussDiagram::chord_ids() const {
    std::set<int> ids;
    for (const Token& t : tokens_) ids.insert(t.chord);
    return {ids.begin(), ids.end()};
}

bool GaussDiagram::has_chord(int chord) const {
    return std::any_of(tokens_.begin(), tokens_.end(),
                       [&](const Token& t) { return t.chord == chord; });
}

int GaussDiagram::sign_of(int chord) const {
    for (const Token& t : tokens_)
        if (t.chord == chord) return t.sign;
    throw Error("UnknownChord", "no chord " + std::to_string(chord));
}

int GaussDiagram::position_of(int chord, Role role) const {
    for (size_t i = 0; i < tokens_.size(); ++i)
        if (tokens_[i].chord == chord && tokens_[i].role == role) return static_cast<int>(i);
    throw Error("UnknownChord", "no chord " + std::to_string(chord));
}

GaussDiagram parse_gauss(const std::string& code) {
    std::vector<Token> toks;
    std::string trimmed;
    for (char c : code)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) return GaussDiagram{};
    std::stringstream ss(trimmed);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.size() < 3) throw syntax_error("bad token '" + piece + "'");
        Role role;
        if (piece[0] == 'O')
            role = Role::Over;
        else if (piece[0] == 'U')
            role = Role::Under;
        else
            throw syntax_error("token must start with O or U: '" + piece + "'");
        char sc = piece.back();
        int sign;
        if (sc == '+')
            sign = 1;
        else if (sc == '-')
            sign = -1;
        else
            throw syntax_error("token must end with + or -: '" + piece + "'");
        std::string num = piece.substr(1, piece.size() - 2);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw syntax_error("bad chord id in '" + piece + "'");
        toks.push_back({std::stoi(num), role, sign});
    }
    return GaussDiagram(std::move(toks));
}

std::string serialize(const GaussDiagram& d) {
    std::string out;
    for (const Token& t : d.tokens()) {
        if (!out.empty()) out += ',';
        out += (t.role == Role::Over) ? 'O' : 'U';
        out += std::to_string(t.chord);
        out += (t.sign > 0) ? '+' : '-';
    }
    return out;
}

Smoothing smooth(const GaussDiagram& d, int x) {
    const int n2 = static_cast<int>(d.tokens().size());
    const int po = d.position_of(x, Role::Over);
    const int pu = d.position_of(x, Role::Under);
    Smoothing s;
    for (int p = (po + 1) % n2; p != pu; p = (p + 1) % n2) s.arc_a.insert(p);
    for (int p = (pu + 1) % n2; p != po; p = (p + 1) % n2) s.arc_b.insert(p);
    for (int id : d.chord_ids()) {
        if (id == x) continue;
        int o = d.position_of(id, Role::Over);
        int u = d.position_of(id, Role::Under);
        if (s.arc_a.count(o) != s.arc_a.count(u)) s.linked.insert(id);
    }
    return s;
}

long index(const GaussDiagram& d, int x) {
    Smoothing s = smooth(d, x);
    long acc = 0;
    for (int y : s.linked) {
        int u = d.position_of(y, Role::Under);
        int dir = s.arc_a.count(u) ? 1 : -1;
        acc += static_cast<long>(d.sign_of(y)) * dir;
    }
    return acc;
}

IndexReport index_report(const GaussDiagram& d) {
    IndexReport r;
    for (int id : d.chord_ids()) {
        r.chord_index.emplace_back(id, index(d, id));
        r.chord_sign.push_back(d.sign_of(id));
        r.writhe += d.sign_of(id);
    }
    return r;
}

bool is_almost_classical(const GaussDiagram& d) {
    for (int id : d.chord_ids())
        if (index(d, id) != 0) return false;
    return true;
}

std::optional<Numbering> alexander_numbering(const GaussDiagram& d) {
    const int n2 = static_cast<int>(d.tokens().size());
    if (n2 == 0) return Numbering{{0}};  // unknot: one arc, label 0
    // Label jump when passing a token: +sign at an Over endpoint, -sign at
    // an Under endpoint. Integrate, then verify the per-crossing equations
    // pairing incoming-over with outgoing-under arcs.
    std::vector<long> jump(n2);
    for (int p = 0; p < n2; ++p) {
        const Token& t = d.tokens()[p];
        jump[p] = (t.role == Role::Over) ? t.sign : -t.sign;
    }
    std::vector<long> label(n2);  // label[r] = arc after token r
    long acc = 0;
    for (int p = 0; p < n2; ++p) {
        acc += jump[p];
        label[p] = acc;
    }
    auto arc_before = [&](int pos) { return label[(pos + n2 - 1) % n2]; };
    auto arc_after = [&](int pos) { return label[pos]; };
    for (int id : d.chord_ids()) {
        int o = d.position_of(id, Role::Over);
        int u = d.position_of(id, Role::Under);
        if (arc_before(o) != arc_after(u)) return std::nullopt;
        if (arc_after(o) != arc_before(u)) return std::nullopt;
    }
    long mn = *std::min_element(label.begin(), label.end());
    for (long& v : label) v -= mn;
    return Numbering{std::move(label)};
}

poly::LaurentPoly1 writhe_index_polynomial(const GaussDiagram& d) {
    poly::LaurentPoly1 p;
    for (int id : d.chord_ids()) {
        long ix = index(d, id);
        if (ix == 0) continue;
        p += poly::LaurentPoly1::monomial(d.sign_of(id), ix);
    }
    return p;
}

GaussDiagram random_diagram(int max_chords, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nd(0, max_chords);
    int n = nd(rng);
    std::vector<int> pos(2 * n);
    for (int i = 0; i < 2 * n; ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<Token> toks(2 * n, Token{0, Role::Over, 1});
    std::uniform_int_distribution<int> bit(0, 1);
    for (int c = 0; c < n; ++c) {
        int sign = bit(rng) ? 1 : -1;
        bool over_first = bit(rng);
        toks[pos[2 * c]] = {c + 1, over_first ? Role::Over : Role::Under, sign};
        toks[pos[2 * c + 1]] = {c + 1, over_first ? Role::Under : Role::Over, sign};
    }
    return GaussDiagram(std::move(toks));
}

} // namespace vkn::gauss
