#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "vkn/gauss.hpp"

namespace vkn::gauss {

namespace {

int max_chord_id(const GaussDiagram& d) {
    int m = 0;
    for (const Token& t : d.tokens()) m = std::max(m, t.chord);
    return m;
}

GaussDiagram with_tokens(std::vector<Token> toks) { return GaussDiagram(std::move(toks)); }

// --- R3 realizability table -------------------------------------------------
//
// A triangle of three strand segments is modeled on the lines y=0, x=0 and
// x+y=1. Enumerating the strand height order (which strand passes over
// which) and the three strand directions, then reading off the local Gauss
// data, yields every configuration on which the slide is legal. The table
// is closed under relabeling of the three sites, so candidates can be
// looked up with sites taken in diagram order.
//
// Encoding, sites s0<s1<s2, chord pairs in order {s0,s1},{s0,s2},{s1,s2}:
//   bit 0,1,2 : Over endpoint of pair k sits at the larger site index
//   bit 3,4,5 : crossing sign of pair k is +1
//   bit 6     : site0's first token partners site 2 (else site 1)
//   bit 7     : site1's first token partners site 2 (else site 0)
//   bit 8     : site2's first token partners site 1 (else site 0)

int cross2(const std::array<int, 2>& a, const std::array<int, 2>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

struct LocalConfig {
    // over_site[k], sign[k] for pair k in {0:{0,1}, 1:{0,2}, 2:{1,2}};
    // first[s] = partner site of site s's first token.
    std::array<int, 3> over_site;
    std::array<int, 3> sign;
    std::array<int, 3> first;

    int encode() const {
        auto pair_hi = [](int k, int site) {
            static constexpr int hi[3] = {1, 2, 2};
            return site == hi[k] ? 1 : 0;
        };
        int bits = 0;
        for (int k = 0; k < 3; ++k) {
            bits |= pair_hi(k, over_site[k]) << k;
            bits |= (sign[k] > 0 ? 1 : 0) << (3 + k);
        }
        bits |= (first[0] == 2 ? 1 : 0) << 6;
        bits |= (first[1] == 2 ? 1 : 0) << 7;
        bits |= (first[2] == 1 ? 1 : 0) << 8;
        return bits;
    }
};

const std::set<int>& r3_table() {
    static const std::set<int> table = [] {
        std::set<int> t;
        const std::array<std::array<int, 2>, 3> u = {{{1, 0}, {0, 1}, {1, -1}}};
        // first_partner[strand][direction>0]: crossing met first along the strand
        auto first_partner = [](int strand, int dir) {
            switch (strand) {
                case 0: return dir > 0 ? 1 : 2;  // meets {0,1} then {0,2}
                case 1: return dir > 0 ? 0 : 2;  // meets {0,1} then {1,2}
                default: return dir > 0 ? 1 : 0; // meets {1,2} then {0,2}
            }
        };
        std::array<int, 3> height = {0, 1, 2};
        std::sort(height.begin(), height.end());
        do {
            for (int dbits = 0; dbits < 8; ++dbits) {
                std::array<int, 3> d;
                for (int s = 0; s < 3; ++s) d[s] = (dbits >> s) & 1 ? 1 : -1;
                const std::array<std::array<int, 2>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
                std::array<int, 3> over{}, sgn{}, first{};
                for (int k = 0; k < 3; ++k) {
                    int i = pairs[k][0], j = pairs[k][1];
                    int o = height[i] > height[j] ? i : j;
                    int un = o == i ? j : i;
                    sgn[k] = d[o] * d[un] * cross2(u[o], u[un]) > 0 ? 1 : -1;
                    over[k] = o;
                }
                for (int s = 0; s < 3; ++s) first[s] = first_partner(s, d[s]);
                // All relabelings of strands to sites.
                std::array<int, 3> relab = {0, 1, 2};
                std::sort(relab.begin(), relab.end());
                do {
                    LocalConfig cfg{};
                    auto pair_index = [](int a, int b) {
                        if (a > b) std::swap(a, b);
                        if (a == 0) return b == 1 ? 0 : 1;
                        return 2;
                    };
                    for (int k = 0; k < 3; ++k) {
                        int i = pairs[k][0], j = pairs[k][1];
                        int kk = pair_index(relab[i], relab[j]);
                        cfg.over_site[kk] = relab[over[k]];
                        cfg.sign[kk] = sgn[k];
                    }
                    for (int s = 0; s < 3; ++s) cfg.first[relab[s]] = relab[first[s]];
                    t.insert(cfg.encode());
                } while (std::next_permutation(relab.begin(), relab.end()));
            }
        } while (std::next_permutation(height.begin(), height.end()));
        return t;
    }();
    return table;
}

// Extracts the local configuration of three adjacent-pair sites, or returns
// false when the structure is not a triangle of three chords.
bool extract_config(const GaussDiagram& d, const std::array<int, 3>& site_pos,
                    std::array<int, 3>* chords_out, LocalConfig* cfg_out) {
    const int n2 = static_cast<int>(d.tokens().size());
    if (n2 < 6) return false;
    std::set<int> used;
    std::array<std::array<Token, 2>, 3> site_tok;
    for (int s = 0; s < 3; ++s) {
        int p = site_pos[s];
        if (p < 0 || p >= n2) return false;
        int q = (p + 1) % n2;
        if (used.count(p) || used.count(q)) return false;
        used.insert(p);
        used.insert(q);
        site_tok[s][0] = d.tokens()[p];
        site_tok[s][1] = d.tokens()[q];
    }
    // Map each chord to the sites it touches.
    std::map<int, std::vector<std::pair<int, int>>> chord_sites;  // chord -> (site, slot)
    for (int s = 0; s < 3; ++s)
        for (int slot = 0; slot < 2; ++slot)
            chord_sites[site_tok[s][slot].chord].push_back({s, slot});
    if (chord_sites.size() != 3) return false;
    LocalConfig cfg{};
    std::array<int, 3> chords{};
    std::array<bool, 3> pair_seen{};
    auto pair_index = [](int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == 0) return b == 1 ? 0 : 1;
        return 2;
    };
    for (const auto& [chord, occ] : chord_sites) {
        if (occ.size() != 2) return false;
        int sa = occ[0].first, sb = occ[1].first;
        if (sa == sb) return false;
        int k = pair_index(sa, sb);
        if (pair_seen[k]) return false;
        pair_seen[k] = true;
        chords[k] = chord;
        const Token& ta = site_tok[occ[0].first][occ[0].second];
        cfg.over_site[k] = ta.role == Role::Over ? sa : sb;
        cfg.sign[k] = ta.sign;
    }
    for (int s = 0; s < 3; ++s) {
        int c = site_tok[s][0].chord;
        auto& occ = chord_sites[c];
        cfg.first[s] = occ[0].first == s ? occ[1].first : occ[0].first;
    }
    *chords_out = chords;
    *cfg_out = cfg;
    return true;
}

} // namespace

std::vector<R3Slide> find_r3_slides(const GaussDiagram& d) {
    std::vector<R3Slide> out;
    const int n2 = static_cast<int>(d.tokens().size());
    if (n2 < 6) return out;
    // Candidate sites: adjacent token pairs of two distinct chords. A
    // triangle needs three sites whose chord pairs are {a,b},{a,c},{b,c};
    // enumerate via a chord-pair index instead of all position triples.
    struct Site {
        int pos;
        int lo, hi;
    };
    std::vector<Site> sites;
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int p = 0; p < n2; ++p) {
        int ca = d.tokens()[p].chord, cb = d.tokens()[(p + 1) % n2].chord;
        if (ca == cb) continue;
        Site s{p, std::min(ca, cb), std::max(ca, cb)};
        by_pair[{s.lo, s.hi}].push_back(static_cast<int>(sites.size()));
        sites.push_back(s);
    }
    std::set<std::array<int, 3>> seen;
    for (size_t i = 0; i < sites.size(); ++i)
        for (size_t j = i + 1; j < sites.size(); ++j) {
            const Site &s1 = sites[i], &s2 = sites[j];
            int x, y;  // chords unique to s1 resp. s2
            if (s1.lo == s2.lo && s1.hi != s2.hi) {
                x = s1.hi;
                y = s2.hi;
            } else if (s1.hi == s2.hi && s1.lo != s2.lo) {
                x = s1.lo;
                y = s2.lo;
            } else if (s1.lo == s2.hi || s1.hi == s2.lo) {
                x = (s1.lo == s2.hi) ? s1.hi : s1.lo;
                y = (s1.lo == s2.hi) ? s2.lo : s2.hi;
            } else {
                continue;  // zero or two shared chords
            }
            auto it = by_pair.find({std::min(x, y), std::max(x, y)});
            if (it == by_pair.end()) continue;
            for (int kidx : it->second) {
                const Site& s3 = sites[kidx];
                if (s3.pos == s1.pos || s3.pos == s2.pos) continue;
                std::array<int, 3> pos = {s1.pos, s2.pos, s3.pos};
                std::sort(pos.begin(), pos.end());
                if (!seen.insert(pos).second) continue;
                std::array<int, 3> chords;
                LocalConfig cfg;
                if (!extract_config(d, pos, &chords, &cfg)) continue;
                if (!r3_table().count(cfg.encode())) continue;
                R3Slide slide;
                slide.chords = chords;
                for (int s = 0; s < 3; ++s) {
                    slide.positions[2 * s] = pos[s];
                    slide.positions[2 * s + 1] = (pos[s] + 1) % n2;
                }
                out.push_back(slide);
            }
        }
    return out;
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveSpec& m) {
    const int n2 = static_cast<int>(d.tokens().size());
    if (const auto* r1 = std::get_if<R1Insert>(&m)) {
        if (r1->pos < 0 || r1->pos > n2)
            throw Error("MoveNotApplicable", "R1 insertion gap out of range");
        if (r1->sign != 1 && r1->sign != -1)
            throw Error("MoveNotApplicable", "R1 sign must be +-1");
        std::vector<Token> toks = d.tokens();
        int id = max_chord_id(d) + 1;
        Token a{id, r1->over_first ? Role::Over : Role::Under, r1->sign};
        Token b{id, r1->over_first ? Role::Under : Role::Over, r1->sign};
        toks.insert(toks.begin() + r1->pos, {a, b});
        return with_tokens(std::move(toks));
    }
    if (const auto* r1 = std::get_if<R1Delete>(&m)) {
        if (!d.has_chord(r1->chord)) throw Error("MoveNotApplicable", "no such chord");
        int o = d.position_of(r1->chord, Role::Over);
        int u = d.position_of(r1->chord, Role::Under);
        if ((o + 1) % n2 != u && (u + 1) % n2 != o)
            throw Error("MoveNotApplicable", "chord is not isolated");
        std::vector<Token> toks;
        for (int p = 0; p < n2; ++p)
            if (p != o && p != u) toks.push_back(d.tokens()[p]);
        return with_tokens(std::move(toks));
    }
    if (const auto* r2 = std::get_if<R2Insert>(&m)) {
        if (r2->pos_first < 0 || r2->pos_second < r2->pos_first || r2->pos_second > n2)
            throw Error("MoveNotApplicable", "R2 insertion gaps out of order");
        if (r2->sign_first != 1 && r2->sign_first != -1)
            throw Error("MoveNotApplicable", "R2 sign must be +-1");
        int a = max_chord_id(d) + 1, b = a + 1;
        int s = r2->sign_first;
        std::vector<Token> toks = d.tokens();
        std::vector<Token> under = r2->interleaved
                                       ? std::vector<Token>{{a, Role::Under, s}, {b, Role::Under, -s}}
                                       : std::vector<Token>{{b, Role::Under, -s}, {a, Role::Under, s}};
        toks.insert(toks.begin() + r2->pos_second, under.begin(), under.end());
        toks.insert(toks.begin() + r2->pos_first,
                    {Token{a, Role::Over, s}, Token{b, Role::Over, -s}});
        return with_tokens(std::move(toks));
    }
    if (const auto* r2 = std::get_if<R2Delete>(&m)) {
        if (!d.has_chord(r2->chord_a) || !d.has_chord(r2->chord_b) || r2->chord_a == r2->chord_b)
            throw Error("MoveNotApplicable", "R2 needs two distinct present chords");
        if (d.sign_of(r2->chord_a) != -d.sign_of(r2->chord_b))
            throw Error("MoveNotApplicable", "R2 pair must have opposite signs");
        int ao = d.position_of(r2->chord_a, Role::Over);
        int au = d.position_of(r2->chord_a, Role::Under);
        int bo = d.position_of(r2->chord_b, Role::Over);
        int bu = d.position_of(r2->chord_b, Role::Under);
        auto adjacent = [&](int p, int q) { return (p + 1) % n2 == q || (q + 1) % n2 == p; };
        if (!adjacent(ao, bo) || !adjacent(au, bu))
            throw Error("MoveNotApplicable", "R2 endpoints are not pairwise adjacent");
        std::set<int> kill = {ao, au, bo, bu};
        if (kill.size() != 4) throw Error("MoveNotApplicable", "degenerate R2 site");
        std::vector<Token> toks;
        for (int p = 0; p < n2; ++p)
            if (!kill.count(p)) toks.push_back(d.tokens()[p]);
        return with_tokens(std::move(toks));
    }
    const auto& r3 = std::get<R3Slide>(m);
    std::array<int, 3> sites = {r3.positions[0], r3.positions[2], r3.positions[4]};
    for (int s = 0; s < 3; ++s) {
        if (n2 == 0 || r3.positions[2 * s + 1] != (r3.positions[2 * s] + 1) % n2)
            throw Error("MoveNotApplicable", "R3 sites must be adjacent token pairs");
    }
    std::array<int, 3> chords;
    LocalConfig cfg;
    if (!extract_config(d, sites, &chords, &cfg))
        throw Error("MoveNotApplicable", "R3 sites do not form a chord triangle");
    std::array<int, 3> want = r3.chords;
    std::array<int, 3> have = chords;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) throw Error("MoveNotApplicable", "R3 chord ids do not match the sites");
    if (!r3_table().count(cfg.encode()))
        throw Error("MoveNotApplicable", "triangle configuration is not realizable");
    std::vector<Token> toks = d.tokens();
    for (int s = 0; s < 3; ++s)
        std::swap(toks[r3.positions[2 * s]], toks[r3.positions[2 * s + 1]]);
    return with_tokens(std::move(toks));
}

MoveSpec random_move(const GaussDiagram& d, std::mt19937_64& rng, int soft_cap) {
    const int n2 = static_cast<int>(d.tokens().size());
    std::uniform_int_distribution<int> bit(0, 1);

    std::vector<R1Delete> r1dels;
    for (int id : d.chord_ids()) {
        int o = d.position_of(id, Role::Over);
        int u = d.position_of(id, Role::Under);
        if ((o + 1) % n2 == u || (u + 1) % n2 == o) r1dels.push_back({id});
    }
    std::vector<R2Delete> r2dels;
    {
        auto ids = d.chord_ids();
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j) {
                int a = ids[i], b = ids[j];
                if (d.sign_of(a) != -d.sign_of(b)) continue;
                int ao = d.position_of(a, Role::Over), au = d.position_of(a, Role::Under);
                int bo = d.position_of(b, Role::Over), bu = d.position_of(b, Role::Under);
                auto adj = [&](int p, int q) { return (p + 1) % n2 == q || (q + 1) % n2 == p; };
                if (adj(ao, bo) && adj(au, bu) &&
                    std::set<int>{ao, au, bo, bu}.size() == 4)
                    r2dels.push_back({a, b});
            }
    }
    std::vector<R3Slide> r3s = find_r3_slides(d);

    // Insertions are always available; deletions and slides only when present.
    enum Kind { K_R1I, K_R1D, K_R2I, K_R2D, K_R3 };
    std::vector<Kind> kinds = {K_R1I, K_R2I};
    if (!r1dels.empty()) kinds.push_back(K_R1D);
    if (!r2dels.empty()) kinds.push_back(K_R2D);
    if (!r3s.empty()) kinds.push_back(K_R3);
    bool crowded = d.chord_count() > soft_cap;
    if (crowded && (!r1dels.empty() || !r2dels.empty())) {
        kinds.clear();
        if (!r1dels.empty()) kinds.push_back(K_R1D);
        if (!r2dels.empty()) kinds.push_back(K_R2D);
        if (!r3s.empty()) kinds.push_back(K_R3);
    }
    std::uniform_int_distribution<size_t> kd(0, kinds.size() - 1);
    switch (kinds[kd(rng)]) {
        case K_R1I: {
            std::uniform_int_distribution<int> gap(0, n2);
            return R1Insert{gap(rng), bit(rng) ? 1 : -1, bit(rng) == 1};
        }
        case K_R1D: {
            std::uniform_int_distribution<size_t> pick(0, r1dels.size() - 1);
            return r1dels[pick(rng)];
        }
        case K_R2I: {
            std::uniform_int_distribution<int> gap(0, n2);
            int p = gap(rng), q = gap(rng);
            if (p > q) std::swap(p, q);
            return R2Insert{p, q, bit(rng) ? 1 : -1, bit(rng) == 1};
        }
        case K_R2D: {
            std::uniform_int_distribution<size_t> pick(0, r2dels.size() - 1);
            return r2dels[pick(rng)];
        }
        default: {
            std::uniform_int_distribution<size_t> pick(0, r3s.size() - 1);
            return r3s[pick(rng)];
        }
    }
}

} // namespace vkn::gauss
