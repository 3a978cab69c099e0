#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "vkn/errors.hpp"
#include "vkn/laurent.hpp"

namespace vkn::gauss {

enum class Role { Over, Under };

struct Token {
    int chord;  // chord id, positive
    Role role;
    int sign;  // +1 or -1

    bool operator==(const Token&) const = default;
};

/// Signed-arrow chord diagram of a virtual knot: a cyclic sequence of 2n
/// endpoint tokens. Each chord id appears exactly once as Over and once as
/// Under, both with the same sign.
class GaussDiagram {
public:
    GaussDiagram() = default;
    explicit GaussDiagram(std::vector<Token> tokens);  // validates

    const std::vector<Token>& tokens() const noexcept { return tokens_; }
    int chord_count() const noexcept { return static_cast<int>(tokens_.size()) / 2; }
    std::vector<int> chord_ids() const;
    int sign_of(int chord) const;
    int position_of(int chord, Role role) const;  // UnknownChord if absent
    bool has_chord(int chord) const;

    bool operator==(const GaussDiagram&) const = default;

private:
    std::vector<Token> tokens_;
};

/// Grammar: comma-separated tokens [OU]<id>[+-], e.g. "O1+,O2+,U1+,U2+".
GaussDiagram parse_gauss(const std::string& code);
std::string serialize(const GaussDiagram& d);

struct Smoothing {
    std::set<int> arc_a;   // token positions strictly between Over and Under endpoints of x
    std::set<int> arc_b;   // complement (excluding x's own endpoints)
    std::set<int> linked;  // chords with one endpoint in each arc
};

/// Oriented smoothing at chord x: splits the other endpoints into the two
/// arcs and reports the chords linked with x.
Smoothing smooth(const GaussDiagram& d, int x);

/// Index(x): signed count over chords linked with x. A linked chord y
/// contributes sign(y) when its Under endpoint lies in arc A (the arc from
/// x's Over endpoint to x's Under endpoint) and -sign(y) otherwise.
long index(const GaussDiagram& d, int x);

struct IndexReport {
    std::vector<std::pair<int, long>> chord_index;  // (chord id, index), by id
    std::vector<int> chord_sign;                    // matching order
    long writhe = 0;
};

IndexReport index_report(const GaussDiagram& d);

bool is_almost_classical(const GaussDiagram& d);

/// Integer labels on the 2n arcs (arc r follows token r), minimum label 0.
struct Numbering {
    std::vector<long> labels;
};

/// Alexander numbering of the arcs, or nullopt when the crossing
/// consistency equations have no solution. Feasibility agrees with
/// is_almost_classical on every diagram.
std::optional<Numbering> alexander_numbering(const GaussDiagram& d);

/// Sum over chords x with Index(x) != 0 of sign(x) * q^Index(x).
poly::LaurentPoly1 writhe_index_polynomial(const GaussDiagram& d);

// --- extended Reidemeister moves (the virtual moves are identities on
// Gauss diagrams; the classical moves act as below) ---

struct R1Insert {
    int pos = 0;          // gap index 0..2n
    int sign = 1;
    bool over_first = true;
};
struct R1Delete {
    int chord = 0;  // must be isolated (adjacent endpoints)
};
struct R2Insert {
    int pos_first = 0;   // gap for the two Over tokens
    int pos_second = 0;  // gap for the two Under tokens (in the diagram before insertion)
    int sign_first = 1;  // sign of the first chord; the partner gets the opposite sign
    bool interleaved = false;  // Under tokens in chord order a,b instead of b,a
};
struct R2Delete {
    int chord_a = 0;
    int chord_b = 0;
};
struct R3Slide {
    // The three chords and their six endpoint positions, given as three
    // sites of cyclically adjacent tokens: (positions[2i], positions[2i+1]).
    // Legality is checked structurally against the realizable triangle
    // configurations.
    std::array<int, 3> chords{};
    std::array<int, 6> positions{};
};
using MoveSpec = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Slide>;

/// Applies the move, or throws MoveNotApplicable when the configuration is
/// not present / not legal.
GaussDiagram apply_move(const GaussDiagram& d, const MoveSpec& m);

/// Uniform random diagram with up to max_chords chords.
GaussDiagram random_diagram(int max_chords, std::mt19937_64& rng);

/// Picks a random applicable move (insertions always exist; deletions and
/// R3 slides are drawn from the present configurations). Biases toward
/// deletions once the diagram holds more than `soft_cap` chords.
MoveSpec random_move(const GaussDiagram& d, std::mt19937_64& rng, int soft_cap = 24);

/// All structurally legal R3 slides of the diagram.
std::vector<R3Slide> find_r3_slides(const GaussDiagram& d);

} // namespace vkn::gauss
