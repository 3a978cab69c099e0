#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "vkn/textio.hpp"

using namespace vkn;

TEST_CASE("matrix text round trip") {
    std::istringstream in("2 3\n1 -2 3\n40 5 -6\n");
    la::IntMat m = io::parse_matrix(in);
    CHECK(m.rows() == 2);
    CHECK(m.at(1, 0) == 40);
    std::istringstream again(io::format_matrix(m));
    CHECK(io::parse_matrix(again) == m);

    std::istringstream empty("0 0\n");
    CHECK(io::parse_matrix(empty).empty());

    std::istringstream short_input("2 2\n1 2 3");
    CHECK_THROWS_AS(io::parse_matrix(short_input), Error);
    std::istringstream junk("2 2\n1 2 3 x");
    CHECK_THROWS_AS(io::parse_matrix(junk), Error);
}

TEST_CASE("block files, text and JSON forms") {
    const char* text =
        "A_J\n2 2\n-1 1\n0 -1\n"
        "A_K\n2 2\n-1 1\n0 -1\n"
        "B\n2 2\n1 0\n0 0\n";
    seifert::BlockSeifert bs = io::parse_block(text);
    CHECK(bs.g1() == 1);
    CHECK(bs.b.at(0, 0) == 1);

    const char* json_text =
        R"({"A_J": [[-1,1],[0,-1]], "A_K": [[-1,1],[0,-1]], "B": [[1,0],[0,0]]})";
    seifert::BlockSeifert bj = io::parse_block(json_text);
    CHECK(bj.a_j == bs.a_j);
    CHECK(bj.a_k == bs.a_k);
    CHECK(bj.b == bs.b);

    CHECK_THROWS_AS(io::parse_block("A_J\n2 2\n1 0\n0 1\n"), Error);     // missing sections
    CHECK_THROWS_AS(io::parse_block("A_X\n2 2\n1 0\n0 1\n"), Error);     // bad header
    CHECK_THROWS_AS(io::parse_block(R"({"A_J": [[0,1],[1]], "A_K": [], "B": []})"), Error);
}

TEST_CASE("MMData JSON") {
    milnor::MMData d = io::parse_mmdata(
        R"({"w1": "", "w2": "3 3^-1", "w3": "2", "t123": -1, "lk": [0, 0, 0]})");
    CHECK(d.w1.empty());
    CHECK(d.w2.size() == 0);  // 3 3^-1 reduces away
    CHECK(d.w3.size() == 1);
    CHECK(d.t123 == -1);
    CHECK(milnor::mellor_melvin(d) == milnor::Residue(1, 0));

    CHECK_THROWS_AS(io::parse_mmdata(R"({"w1": "", "w2": "", "w3": "", "t123": 0, "lk": [1]})"),
                    Error);
}

TEST_CASE("MixedBraid JSON round trip") {
    braid::MixedBraid mb = io::parse_mixed_braid(
        R"({"m": 2, "k": 0, "n": 1, "word": "1 1 1 2 2 2 2", "parted": true})");
    CHECK(mb.m == 2);
    CHECK(mb.word.length() == 7);
    braid::MixedBraid back = io::parse_mixed_braid(io::format_mixed_braid(mb));
    CHECK(back.word == mb.word);
    CHECK(back.k == mb.k);

    // a word whose permutation mixes the classes is rejected on parse
    CHECK_THROWS_AS(
        io::parse_mixed_braid(R"({"m": 1, "k": 0, "n": 1, "word": "1", "parted": true})"),
        Error);
}

TEST_CASE("missing files surface a named error") {
    CHECK_THROWS_WITH_AS(io::slurp("/nonexistent/nowhere.txt"), doctest::Contains("cannot open"),
                         Error);
}
