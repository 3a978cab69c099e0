#include "vkn/textio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vkn::io {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

la::IntMat parse_matrix(std::istream& in) {
    long rows, cols;
    if (!(in >> rows >> cols)) throw syntax_error("expected '<rows> <cols>' header");
    if (rows < 0 || cols < 0) throw syntax_error("negative matrix dimensions");
    la::IntMat m(static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::string tok;
            if (!(in >> tok)) throw syntax_error("matrix entries ended early");
            try {
                m.at(i, j) = mpz_class(tok);
            } catch (const std::invalid_argument&) {
                throw syntax_error("bad integer '" + tok + "'");
            }
        }
    return m;
}

la::IntMat read_matrix_file(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_matrix(in);
}

std::string format_matrix(const la::IntMat& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

namespace {

la::IntMat matrix_from_json(const json& j) {
    if (!j.is_array()) throw syntax_error("matrix must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    la::IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols) throw syntax_error("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = mpz_class(j.at(i).at(c).get<long>());
    }
    return m;
}

bool looks_like_json(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

} // namespace

seifert::BlockSeifert parse_block(const std::string& content) {
    if (looks_like_json(content)) {
        json j = json::parse(content);
        return seifert::BlockSeifert(matrix_from_json(j.at("A_J")), matrix_from_json(j.at("A_K")),
                                     matrix_from_json(j.at("B")));
    }
    std::istringstream in(content);
    std::string header;
    la::IntMat aj, ak, b;
    bool saw_aj = false, saw_ak = false, saw_b = false;
    while (in >> header) {
        if (header == "A_J") {
            aj = parse_matrix(in);
            saw_aj = true;
        } else if (header == "A_K") {
            ak = parse_matrix(in);
            saw_ak = true;
        } else if (header == "B") {
            b = parse_matrix(in);
            saw_b = true;
        } else {
            throw syntax_error("unexpected block header '" + header + "'");
        }
    }
    if (!saw_aj || !saw_ak || !saw_b)
        throw syntax_error("block file needs A_J, A_K and B sections");
    return seifert::BlockSeifert(std::move(aj), std::move(ak), std::move(b));
}

seifert::BlockSeifert read_block_file(const std::string& path) { return parse_block(slurp(path)); }

milnor::MMData parse_mmdata(const std::string& content) {
    json j = json::parse(content);
    milnor::MMData d;
    d.w1 = grp::parse_word(j.at("w1").get<std::string>(), "");
    d.w2 = grp::parse_word(j.at("w2").get<std::string>(), "");
    d.w3 = grp::parse_word(j.at("w3").get<std::string>(), "");
    d.t123 = mpz_class(j.at("t123").get<long>());
    auto lk = j.at("lk");
    if (!lk.is_array() || lk.size() != 3)
        throw syntax_error("lk must be [lk12, lk13, lk23]");
    for (int i = 0; i < 3; ++i) d.lk[i] = lk.at(i).get<long>();
    return d;
}

braid::MixedBraid parse_mixed_braid(const std::string& content) {
    json j = json::parse(content);
    braid::MixedBraid mb;
    mb.m = j.at("m").get<int>();
    mb.k = j.at("k").get<int>();
    mb.n = j.at("n").get<int>();
    mb.parted = j.value("parted", true);
    mb.word = braid::parse_braid(j.at("word").get<std::string>(), mb.m + mb.k + mb.n);
    braid::validate_mixed(mb);
    return mb;
}

std::string format_mixed_braid(const braid::MixedBraid& mb) {
    json j;
    j["m"] = mb.m;
    j["k"] = mb.k;
    j["n"] = mb.n;
    j["word"] = braid::to_string(mb.word);
    j["parted"] = mb.parted;
    return j.dump();
}

} // namespace vkn::io
