// Command-line driver for the vkn library: Gauss-diagram invariants,
// Alexander/MVAP determinants, Milnor triple linking and braid
// homogenization, plus a seeded selftest of the randomized identity suites.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vkn/gauss.hpp"
#include "vkn/milnor.hpp"
#include "vkn/seifert.hpp"
#include "vkn/selftest.hpp"
#include "vkn/textio.hpp"

using nlohmann::json;
using namespace vkn;

namespace {

constexpr uint64_t kDefaultSeed = 987654321ULL;

std::vector<la::Int> parse_csv_ints(const std::string& s) {
    std::vector<la::Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::string t;
        for (char c : tok)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) throw syntax_error("empty entry in integer list");
        try {
            out.emplace_back(t);
        } catch (const std::invalid_argument&) {
            throw syntax_error("bad integer '" + t + "'");
        }
    }
    return out;
}

std::string residue_str(const milnor::Residue& r) {
    return r.value.get_str() + " (mod " + r.modulus.get_str() + ")";
}

struct Output {
    bool as_json = false;
    json j;
    std::ostringstream text;

    int flush() {
        if (as_json)
            std::cout << j.dump() << "\n";
        else
            std::cout << text.str();
        return 0;
    }
};

int run_gauss_index(Output& out, const std::string& code) {
    gauss::GaussDiagram d = gauss::parse_gauss(code);
    gauss::IndexReport rep = gauss::index_report(d);
    json chords = json::array();
    for (size_t i = 0; i < rep.chord_index.size(); ++i) {
        const auto& [id, ix] = rep.chord_index[i];
        int sg = rep.chord_sign[i];
        out.text << "chord " << id << ": sign " << (sg > 0 ? "+1" : "-1") << " index " << ix
                 << "\n";
        chords.push_back({{"chord", id}, {"sign", sg}, {"index", ix}});
    }
    out.text << "writhe " << rep.writhe << "\n";
    out.j = {{"chords", chords}, {"writhe", rep.writhe}};
    return out.flush();
}

int run_gauss_ac(Output& out, const std::string& code) {
    gauss::GaussDiagram d = gauss::parse_gauss(code);
    bool ac = gauss::is_almost_classical(d);
    auto numbering = gauss::alexander_numbering(d);
    out.text << "almost classical: " << (ac ? "yes" : "no") << "\n";
    out.j["almost_classical"] = ac;
    if (numbering) {
        out.text << "numbering:";
        for (long v : numbering->labels) out.text << ' ' << v;
        out.text << "\n";
        out.j["numbering"] = numbering->labels;
    } else {
        out.j["numbering"] = nullptr;
    }
    return out.flush();
}

int run_gauss_writhe(Output& out, const std::string& code) {
    gauss::GaussDiagram d = gauss::parse_gauss(code);
    std::string p = poly::to_string(gauss::writhe_index_polynomial(d), "q");
    out.text << p << "\n";
    out.j = {{"writhe_polynomial", p}};
    return out.flush();
}

int run_alex_classical(Output& out, const std::string& matrix_path) {
    la::IntMat v = io::read_matrix_file(matrix_path);
    poly::LaurentPoly1 a = seifert::alexander_classical(v);
    std::string raw = poly::to_string(a);
    std::string norm = poly::to_string(poly::normalize(a).normal);
    out.text << "alexander: " << raw << "\n" << "normalized: " << norm << "\n";
    out.j = {{"alexander", raw}, {"normalized", norm}};
    return out.flush();
}

int run_alex_ac(Output& out, const std::string& block_path, const std::string& vminus_path,
                const std::string& vplus_path) {
    seifert::ACSeifertPair pair;
    if (!block_path.empty()) {
        pair = seifert::vpm_from_block(io::read_block_file(block_path));
    } else {
        pair = seifert::ACSeifertPair(io::read_matrix_file(vminus_path),
                                      io::read_matrix_file(vplus_path));
    }
    poly::LaurentPoly1 a = seifert::alexander_ac(pair);
    std::string raw = poly::to_string(a);
    std::string norm = poly::to_string(poly::normalize(a).normal);
    out.text << "alexander_ac: " << raw << "\n" << "normalized: " << norm << "\n";
    out.j = {{"alexander_ac", raw}, {"normalized", norm}};
    return out.flush();
}

int run_mvap(Output& out, const std::string& block_path) {
    seifert::BlockSeifert bs = io::read_block_file(block_path);
    poly::LaurentPoly2 nabla = seifert::mvap(bs);
    std::string raw = poly::to_string(nabla);
    std::string norm = poly::to_string(poly::normalize(nabla).normal);
    out.text << "mvap: " << raw << "\n" << "normalized: " << norm << "\n";
    out.j = {{"mvap", raw}, {"normalized", norm}};
    return out.flush();
}

int run_check_thm31(Output& out, const std::string& block_path) {
    seifert::Thm31Report rep = seifert::thm31_check(io::read_block_file(block_path));
    std::string lhs = poly::to_string(rep.lhs), rhs = poly::to_string(rep.rhs);
    out.text << "lhs: " << lhs << "\n"
             << "rhs: " << rhs << "\n"
             << "sign: " << rep.sign << "\n"
             << (rep.pass ? "PASS" : "FAIL") << "\n";
    out.j = {{"lhs", lhs}, {"rhs", rhs}, {"sign", rep.sign}, {"pass", rep.pass}};
    return out.flush();
}

int run_check_thm41(Output& out, const std::string& k2s, const std::string& k3s, int g,
                    long lk23) {
    milnor::Thm41Report rep =
        milnor::thm41_check(parse_csv_ints(k2s), parse_csv_ints(k3s), g, la::Int(lk23));
    out.text << "index: " << rep.index.get_str() << "\n"
             << "t123: " << rep.t123.get_str() << "\n"
             << "mu123 = " << residue_str(rep.mu) << "\n"
             << (rep.pass ? "PASS" : "FAIL") << "\n";
    out.j = {{"index", rep.index.get_str()},
             {"t123", rep.t123.get_str()},
             {"mu123", rep.mu.value.get_str()},
             {"modulus", rep.mu.modulus.get_str()},
             {"pass", rep.pass}};
    return out.flush();
}

int run_milnor_braid(Output& out, const std::string& word, int strands) {
    braid::BraidWord b = braid::parse_braid(word, strands);
    milnor::Residue mu = milnor::mu123_of_closure(b);
    braid::ClosureSummary cs = braid::closure_summary(b);
    out.text << "mu123 = " << residue_str(mu) << "\n";
    json lk = json::array();
    for (int i = 0; i < cs.components; ++i)
        for (int j = i + 1; j < cs.components; ++j) {
            out.text << "lk(" << i + 1 << "," << j + 1 << ") = " << cs.lk[i][j] << "\n";
            lk.push_back({{"a", i + 1}, {"b", j + 1}, {"lk", cs.lk[i][j]}});
        }
    out.j = {{"mu123", mu.value.get_str()}, {"modulus", mu.modulus.get_str()}, {"lk", lk}};
    return out.flush();
}

int run_milnor_longitudes(Output& out, const std::string& path, long delta) {
    std::istringstream in(io::slurp(path));
    std::vector<grp::FreeWord> ls;
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) ls.push_back(grp::parse_word(line, "m"));
    }
    if (ls.size() != 3) throw syntax_error("expected three longitude lines");
    milnor::LongitudeSet set(3, std::move(ls));
    milnor::Residue mu = milnor::mu123_from_longitudes(set, la::Int(delta));
    out.text << "mu123 = " << residue_str(mu) << "\n";
    out.j = {{"mu123", mu.value.get_str()}, {"modulus", mu.modulus.get_str()}};
    return out.flush();
}

int run_milnor_mm(Output& out, const std::string& path) {
    milnor::MMData d = io::parse_mmdata(io::slurp(path));
    milnor::Residue mu = milnor::mellor_melvin(d);
    out.text << "mu123 = " << residue_str(mu) << "\n";
    out.j = {{"mu123", mu.value.get_str()}, {"modulus", mu.modulus.get_str()}};
    return out.flush();
}

int run_braid_homogenize(Output& out, const std::string& word, int strands) {
    braid::BraidWord b = braid::parse_braid(word, strands);
    braid::StallingsResult sr = braid::stallings_homogenize(b);
    out.text << "word: " << braid::to_string(sr.result) << "\n"
             << "strands: " << sr.result.strands() << "\n"
             << "k: " << sr.k << "\n"
             << "epsilon: " << sr.epsilon << "\n";
    out.j = {{"word", braid::to_string(sr.result)},
             {"strands", sr.result.strands()},
             {"k", sr.k},
             {"epsilon", sr.epsilon}};
    return out.flush();
}

int run_braid_stabilize(Output& out, const std::string& path) {
    braid::MixedBraid mb = io::parse_mixed_braid(io::slurp(path));
    braid::MixedBraid st = braid::fiber_stabilize(mb);
    std::string js = io::format_mixed_braid(st);
    out.text << js << "\n";
    out.j = json::parse(js);
    return out.flush();
}

int run_braid_summary(Output& out, const std::string& word, int strands) {
    braid::BraidWord b = braid::parse_braid(word, strands);
    braid::ClosureSummary cs = braid::closure_summary(b);
    out.text << "components: " << cs.components << "\n";
    out.text << "permutation:";
    for (int i = 0; i < b.strands(); ++i) out.text << ' ' << cs.permutation[i] + 1;
    out.text << "\n";
    json lk = json::array();
    for (int i = 0; i < cs.components; ++i)
        for (int j = i + 1; j < cs.components; ++j) {
            out.text << "lk(" << i + 1 << "," << j + 1 << ") = " << cs.lk[i][j] << "\n";
            lk.push_back({{"a", i + 1}, {"b", j + 1}, {"lk", cs.lk[i][j]}});
        }
    out.j = {{"components", cs.components}, {"permutation", cs.permutation}, {"lk", lk}};
    return out.flush();
}

int run_selftest(Output& out, uint64_t seed) {
    std::vector<selftest::SuiteResult> results = selftest::run_all(seed);
    bool all = true;
    json suites = json::array();
    for (const auto& r : results) {
        out.text << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases
                 << " cases, " << r.failures << " failures)\n";
        suites.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
        all = all && r.passed();
    }
    out.text << (all ? "all suites passed" : "some suites FAILED") << "\n";
    out.j = {{"suites", suites}, {"pass", all}};
    out.flush();
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual knot and classical link invariants, exactly"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.as_json, "emit one JSON object instead of text");

    // gauss
    auto* gauss_cmd = app.add_subcommand("gauss", "Gauss diagram invariants");
    gauss_cmd->require_subcommand(1);
    std::string gauss_code;
    auto* gi = gauss_cmd->add_subcommand("index", "per-crossing indices and writhe");
    gi->add_option("code", gauss_code, "Gauss code, e.g. O1+,O2+,U1+,U2+")->required();
    auto* ga = gauss_cmd->add_subcommand("ac", "almost-classical test and Alexander numbering");
    ga->add_option("code", gauss_code)->required();
    auto* gw = gauss_cmd->add_subcommand("writhe", "writhe polynomial in q");
    gw->add_option("code", gauss_code)->required();

    // alex
    auto* alex_cmd = app.add_subcommand("alex", "Alexander polynomials from Seifert data");
    alex_cmd->require_subcommand(1);
    std::string matrix_path, block_path, vminus_path, vplus_path;
    auto* ac_cl = alex_cmd->add_subcommand("classical", "det(tV - V^T)");
    ac_cl->add_option("--matrix", matrix_path, "Seifert matrix file")->required();
    auto* ac_ac = alex_cmd->add_subcommand("ac", "det(tV- - V+)");
    ac_ac->add_option("--block", block_path, "block Seifert file (V+- derived)");
    ac_ac->add_option("--vminus", vminus_path, "V- matrix file");
    ac_ac->add_option("--vplus", vplus_path, "V+ matrix file");

    // mvap
    auto* mvap_cmd = app.add_subcommand("mvap", "two-variable boundary-link polynomial");
    std::string mvap_block;
    mvap_cmd->add_option("--block", mvap_block, "block Seifert file")->required();

    // check
    auto* check_cmd = app.add_subcommand("check", "machine verification of the identities");
    check_cmd->require_subcommand(1);
    std::string check_block, k2s, k3s;
    int check_g = 1;
    long lk23 = 0;
    auto* c31 = check_cmd->add_subcommand("thm31", "AC Alexander vs specialized MVAP");
    c31->add_option("--block", check_block, "block Seifert file")->required();
    auto* c41 = check_cmd->add_subcommand("thm41", "index vs triple-linking chain");
    c41->add_option("--k2", k2s, "comma-separated homology vector")->required();
    c41->add_option("--k3", k3s, "comma-separated homology vector")->required();
    c41->add_option("--g", check_g, "genus (vectors have length 2g)")->required();
    c41->add_option("--lk23", lk23, "modulus lk(K2,K3)");

    // milnor
    auto* milnor_cmd = app.add_subcommand("milnor", "Milnor triple linking number");
    milnor_cmd->require_subcommand(1);
    std::string milnor_word, milnor_file;
    int milnor_strands = 3;
    long milnor_delta = 0;
    auto* mbr = milnor_cmd->add_subcommand("braid", "mu123 of a pure 3-braid closure");
    mbr->add_option("word", milnor_word, "braid word, e.g. \"1 -2 1 -2 1 -2\"")->required();
    mbr->add_option("--strands", milnor_strands, "strand count (3)");
    auto* mlo = milnor_cmd->add_subcommand("longitudes", "mu123 from longitude words");
    mlo->add_option("file", milnor_file, "three lines like: m1 m2 m1^-1 m2^-1")->required();
    mlo->add_option("--delta", milnor_delta, "modulus (gcd of pairwise linking numbers)");
    auto* mmm = milnor_cmd->add_subcommand("mm", "Mellor-Melvin counting formula");
    mmm->add_option("file", milnor_file, "MMData JSON file")->required();

    // braid
    auto* braid_cmd = app.add_subcommand("braid", "braid-word constructions");
    braid_cmd->require_subcommand(1);
    std::string braid_word, braid_file;
    int braid_strands = 2;
    auto* bh = braid_cmd->add_subcommand("homogenize", "Stallings homogenization");
    bh->add_option("word", braid_word)->required();
    bh->add_option("--strands", braid_strands)->required();
    auto* bst = braid_cmd->add_subcommand("stabilize", "fiber stabilization of a mixed braid");
    bst->add_option("file", braid_file, "MixedBraid JSON file")->required();
    auto* bsu = braid_cmd->add_subcommand("summary", "closure permutation and linking numbers");
    bsu->add_option("word", braid_word)->required();
    bsu->add_option("--strands", braid_strands)->required();

    // selftest
    auto* st_cmd = app.add_subcommand("selftest", "run the randomized identity suites");
    uint64_t seed = kDefaultSeed;
    st_cmd->add_option("--seed", seed, "random seed (fixed default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
    }

    try {
        if (gi->parsed()) return run_gauss_index(out, gauss_code);
        if (ga->parsed()) return run_gauss_ac(out, gauss_code);
        if (gw->parsed()) return run_gauss_writhe(out, gauss_code);
        if (ac_cl->parsed()) return run_alex_classical(out, matrix_path);
        if (ac_ac->parsed()) {
            if (block_path.empty() && (vminus_path.empty() || vplus_path.empty()))
                throw syntax_error("need --block or both --vminus and --vplus");
            return run_alex_ac(out, block_path, vminus_path, vplus_path);
        }
        if (mvap_cmd->parsed()) return run_mvap(out, mvap_block);
        if (c31->parsed()) return run_check_thm31(out, check_block);
        if (c41->parsed()) return run_check_thm41(out, k2s, k3s, check_g, lk23);
        if (mbr->parsed()) return run_milnor_braid(out, milnor_word, milnor_strands);
        if (mlo->parsed()) return run_milnor_longitudes(out, milnor_file, milnor_delta);
        if (mmm->parsed()) return run_milnor_mm(out, milnor_file);
        if (bh->parsed()) return run_braid_homogenize(out, braid_word, braid_strands);
        if (bst->parsed()) return run_braid_stabilize(out, braid_file);
        if (bsu->parsed()) return run_braid_summary(out, braid_word, braid_strands);
        if (st_cmd->parsed()) return run_selftest(out, seed);
    } catch (const vkn::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: SyntaxError: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: UsageError: no subcommand\n";
    return 2;
}
