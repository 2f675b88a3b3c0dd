#include "doctest.h"
#include "lgpeterson/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lgpet;

namespace {

const std::string kSource = LGPET_SOURCE_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(kSource + "/tests/golden/" + name);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string data(const std::string& name) { return kSource + "/data/" + name; }

std::string write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("lgpet_cli_" + name);
    std::ofstream(path) << body;
    return path.string();
}

void check_golden(const std::vector<std::string>& args, const std::string& file) {
    CAPTURE(file);
    const auto r = run(args);
    CHECK(r.code == kExitOk);
    CHECK(r.out == golden(file));
    CHECK(r.err.empty());
}

}  // namespace

TEST_CASE("golden outputs") {
    check_golden({"map", "--n", "2", "--partition", "3"}, "map_n2_3.txt");
    check_golden({"map", "--n", "3", "--partition", "4,4,2", "--loc-exp", "1", "--diagram"},
                 "map_n3_442_loc1.txt");
    check_golden({"map", "--n", "2", "--partition", "3,2,1", "--homology", "--diagram"}, "homology_n2_321.txt");
    check_golden({"element", "--n", "2", "--partition", "3,2"}, "element_n2_32.txt");
    check_golden({"transport", "--input", data("lg2_chevalley_affine.json")}, "transport_chevalley.txt");
    check_golden({"transport", "--input", data("lg2_product_rank2.json")}, "transport_chevalley.txt");
    check_golden({"transport", "--input", data("lg2_chevalley_affine.json"), "--format", "json"},
                 "transport_chevalley.json");
    check_golden({"enumerate", "--n", "2", "--max-weight", "5"}, "enumerate_n2_w5.txt");
    check_golden({"enumerate", "--n", "3", "--max-weight", "8", "--grassmannian-count"}, "count_n3_w8.txt");
    check_golden({"verify", "--n", "2", "--max-weight", "6", "--max-len", "5"}, "verify_n2.txt");
    check_golden({"verify", "--n", "2", "--max-weight", "4", "--suite", "mcr", "--format", "json"},
                 "verify_n2_mcr.json");
}

TEST_CASE("map examples") {
    CHECK(run({"map", "--n", "2", "--partition", "3"}).out == "Q^-1 * O[]\n");
    CHECK(run({"map", "--n", "2", "--partition", "4", "--homology"}).out == "0\n");
    CHECK(run({"map", "--n", "2", "--partition", "[]"}).out == "O[]\n");
}

TEST_CASE("verify exit status") {
    CHECK(run({"verify", "--n", "2", "--suite", "all"}).code == kExitOk);
    ::setenv("PETERSON_BFS_CAP", "10", 1);
    const auto r = run({"verify", "--n", "2", "--suite", "bijection"});
    ::unsetenv("PETERSON_BFS_CAP");
    CHECK(r.code == kExitFailed);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({"map", "--partition", "3"}).code == kExitUsage);
    CHECK(run({"map", "--n", "x", "--partition", "3"}).code == kExitUsage);
    CHECK(run({"map", "--n", "0", "--partition", "3"}).code == kExitUsage);
    CHECK(run({"verify", "--n", "2", "--suite", "nope"}).code == kExitUsage);
    CHECK(run({"transport", "--input", "x", "--format", "xml"}).code == kExitUsage);
    const auto help = run({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(help.out.find("transport") != std::string::npos);
}

TEST_CASE("validation errors") {
    const auto bad_part = run({"map", "--n", "2", "--partition", "2,2"});
    CHECK(bad_part.code == kExitInvalid);
    CHECK(bad_part.err.find("error:") == 0);
    CHECK(run({"element", "--n", "2", "--partition", "3;2"}).code == kExitInvalid);
    CHECK(run({"transport", "--input", "/nonexistent.json"}).code == kExitInvalid);
    CHECK(run({"transport", "--input", write_temp("broken.json", "{")}).code == kExitInvalid);
    const auto bad_coeff = write_temp("coeff.json", R"({"n": 2, "kind": "affine-k-product", "lhs": ["1", "1"],
        "rhs": [{"coeff": "e^{a1", "part": "2"}]})");
    const auto r = run({"transport", "--input", bad_coeff});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("transport warnings go to stderr") {
    const auto path = write_temp("warn.json", R"({"n": 3, "kind": "affine-k-product", "lhs": ["1", "2"],
        "rhs": [{"coeff": "1", "part": "4,3,2,1"}]})");
    const auto r = run({"transport", "--input", path});
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("warning: negative Q exponent") == 0);
}

TEST_CASE("outputs are deterministic") {
    const std::vector<std::string> args{"verify", "--n", "3", "--max-weight", "6", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}
