// End-to-end checks of the command-line tool: spawns the built binary and
// inspects exit codes and output.

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "helpers.hpp"
#include "superfuzz/json_io.hpp"

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CmdResult run_cli(const std::string& args) {
    std::string out_path = "cli_test_stdout.txt";
    std::string err_path = "cli_test_stderr.txt";
    std::string cmd = std::string(SUPERFUZZ_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    int rc = std::system(cmd.c_str());
    CmdResult r;
    r.exit_code = WEXITSTATUS(rc);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::string fx(const std::string& name) { return testutil::fixture(name); }

} // namespace

TEST_CASE("run: fcm text trace shows the partitioned step vectors") {
    auto r = run_cli("run --model " + fx("ex_3_5_2_1_model.json") + " --initial " +
                     fx("ex_3_5_2_1_x.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[0 2 -2 0 0 1 | 1 0 1 0 1 | 2 -1 0 0 1 1 -1]") != std::string::npos);
    CHECK(r.out.find("[1 1 0 0 0 1 | 1 1 1 0 1 | 1 0 1 0 1 1 0]") != std::string::npos);
    CHECK(r.out.find("[1 1 0 1 1 1 | 1 1 1 0 1 | 1 0 1 0 1 1 1]") != std::string::npos);
    CHECK(r.out.find("verdict: fixed point") != std::string::npos);
}

TEST_CASE("run: json report parses and round-trips") {
    auto r = run_cli("run --model " + fx("ex_2_3_19_model.json") + " --initial " +
                     fx("ex_2_3_19_a.json") + " --side x --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("model").at("kind") == "fam");
    CHECK_NOTHROW(superfuzz::state_from_json(j.at("hidden_pattern")));
    CHECK(j.at("verdict").contains("type"));
}

TEST_CASE("run: usage errors exit 64") {
    auto missing_side = run_cli("run --model " + fx("ex_2_3_15_model.json") + " --initial " +
                                fx("ex_2_3_15_x.json"));
    CHECK(missing_side.exit_code == 64);
    auto fcm_with_side = run_cli("run --model " + fx("ex_3_5_2_1_model.json") + " --initial " +
                                 fx("ex_3_5_2_1_x.json") + " --side domain");
    CHECK(fcm_with_side.exit_code == 64);
    auto no_args = run_cli("run");
    CHECK(no_args.exit_code == 64);
}

TEST_CASE("run: input errors exit 1, non-convergence exits 2") {
    auto bad_model = run_cli("run --model " + fx("bad_offdiag_model.json") + " --initial " +
                             fx("ex_3_5_2_1_x.json") + " --side domain");
    CHECK(bad_model.exit_code == 1);
    CHECK(bad_model.err.find("ValidationError") != std::string::npos);

    auto capped = run_cli("run --model " + fx("ex_3_5_2_1_model.json") + " --initial " +
                          fx("ex_3_5_2_1_x.json") + " --max-steps 1");
    CHECK(capped.exit_code == 2);
}

TEST_CASE("run: inline initial state") {
    auto r = run_cli("run --model " + fx("ex_2_3_15_model.json") +
                     " --initial '{\"domain\":\"binary\",\"values\":[1,0,1,1]}' --side domain");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[1 1 0 1 | 1 1 | 0 1 1 | 1 1 0 0 1]") != std::string::npos);
}

TEST_CASE("compose: multiply writes a matrix json") {
    auto r = run_cli("compose --op multiply --semiring plus --a " + fx("ex_1_1_21_a.json") +
                     " --b " + fx("ex_1_1_21_b.json"));
    CHECK(r.exit_code == 0);
    auto m = superfuzz::matrix_from_json(nlohmann::json::parse(r.out));
    CHECK(m.entries() == std::vector<double>{5, 5, 18, 11, 9, 13});
}

TEST_CASE("compose: add requires matching schemes") {
    auto ok = run_cli("compose --op add --a " + fx("ex_1_1_21_a.json") + " --b " +
                      fx("ex_1_1_21_a.json"));
    CHECK(ok.exit_code == 0);
    auto m = superfuzz::matrix_from_json(nlohmann::json::parse(ok.out));
    CHECK(m(0, 0) == 4.0);
    auto bad = run_cli("compose --op add --a " + fx("ex_1_1_16_a.json") + " --b " +
                       fx("ex_1_1_16_b.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("SchemeMismatch") != std::string::npos);
}

TEST_CASE("compose: block mismatch names the cut lists") {
    auto r = run_cli("compose --op multiply --semiring plus --a " + fx("ex_1_1_21_a.json") +
                     " --b " + fx("ex_1_1_21_b_major.json"));
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("col_cuts [1]") != std::string::npos);
    CHECK(r.err.find("row_cuts []") != std::string::npos);
}

TEST_CASE("compose: moment and pseudo transpose") {
    auto mom = run_cli("compose --op moment --a " + fx("sec_2_3_x.json"));
    CHECK(mom.exit_code == 0);
    auto m = superfuzz::matrix_from_json(nlohmann::json::parse(mom.out));
    CHECK(m.rows() == 3);
    CHECK(m(1, 1) == 1.0);

    // pseudo-transpose twice restores the canonical bytes
    auto once = run_cli("compose --op pseudo-transpose --a " + fx("ex_2_2_7_a.json"));
    CHECK(once.exit_code == 0);
    std::ofstream("cli_test_tp.json") << once.out;
    auto twice = run_cli("compose --op pseudo-transpose --a cli_test_tp.json");
    CHECK(twice.exit_code == 0);
    auto original = superfuzz::canonical_dump(
        superfuzz::matrix_to_json(superfuzz::load_matrix(fx("ex_2_2_7_a.json")))) + "\n";
    CHECK(twice.out == original);
    std::remove("cli_test_tp.json");
}

TEST_CASE("enumerate: counts and notes") {
    auto c22 = run_cli("enumerate --rows 2 --cols 2 --count-only");
    CHECK(c22.exit_code == 0);
    CHECK(c22.out.substr(0, 2) == "3\n");

    auto c33 = run_cli("enumerate --rows 3 --cols 3 --count-only");
    CHECK(c33.out.substr(0, 3) == "15\n");
    CHECK(c33.out.find("note:") != std::string::npos);

    auto sym4 = run_cli("enumerate --rows 4 --cols 4 --class symmetric --count-only");
    CHECK(sym4.out.substr(0, 2) == "7\n");

    // every nontrivial column cut set determines one pseudo partner
    auto pseudo4 = run_cli("enumerate --rows 4 --cols 4 --class pseudo --count-only");
    CHECK(pseudo4.out.substr(0, 2) == "7\n");

    auto listing = run_cli("enumerate --rows 2 --cols 2");
    CHECK(listing.exit_code == 0);
    CHECK(listing.out.find("{\"col_cuts\":[1],\"row_cuts\":[]}") != std::string::npos);

    auto bad = run_cli("enumerate --rows 0 --cols 2");
    CHECK(bad.exit_code == 64);
    auto rect_sym = run_cli("enumerate --rows 2 --cols 3 --class symmetric");
    CHECK(rect_sym.exit_code == 64);
}

TEST_CASE("env SUPERFUZZ_MAX_STEPS caps the run") {
    auto r = run_cli("run --model " + fx("ex_3_5_2_1_model.json") + " --initial " +
                     fx("ex_3_5_2_1_x.json") + " --format json");
    CHECK(r.exit_code == 0);

    std::string out_path = "cli_test_stdout.txt", err_path = "cli_test_stderr.txt";
    std::string cmd = std::string("SUPERFUZZ_MAX_STEPS=1 ") + SUPERFUZZ_CLI_PATH + " run --model " +
                      fx("ex_3_5_2_1_model.json") + " --initial " + fx("ex_3_5_2_1_x.json") + " > " +
                      out_path + " 2> " + err_path;
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
}
