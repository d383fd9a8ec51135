// End-to-end tests for the hh binary. The test runner passes the binary path
// as the last command-line argument (see tests/CMakeLists.txt).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli; // absolute path to the hh binary

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
    const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
    ++counter;
    const std::string cmd =
        env_prefix + "'" + g_cli + "' " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

const char* kInterval = R"('{"n":1,"vertices":[[0],[1]]}')";
const char* kSquare = R"('{"class":"quadratic_form","params":{"Q":[[1]]}}')";

} // namespace

TEST_CASE("bounds: x^2 on [0,1], classical family") {
    const RunResult r = run_cli(std::string("bounds --simplex ") + kInterval + " --function " +
                                kSquare + " --family classical");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["family"] == "classical");
    CHECK(j["lower"].get<double>() == doctest::Approx(0.25));
    CHECK(j["middle"]["value"].get<double>() == doctest::Approx(1.0 / 3));
    CHECK(j["middle"]["kind"] == "exact");
    CHECK(j["upper"].get<double>() == doctest::Approx(0.5));
    CHECK(j["status"] == "holds");
    CHECK(!r.err.empty()); // human summary goes to stderr
}

TEST_CASE("bounds: -x^2 is violated with exit code 2") {
    const RunResult r = run_cli(
        std::string("bounds --simplex ") + kInterval +
        R"( --function '{"class":"concave_control","params":{"base":{"class":"quadratic_form","params":{"Q":[[1]]}}}}' --family classical)");
    CHECK(r.exit_code == 2);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "violated");
}

TEST_CASE("bounds: malformed JSON exits with 1 and a message on stderr") {
    const RunResult r = run_cli(std::string("bounds --simplex '{\"n\":1' --function ") + kSquare +
                                " --family classical");
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
}

TEST_CASE("bounds: an MC equality chain is inconclusive with exit code 3") {
    // max(x, x-5) = x on [0,1] is affine but carries no polynomial form, so
    // the Wright middle is Monte Carlo; the symmetrization is constant and
    // all three terms coincide up to float noise
    const std::string affine_pieces =
        R"('{"class":"max_affine","params":{"pieces":[{"w":[1],"b":0},{"w":[1],"b":-5}]}}')";
    const RunResult r = run_cli(std::string("bounds --simplex ") + kInterval + " --function " +
                                affine_pieces + " --family wright --samples 2000 --seed 4");
    CHECK(r.exit_code == 3);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "inconclusive");
    CHECK(j["middle"]["kind"] == "monte_carlo");
}

TEST_CASE("bounds: strong family on a plain convex spec is a usage error") {
    const RunResult r = run_cli(std::string("bounds --simplex ") + kInterval + " --function " +
                                kSquare + " --family strongly_convex");
    CHECK(r.exit_code == 1);
}

TEST_CASE("bounds: operator family equalities") {
    const std::string wright =
        R"('{"class":"wright","params":{"w":[0.5],"base":{"class":"quadratic_form","params":{"Q":[[1]]}}}}')";
    const RunResult left = run_cli(std::string("bounds --simplex ") + kInterval + " --function " +
                                   wright + " --family operator --functional barycenter");
    REQUIRE(left.exit_code == 0);
    const auto jl = nlohmann::json::parse(left.out);
    CHECK(jl["margin_lower"].get<double>() == doctest::Approx(0.0).epsilon(1e-10));

    const RunResult right = run_cli(std::string("bounds --simplex ") + kInterval + " --function " +
                                    wright + " --family operator --functional vertex_average");
    REQUIRE(right.exit_code == 0);
    const auto jr = nlohmann::json::parse(right.out);
    CHECK(jr["margin_upper"].get<double>() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("integrate: exact squared projection over the unit triangle") {
    const RunResult r = run_cli(
        R"(integrate --simplex '{"n":2,"vertices":[[0,0],[1,0],[0,1]]}' --function '{"class":"quadratic_form","params":{"Q":[[1,0],[0,0]]}}' --method exact)");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(1.0 / 12).epsilon(1e-13));
    CHECK(j["kind"] == "exact");
    CHECK(j["std_error"].get<double>() == 0.0);
}

TEST_CASE("integrate: exact on a non-polynomial class exits with 1") {
    const RunResult r = run_cli(std::string("integrate --simplex ") + kInterval +
                                R"( --function '{"class":"exp_linear","params":{"w":[1]}}' --method exact)");
    CHECK(r.exit_code == 1);
}

TEST_CASE("integrate: mc runs are reproducible per seed") {
    const std::string cmd = std::string("integrate --simplex ") + kInterval +
                            R"( --function '{"class":"exp_linear","params":{"w":[1]}}' --method mc --samples 20000 --seed 5)";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["kind"] == "monte_carlo");
    // e - 1 with a 4 sigma band
    CHECK(std::abs(j["value"].get<double>() - 1.718281828) <=
          4.0 * j["std_error"].get<double>());
}

TEST_CASE("integrate: HH_SEED is the fallback seed") {
    const std::string cmd = std::string("integrate --simplex ") + kInterval +
                            R"( --function '{"class":"exp_linear","params":{"w":[1]}}' --method mc --samples 5000)";
    const RunResult with_env = run_cli(cmd, "HH_SEED=5 ");
    const RunResult with_flag = run_cli(cmd + " --seed 5");
    const RunResult other_env = run_cli(cmd, "HH_SEED=6 ");
    REQUIRE(with_env.exit_code == 0);
    CHECK(with_env.out == with_flag.out);
    CHECK(with_env.out != other_env.out);
    // explicit flag wins over the environment
    const RunResult flag_beats_env = run_cli(cmd + " --seed 5", "HH_SEED=6 ");
    CHECK(flag_beats_env.out == with_flag.out);
}

TEST_CASE("verify: default-catalog campaign holds and is byte-identical per seed") {
    const std::string args = "verify --dims 1,2 --simplices 2 --samples 500 --seed 11";
    const RunResult a = run_cli(args + " --out verify_a.json");
    const RunResult b = run_cli(args + " --out verify_b.json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(slurp("verify_a.json") == slurp("verify_b.json"));
    const auto agg = nlohmann::json::parse(a.out);
    CHECK(agg["total"].get<int>() > 0);
    CHECK(agg["violated"].get<int>() == 0);

    const auto report = nlohmann::json::parse(slurp("verify_a.json"));
    CHECK(report["cases"].size() == agg["total"].get<std::size_t>());
    // the sampled simplices are embedded in the interchange format
    REQUIRE(!report["simplices"].empty());
    const auto& first = report["simplices"][0]["simplex"];
    CHECK(first.contains("n"));
    CHECK(first["vertices"].size() == first["n"].get<std::size_t>() + 1);
    std::remove("verify_a.json");
    std::remove("verify_b.json");
}

TEST_CASE("verify: a concave-only campaign exits with 2") {
    std::ofstream config("concave_config.json");
    config << R"({
        "families": ["classical", "wright"],
        "dimensions": [1, 2],
        "simplices_per_dim": 3,
        "mc_samples": 500,
        "seed": 3,
        "function_catalog": [
            {"class": "concave_control",
             "params": {"base": {"class": "norm_power", "params": {"p": 2}}}}
        ]
    })";
    config.close();
    const RunResult r = run_cli("verify --config concave_config.json --out concave_report.json");
    CHECK(r.exit_code == 0); // controls are not positive-class cases
    const auto agg = nlohmann::json::parse(r.out);
    CHECK(agg["violated"].get<int>() > 0);
    CHECK(agg["positive_violations"].get<int>() == 0);
    std::remove("concave_config.json");
    std::remove("concave_report.json");
}

TEST_CASE("verify: csv output") {
    const RunResult r =
        run_cli("verify --dims 1 --simplices 2 --samples 500 --format csv --out verify.csv");
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp("verify.csv");
    CHECK(csv.rfind("dim,simplex,function,", 0) == 0);
    std::remove("verify.csv");
}

TEST_CASE("descriptors can be supplied as @file paths") {
    std::ofstream simplex_file("simplex_arg.json");
    simplex_file << R"({"n":1,"vertices":[[0],[1]]})";
    simplex_file.close();
    std::ofstream function_file("function_arg.json");
    function_file << R"({"class":"quadratic_form","params":{"Q":[[1]]}})";
    function_file.close();
    const RunResult r = run_cli(
        "bounds --simplex @simplex_arg.json --function @function_arg.json --family classical");
    CHECK(r.exit_code == 0);
    std::remove("simplex_arg.json");
    std::remove("function_arg.json");

    const RunResult missing = run_cli(
        "bounds --simplex @does_not_exist.json --function @nope.json --family classical");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("verify: unwritable output path exits with 1") {
    const RunResult r =
        run_cli("verify --dims 1 --simplices 1 --samples 100 --out /nonexistent_dir/report.json");
    CHECK(r.exit_code == 1);
    CHECK(!r.err.empty());
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("bounds").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    const RunResult r = run_cli(std::string("bounds --simplex ") + kInterval + " --function " +
                                kSquare + " --family mystery");
    CHECK(r.exit_code == 1);
}

int run_all(int argc, char** argv) {
    std::vector<char*> args(argv, argv + argc);
    if (!args.empty() && args.back()[0] == '/') {
        g_cli = args.back();
        args.pop_back();
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: cli_tests [doctest options] /path/to/hh\n");
        return 64;
    }
    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(args.size()), args.data());
    return ctx.run();
}

int main(int argc, char** argv) { return run_all(argc, argv); }
