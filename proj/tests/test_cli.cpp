#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kg/cli/commands.hpp"
#include "kg/cli/config.hpp"
#include "kg/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace kg::cli;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& p) : path(p) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("presets parse and carry the documented defaults") {
    auto t1 = RunConfig::from_json_text(table1_preset());
    CHECK(t1.potential.alpha == 0.01);
    CHECK(t1.mass.m0 == -5.0);
    CHECK(t1.table1.reference.size() == 9);
    CHECK(t1.table1.tol == 1e-5);

    auto h = RunConfig::from_json_text(hulthen_preset());
    CHECK(h.scatter.kind == ScatterCase::Hulthen);
    CHECK(h.scatter.hulthen.V0 == 0.15);
    auto w = RunConfig::from_json_text(woods_saxon_preset());
    CHECK(w.scatter.kind == ScatterCase::WoodsSaxon);
    CHECK(w.scatter.woods_saxon.R == 0.8);
}

TEST_CASE("preset files match the built-in defaults") {
    auto t1 = RunConfig::from_file("presets/table1.json");
    auto t1e = RunConfig::from_json_text(table1_preset());
    CHECK(t1.potential.V0 == t1e.potential.V0);
    CHECK(t1.table1.reference == t1e.table1.reference);
    auto h = RunConfig::from_file("presets/hulthen.json");
    CHECK(h.scatter.hulthen.alpha == 0.4);
    auto w = RunConfig::from_file("presets/woods_saxon.json");
    CHECK(w.scatter.woods_saxon.theta == 1.6);
}

TEST_CASE("unknown keys and invalid values are rejected") {
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"potentials": {}})"), kg::ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"potential": {"VO": 1.0}})"), kg::ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"potential": {"alpha": -0.1}})"),
                    kg::ParameterError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"sweep": {"variable": "W0"}})"),
                    kg::ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text("{"), kg::ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"quantum": [{"n": -1}]})"), kg::ParameterError);
}

TEST_CASE("table1 command writes the report and exits 2 on the documented miss") {
    auto cfg = RunConfig::from_json_text(table1_preset());
    GlobalOptions opt;
    TempFile tmp("test_table1_out.csv");
    opt.out = tmp.path;
    int rc = cmd_table1(cfg, opt);
    CHECK(rc == 2); // reference values are not reproducible from the published set
    auto text = slurp(tmp.path);
    CHECK(count_lines(text) == 10); // header + 9 groups
    CHECK(text.find("n,l,D,E_plus,E_minus,E_plus_ref,E_minus_ref,abs_err_plus,abs_err_minus") == 0);

    // loosened tolerance flips only the exit code
    GlobalOptions loose = opt;
    loose.tol = 0.5;
    CHECK(cmd_table1(cfg, loose) == 0);
}

TEST_CASE("table1 CSV output is deterministic") {
    auto cfg = RunConfig::from_json_text(table1_preset());
    GlobalOptions opt;
    TempFile a("test_table1_a.csv"), b("test_table1_b.csv");
    opt.out = a.path;
    opt.tol = 0.5;
    CHECK(cmd_table1(cfg, opt) == 0);
    opt.out = b.path;
    CHECK(cmd_table1(cfg, opt) == 0);
    CHECK(slurp(a.path) == slurp(b.path));
}

TEST_CASE("sweep command emits one row per sample and quantum tuple") {
    auto cfg = RunConfig::from_json_text(R"({
      "potential": {"V0": 2.0, "V1": 0.5, "S0": 0.0, "S1": 3.0, "q": 1.0, "alpha": 0.01},
      "mass": {"m0": -5.0, "m1": -0.2},
      "quantum": [{"n": 0, "l": 0, "D": 3}, {"n": 1, "l": 0, "D": 3}],
      "sweep": {"variable": "S0", "from": 0.0, "to": 0.2, "samples": 3}
    })");
    GlobalOptions opt;
    TempFile tmp("test_sweep_out.csv");
    opt.out = tmp.path;
    opt.jobs = 2;
    CHECK(cmd_sweep(cfg, opt) == 0);
    auto text = slurp(tmp.path);
    CHECK(count_lines(text) == 1 + 3 * 2);
    CHECK(text.find("S0,n,l,D,E_plus,E_minus,status") == 0);
    CHECK(text.find(",ok") != std::string::npos);
}

TEST_CASE("sweep trend: deeper scalar well lowers both branches") {
    auto cfg = RunConfig::from_json_text(R"({
      "potential": {"V0": 2.0, "V1": 0.5, "S0": 0.0, "S1": 3.0, "q": 1.0, "alpha": 0.01},
      "mass": {"m0": -5.0, "m1": -0.2},
      "quantum": [{"n": 1, "l": 0, "D": 3}],
      "sweep": {"variable": "S0", "from": 0.0, "to": 0.6, "samples": 7}
    })");
    GlobalOptions opt;
    TempFile tmp("test_sweep_trend.csv");
    opt.out = tmp.path;
    CHECK(cmd_sweep(cfg, opt) == 0);
    std::istringstream is(slurp(tmp.path));
    std::string line;
    std::getline(is, line); // header
    double prev = 1e300;
    int rows = 0;
    while (std::getline(is, line)) {
        auto p1 = line.find(',', line.find(',', line.find(',', line.find(',') + 1) + 1) + 1);
        auto p2 = line.find(',', p1 + 1);
        if (p2 == p1 + 1) continue; // no root
        double eplus = std::stod(line.substr(p1 + 1, p2 - p1 - 1));
        CHECK(eplus < prev);
        prev = eplus;
        ++rows;
    }
    CHECK(rows >= 5);
}

TEST_CASE("sweep with no binding emits sentinel rows and exits 0") {
    auto cfg = RunConfig::from_json_text(R"({
      "potential": {"V0": 0.0, "V1": 0.0, "S0": 0.0, "S1": 0.0, "q": 1.0, "alpha": 0.3},
      "mass": {"m0": 1.0, "m1": 0.0},
      "quantum": [{"n": 0, "l": 0, "D": 3}],
      "sweep": {"variable": "S0", "from": 0.0, "to": 0.01, "samples": 3}
    })");
    GlobalOptions opt;
    TempFile tmp("test_sweep_empty.csv");
    opt.out = tmp.path;
    CHECK(cmd_sweep(cfg, opt) == 0);
    auto text = slurp(tmp.path);
    CHECK(text.find("no_root") != std::string::npos);
}

TEST_CASE("scatter command: single row, preset columns, gap rejection") {
    auto cfg = RunConfig::from_json_text(hulthen_preset());
    cfg.scatter.samples = 1;
    cfg.scatter.e_from = 1.3;
    cfg.scatter.oracle = false;
    GlobalOptions opt;
    TempFile tmp("test_scatter_out.csv");
    opt.out = tmp.path;
    CHECK(cmd_scatter(cfg, opt) == 0);
    auto text = slurp(tmp.path);
    CHECK(count_lines(text) == 2);
    CHECK(text.find("E,k,delta_raw,delta_reduced,delta_oracle,N,delta_dedicated,N_dedicated") == 0);

    // a range entirely inside the gap is a usage error
    auto bad = RunConfig::from_json_text(hulthen_preset());
    bad.scatter.e_from = 0.1;
    bad.scatter.e_to = 0.5;
    CHECK(cmd_scatter(bad, opt) == 1);
}

TEST_CASE("verify passes on the default fixture and fails the negative control") {
    auto cfg = RunConfig::from_json_text(table1_preset());
    cfg.quantum.push_back({0, 0, 3});
    GlobalOptions opt;
    TempFile tmp("test_verify.json");
    opt.out = tmp.path;
    CHECK(cmd_verify(cfg, opt) == 0);
    auto text = slurp(tmp.path);
    CHECK(text.find("\"all_pass\": true") != std::string::npos);

    GlobalOptions corrupt = opt;
    corrupt.corrupt_omega = true;
    CHECK(cmd_verify(cfg, corrupt) == 2);
}

TEST_CASE("verify approximation report") {
    auto cfg = RunConfig::from_json_text(table1_preset());
    cfg.quantum.push_back({0, 0, 3});
    GlobalOptions opt;
    opt.report_only = "approximation";
    TempFile tmp("test_approx.csv");
    opt.out = tmp.path;
    CHECK(cmd_verify(cfg, opt) == 0);
    auto text = slurp(tmp.path);
    CHECK(text.find("alpha_r,exact,hyperbolic,greene_aldrich") == 0);
    CHECK(count_lines(text) == 61);
}
