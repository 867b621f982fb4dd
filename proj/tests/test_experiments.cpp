#include <catch2/catch.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "osdma/experiments.hpp"

using namespace osdma;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

struct TempCsv {
    std::string path;
    explicit TempCsv(const std::string& name) : path("osdma_test_" + name + ".csv") {}
    ~TempCsv() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("user count parsing") {
    REQUIRE(parse_user_counts("100") == std::vector<std::size_t>{100});
    REQUIRE(parse_user_counts("16:128:x2") == std::vector<std::size_t>{16, 32, 64, 128});
    REQUIRE(parse_user_counts("16:100:x2") == std::vector<std::size_t>{16, 32, 64});
    REQUIRE(parse_user_counts("3:81:x3") == std::vector<std::size_t>{3, 9, 27, 81});
    REQUIRE(parse_user_counts("8:8") == std::vector<std::size_t>{8});
    REQUIRE_THROWS_AS(parse_user_counts("0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_user_counts("ten"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_user_counts("16:8:x2"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_user_counts("16:32:y2"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_user_counts("16:32:x1"), std::invalid_argument);
}

TEST_CASE("snr list parsing") {
    REQUIRE(parse_snr_list("1") == std::vector<double>{1.0});
    REQUIRE(parse_snr_list("1,5") == std::vector<double>{1.0, 5.0});
    REQUIRE_THROWS_AS(parse_snr_list("0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_snr_list("-2"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_snr_list("abc"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_snr_list(""), std::invalid_argument);
}

TEST_CASE("combiner and method parsing") {
    REQUIRE(parse_combiner_list("all").size() == 3);
    REQUIRE(parse_combiner_list("mrc") == std::vector<Combiner>{Combiner::MRC});
    REQUIRE_THROWS_AS(parse_combiner_list("zf"), std::invalid_argument);
    REQUIRE(parse_method_list("all").size() == 4);
    REQUIRE(parse_method_list("mc") == std::vector<Method>{Method::monte_carlo});
    REQUIRE(parse_method_list("approx") == std::vector<Method>{Method::asymptotic_approx});
    REQUIRE_THROWS_AS(parse_method_list("magic"), std::invalid_argument);
}

TEST_CASE("simulate emits one row per grid point with the documented schema") {
    TempCsv csv("simulate");
    ExperimentSpec spec;
    spec.command = Command::simulate;
    spec.combiners = {Combiner::OC};
    spec.user_counts = {8};
    spec.snrs = {1.0};
    spec.trials = 50;
    spec.seed = 7;
    spec.out_path = csv.path;

    std::ostringstream summary;
    REQUIRE(run_experiment(spec, summary) == 1);
    REQUIRE(summary.str().find("wrote 1 rows") != std::string::npos);

    const auto lines = lines_of(slurp(csv.path));
    REQUIRE(lines.size() == 3);
    REQUIRE(lines[0].rfind("# osdma simulate", 0) == 0);
    REQUIRE(lines[0].find("seed=7") != std::string::npos);
    REQUIRE(lines[1] == "combiner,M,N,K,rho,trials,seed,mean_sum_rate,stderr");
    REQUIRE(lines[2].rfind("oc,4,2,8,1,50,7,", 0) == 0);
}

TEST_CASE("compare output is byte-identical across reruns and sorted") {
    TempCsv csv_a("compare_a"), csv_b("compare_b");
    ExperimentSpec spec;
    spec.command = Command::compare;
    spec.user_counts = parse_user_counts("4:8:x2");
    spec.snrs = {5.0, 1.0};  // intentionally unsorted
    spec.trials = 60;
    spec.seed = 11;

    spec.out_path = csv_a.path;
    std::ostringstream sink_a, sink_b;
    const std::size_t rows_a = run_experiment(spec, sink_a);
    spec.out_path = csv_b.path;
    const std::size_t rows_b = run_experiment(spec, sink_b);
    REQUIRE(rows_a == rows_b);
    REQUIRE(slurp(csv_a.path) == slurp(csv_b.path));

    // rho=5 has no approx rows (3 methods x 2 K x 3 combiners = 18);
    // rho=1 has all four except SC at K=4, whose closed form is negative
    // and therefore skipped (4 x 2 x 3 - 1 = 23)
    REQUIRE(rows_a == 41);

    const auto lines = lines_of(slurp(csv_a.path));
    REQUIRE(lines[1] == "combiner,rho,K,method,value,stderr");
    // combiner-major order with rho ascending inside
    REQUIRE(lines[2].rfind("sc,1,4,monte_carlo,", 0) == 0);
    REQUIRE(lines[3].rfind("sc,1,4,exact_quadrature,", 0) == 0);
    std::size_t first_mrc = 0, first_oc = 0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (!first_mrc && lines[i].rfind("mrc,", 0) == 0) first_mrc = i;
        if (!first_oc && lines[i].rfind("oc,", 0) == 0) first_oc = i;
    }
    REQUIRE(first_mrc > 2);
    REQUIRE(first_oc > first_mrc);
}

TEST_CASE("factors emits numeric rows always and approx rows at rho=1") {
    TempCsv csv("factors");
    ExperimentSpec spec;
    spec.command = Command::factors;
    spec.combiners = {Combiner::SC};
    spec.user_counts = {100};
    spec.snrs = {1.0, 5.0};
    spec.out_path = csv.path;

    std::ostringstream sink;
    REQUIRE(run_experiment(spec, sink) == 3);  // numeric@1, approx@1, numeric@5
    const auto lines = lines_of(slurp(csv.path));
    REQUIRE(lines[1] == "combiner,rho,K,method,a_K,b_K,residual");
    REQUIRE(lines[2].rfind("sc,1,100,numeric,", 0) == 0);
    REQUIRE(lines[3].rfind("sc,1,100,approx_rho1,1,1.61775234045,", 0) == 0);
    REQUIRE(lines[4].rfind("sc,5,100,numeric,", 0) == 0);

    // numeric row reports the b_K residual, which must sit at the solver
    // tolerance; the approx row records the closed form's actual gap
    const auto residual_of = [](const std::string& line) {
        return std::stod(line.substr(line.rfind(',') + 1));
    };
    REQUIRE(residual_of(lines[2]) <= 1e-12);
    REQUIRE(residual_of(lines[3]) > 0.01);
}

TEST_CASE("cdf command walks the documented grid") {
    TempCsv csv("cdf");
    ExperimentSpec spec;
    spec.command = Command::cdf;
    spec.combiners = {Combiner::MRC};
    spec.snrs = {1.0};
    spec.out_path = csv.path;

    std::ostringstream sink;
    REQUIRE(run_experiment(spec, sink) == 400);
    const auto lines = lines_of(slurp(csv.path));
    REQUIRE(lines[1] == "combiner,rho,x,F,f");
    REQUIRE(lines[2].rfind("mrc,1,0.0001,", 0) == 0);
}

TEST_CASE("invalid specs are rejected up front") {
    ExperimentSpec spec;
    spec.out_path = "unused.csv";
    spec.user_counts.clear();
    std::ostringstream sink;
    REQUIRE_THROWS_AS(run_experiment(spec, sink), std::invalid_argument);

    ExperimentSpec no_out;
    no_out.out_path = "";
    REQUIRE_THROWS_AS(run_experiment(no_out, sink), std::invalid_argument);

    ExperimentSpec zero_trials;
    zero_trials.out_path = "unused.csv";
    zero_trials.trials = 0;
    REQUIRE_THROWS_AS(run_experiment(zero_trials, sink), std::invalid_argument);
}

TEST_CASE("unwritable output paths raise a runtime error") {
    ExperimentSpec spec;
    spec.command = Command::factors;
    spec.user_counts = {16};
    spec.out_path = "no_such_dir_osdma/factors.csv";
    std::ostringstream sink;
    REQUIRE_THROWS_AS(run_experiment(spec, sink), std::runtime_error);
}

TEST_CASE("approx-only throughput off rho=1 has nothing to report") {
    TempCsv csv("approx_only");
    ExperimentSpec spec;
    spec.command = Command::throughput;
    spec.methods = {Method::asymptotic_approx};
    spec.snrs = {5.0};
    spec.user_counts = {128};
    spec.out_path = csv.path;
    std::ostringstream sink;
    REQUIRE_THROWS_AS(run_experiment(spec, sink), std::invalid_argument);
}
