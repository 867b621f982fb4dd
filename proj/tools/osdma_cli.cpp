// Command-line front end: deterministic experiment runs emitting CSV.
//
// Subcommands: simulate, cdf, factors, throughput, compare.
// Exit codes: 0 success, 1 numeric/runtime failure, 2 usage error.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "osdma/experiments.hpp"

namespace {

struct RawFlags {
    std::string combiner = "all";
    std::string users = "256";
    std::string rho = "1";
    std::string method = "all";
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::string out;
};

void add_common_flags(CLI::App* cmd, RawFlags& flags, bool with_method, bool with_trials) {
    cmd->add_option("--combiner", flags.combiner, "Combining technique: sc|mrc|oc|all")
        ->default_val(flags.combiner);
    cmd->add_option("--users", flags.users,
                    "User count: an integer or a geometric range start:stop:x2")
        ->default_val(flags.users);
    cmd->add_option("--rho", flags.rho, "Average SNR values (linear), comma separated")
        ->default_val(flags.rho);
    if (with_method)
        cmd->add_option("--method", flags.method, "Estimator: mc|exact|asymptotic|approx|all")
            ->default_val(flags.method);
    if (with_trials) {
        cmd->add_option("--trials", flags.trials, "Monte Carlo trials")->default_val(flags.trials);
        cmd->add_option("--seed", flags.seed, "Root RNG seed")->default_val(flags.seed);
    }
    cmd->add_option("--out", flags.out, "Output CSV path (default <command>.csv)");
}

osdma::ExperimentSpec to_spec(osdma::Command command, const RawFlags& flags) {
    osdma::ExperimentSpec spec;
    spec.command = command;
    spec.combiners = osdma::parse_combiner_list(flags.combiner);
    spec.user_counts = osdma::parse_user_counts(flags.users);
    spec.snrs = osdma::parse_snr_list(flags.rho);
    spec.methods = osdma::parse_method_list(flags.method);
    spec.trials = flags.trials;
    spec.seed = flags.seed;
    spec.out_path = flags.out.empty() ? osdma::command_name(command) + ".csv" : flags.out;
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Opportunistic MIMO-SDMA downlink: simulation and analytic throughput tools"};
    app.require_subcommand(1);

    RawFlags simulate_flags, cdf_flags, factors_flags, throughput_flags, compare_flags;
    factors_flags.users = "100";

    add_common_flags(app.add_subcommand("simulate", "Monte Carlo average sum-rate"),
                     simulate_flags, false, true);
    add_common_flags(app.add_subcommand("cdf", "Effective-SINR CDF/PDF on the evaluation grid"),
                     cdf_flags, false, false);
    add_common_flags(app.add_subcommand("factors", "Gumbel normalizing factors (numeric + rho=1 form)"),
                     factors_flags, false, false);
    add_common_flags(app.add_subcommand("throughput", "Throughput by the selected estimators"),
                     throughput_flags, true, true);
    add_common_flags(app.add_subcommand("compare", "All estimators side by side on a user-count sweep"),
                     compare_flags, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        osdma::ExperimentSpec spec;
        if (app.got_subcommand("simulate")) spec = to_spec(osdma::Command::simulate, simulate_flags);
        else if (app.got_subcommand("cdf")) spec = to_spec(osdma::Command::cdf, cdf_flags);
        else if (app.got_subcommand("factors")) spec = to_spec(osdma::Command::factors, factors_flags);
        else if (app.got_subcommand("throughput"))
            spec = to_spec(osdma::Command::throughput, throughput_flags);
        else spec = to_spec(osdma::Command::compare, compare_flags);
        osdma::run_experiment(spec, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
