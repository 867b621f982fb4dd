#ifndef OSDMA_EXPERIMENTS_HPP
#define OSDMA_EXPERIMENTS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "osdma/extreme_value.hpp"
#include "osdma/monte_carlo.hpp"
#include "osdma/sinr_model.hpp"
#include "osdma/system.hpp"
#include "osdma/throughput.hpp"

namespace osdma {

enum class Command { simulate, cdf, factors, throughput, compare };

inline std::string command_name(Command c) {
    switch (c) {
        case Command::simulate: return "simulate";
        case Command::cdf: return "cdf";
        case Command::factors: return "factors";
        case Command::throughput: return "throughput";
        case Command::compare: return "compare";
    }
    throw std::invalid_argument("command_name: unknown command");
}

/// Resolved experiment description. Vectors are normalized (sorted,
/// deduplicated) at run time so row order never depends on flag order.
struct ExperimentSpec {
    Command command = Command::simulate;
    std::vector<Combiner> combiners = {Combiner::SC, Combiner::MRC, Combiner::OC};
    std::vector<std::size_t> user_counts = {256};
    std::vector<double> snrs = {1.0};
    std::vector<Method> methods = {Method::monte_carlo, Method::exact_quadrature,
                                   Method::asymptotic_numeric, Method::asymptotic_approx};
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::string out_path;
    std::size_t tx_antennas = 4;
    std::size_t rx_antennas = 2;
};

// ---- flag-value parsing helpers (shared by the CLI and its tests) ----

/// "sc", "mrc", "oc" or "all".
inline std::vector<Combiner> parse_combiner_list(const std::string& text) {
    if (text == "all") return {Combiner::SC, Combiner::MRC, Combiner::OC};
    return {parse_combiner(text)};
}

/// Either a single integer or a geometric range "start:stop:xN" (N >= 2,
/// default x2), e.g. "16:1024:x2" -> 16, 32, ..., 1024.
inline std::vector<std::size_t> parse_user_counts(const std::string& text) {
    const auto to_count = [](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_user_counts: not a count: '" + s + "'");
        }
        if (pos != s.size() || v < 1)
            throw std::invalid_argument("parse_user_counts: not a positive count: '" + s + "'");
        return static_cast<std::size_t>(v);
    };

    const auto first_colon = text.find(':');
    if (first_colon == std::string::npos) return {to_count(text)};

    const auto second_colon = text.find(':', first_colon + 1);
    const std::string start_s = text.substr(0, first_colon);
    const std::string stop_s = second_colon == std::string::npos
                                   ? text.substr(first_colon + 1)
                                   : text.substr(first_colon + 1, second_colon - first_colon - 1);
    std::size_t multiplier = 2;
    if (second_colon != std::string::npos) {
        const std::string mult_s = text.substr(second_colon + 1);
        if (mult_s.size() < 2 || mult_s[0] != 'x')
            throw std::invalid_argument("parse_user_counts: range step must look like 'x2'");
        multiplier = to_count(mult_s.substr(1));
        if (multiplier < 2) throw std::invalid_argument("parse_user_counts: multiplier must be >= 2");
    }
    const std::size_t start = to_count(start_s), stop = to_count(stop_s);
    if (stop < start) throw std::invalid_argument("parse_user_counts: range stop below start");
    std::vector<std::size_t> counts;
    for (std::size_t k = start; k <= stop; k *= multiplier) {
        counts.push_back(k);
        if (k > stop / multiplier) break;  // overflow guard
    }
    return counts;
}

/// Comma-separated list of positive reals, e.g. "1,5".
inline std::vector<double> parse_snr_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_snr_list: not a number: '" + item + "'");
        }
        if (pos != item.size() || !(v > 0.0))
            throw std::invalid_argument("parse_snr_list: SNR values must be positive: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("parse_snr_list: empty list");
    return out;
}

/// "mc", "exact", "asymptotic", "approx" or "all".
inline std::vector<Method> parse_method_list(const std::string& text) {
    if (text == "all")
        return {Method::monte_carlo, Method::exact_quadrature, Method::asymptotic_numeric,
                Method::asymptotic_approx};
    if (text == "mc") return {Method::monte_carlo};
    if (text == "exact") return {Method::exact_quadrature};
    if (text == "asymptotic") return {Method::asymptotic_numeric};
    if (text == "approx") return {Method::asymptotic_approx};
    throw std::invalid_argument("parse_method_list: expected mc|exact|asymptotic|approx|all, got '" +
                                text + "'");
}

namespace detail {

inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline int combiner_rank(Combiner c) {
    switch (c) {
        case Combiner::SC: return 0;
        case Combiner::MRC: return 1;
        case Combiner::OC: return 2;
    }
    return 3;
}

inline int method_rank(Method m) {
    switch (m) {
        case Method::monte_carlo: return 0;
        case Method::exact_quadrature: return 1;
        case Method::asymptotic_numeric: return 2;
        case Method::asymptotic_approx: return 3;
    }
    return 4;
}

template <class T, class Rank>
void sort_unique(std::vector<T>& v, Rank rank) {
    std::sort(v.begin(), v.end(), [&](const T& a, const T& b) { return rank(a) < rank(b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline ExperimentSpec normalized(ExperimentSpec spec) {
    if (spec.combiners.empty()) throw std::invalid_argument("run: no combiners selected");
    if (spec.user_counts.empty()) throw std::invalid_argument("run: no user counts selected");
    if (spec.snrs.empty()) throw std::invalid_argument("run: no SNR values selected");
    if (spec.methods.empty()) throw std::invalid_argument("run: no methods selected");
    if (spec.trials < 1) throw std::invalid_argument("run: trials must be >= 1");
    if (spec.out_path.empty()) throw std::invalid_argument("run: output path is empty");
    sort_unique(spec.combiners, combiner_rank);
    sort_unique(spec.user_counts, [](std::size_t k) { return k; });
    sort_unique(spec.snrs, [](double r) { return r; });
    sort_unique(spec.methods, method_rank);
    return spec;
}

/// Canonical one-line record of the resolved spec; embedded as the CSV
/// comment so a file identifies the run that produced it.
inline std::string spec_comment(const ExperimentSpec& spec) {
    std::string line = "# osdma " + command_name(spec.command);
    line += " combiners=";
    for (std::size_t i = 0; i < spec.combiners.size(); ++i)
        line += (i ? "," : "") + combiner_name(spec.combiners[i]);
    if (spec.command != Command::cdf) {
        line += " users=";
        for (std::size_t i = 0; i < spec.user_counts.size(); ++i)
            line += (i ? "," : "") + std::to_string(spec.user_counts[i]);
    }
    line += " rho=";
    for (std::size_t i = 0; i < spec.snrs.size(); ++i) line += (i ? "," : "") + fmt_g(spec.snrs[i]);
    if (spec.command == Command::throughput || spec.command == Command::compare) {
        line += " methods=";
        for (std::size_t i = 0; i < spec.methods.size(); ++i)
            line += (i ? "," : "") + method_name(spec.methods[i]);
    }
    const bool uses_trials = spec.command == Command::simulate ||
                             spec.command == Command::throughput || spec.command == Command::compare;
    if (uses_trials)
        line += " trials=" + std::to_string(spec.trials) + " seed=" + std::to_string(spec.seed);
    line += " tx=" + std::to_string(spec.tx_antennas) + " rx=" + std::to_string(spec.rx_antennas);
    return line;
}

/// Characteristic-equation residual |K (1 - F(b)) - 1| reported in factor
/// rows; measures how well a location factor solves 1 - F(b) = 1/K.
inline double location_residual(const SinrModel& model, double location, std::size_t users) {
    return std::abs(static_cast<double>(users) * model.survival(location) - 1.0);
}

struct MonteCarloCache {
    std::map<std::pair<double, std::size_t>, std::array<ThroughputEstimate, 3>> runs;

    const ThroughputEstimate& get(const ExperimentSpec& spec, double snr, std::size_t users,
                                  Combiner combiner) {
        const auto key = std::make_pair(snr, users);
        auto it = runs.find(key);
        if (it == runs.end()) {
            const SystemConfig cfg(spec.tx_antennas, spec.rx_antennas, users, snr);
            it = runs.emplace(key, simulate_sum_rate_all(cfg, spec.trials, spec.seed)).first;
        }
        return it->second[static_cast<std::size_t>(combiner_rank(combiner))];
    }
};

inline void emit_throughput_rows(const ExperimentSpec& spec, std::vector<std::string>& rows) {
    MonteCarloCache cache;
    for (const Combiner combiner : spec.combiners) {
        for (const double snr : spec.snrs) {
            const SinrModel model(combiner, snr, spec.tx_antennas, spec.rx_antennas);
            for (const std::size_t users : spec.user_counts) {
                for (const Method method : spec.methods) {
                    ThroughputEstimate est;
                    if (method == Method::monte_carlo) {
                        est = cache.get(spec, snr, users, combiner);
                    } else if (method == Method::exact_quadrature) {
                        est = exact_throughput(model, users, spec.tx_antennas);
                    } else if (method == Method::asymptotic_numeric) {
                        if (users < 2) continue;
                        est = asymptotic_throughput(model, solve_factors(model, users));
                    } else {
                        if (snr != 1.0) continue;  // closed-form factors exist at rho=1 only
                        NormalizingFactors factors;
                        try {
                            factors = approx_factors(combiner, users);
                        } catch (const std::invalid_argument&) {
                            continue;  // K below the formula's domain
                        }
                        est = asymptotic_throughput(model, factors);
                    }
                    rows.push_back(combiner_name(combiner) + "," + fmt_g(snr) + "," +
                                   std::to_string(users) + "," + method_name(est.method) + "," +
                                   fmt_g(est.value) + "," + fmt_g(est.std_error));
                }
            }
        }
    }
    if (rows.empty())
        throw std::invalid_argument(
            "throughput: no defined (method, rho, K) combination (approx factors need rho = 1)");
}

}  // namespace detail

/// Runs one experiment, writes its CSV, prints a one-line summary, and
/// returns the data row count. Identical specs produce byte-identical
/// files: rows are emitted in sorted (combiner, rho, K, method) order and
/// all randomness is derived from the spec's seed.
inline std::size_t run_experiment(const ExperimentSpec& raw_spec, std::ostream& summary) {
    const ExperimentSpec spec = detail::normalized(raw_spec);

    // fail on an unwritable path before any expensive computation
    std::ofstream out(spec.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("run: cannot open output file '" + spec.out_path + "'");

    std::string header;
    std::vector<std::string> rows;

    switch (spec.command) {
        case Command::simulate: {
            header = "combiner,M,N,K,rho,trials,seed,mean_sum_rate,stderr";
            detail::MonteCarloCache cache;
            for (const Combiner combiner : spec.combiners)
                for (const double snr : spec.snrs)
                    for (const std::size_t users : spec.user_counts) {
                        const ThroughputEstimate est = cache.get(spec, snr, users, combiner);
                        rows.push_back(combiner_name(combiner) + "," +
                                       std::to_string(spec.tx_antennas) + "," +
                                       std::to_string(spec.rx_antennas) + "," +
                                       std::to_string(users) + "," + detail::fmt_g(snr) + "," +
                                       std::to_string(spec.trials) + "," +
                                       std::to_string(spec.seed) + "," + detail::fmt_g(est.value) +
                                       "," + detail::fmt_g(est.std_error));
                    }
            break;
        }
        case Command::cdf: {
            header = "combiner,rho,x,F,f";
            for (const Combiner combiner : spec.combiners)
                for (const double snr : spec.snrs) {
                    const SinrModel model(combiner, snr, spec.tx_antennas, spec.rx_antennas);
                    for (const double x : evaluation_grid(snr))
                        rows.push_back(combiner_name(combiner) + "," + detail::fmt_g(snr) + "," +
                                       detail::fmt_g(x) + "," + detail::fmt_g(model.cdf(x)) + "," +
                                       detail::fmt_g(model.pdf(x)));
                }
            break;
        }
        case Command::factors: {
            header = "combiner,rho,K,method,a_K,b_K,residual";
            for (const Combiner combiner : spec.combiners)
                for (const double snr : spec.snrs) {
                    const SinrModel model(combiner, snr, spec.tx_antennas, spec.rx_antennas);
                    for (const std::size_t users : spec.user_counts) {
                        if (users < 2) continue;
                        const std::string prefix = combiner_name(combiner) + "," +
                                                   detail::fmt_g(snr) + "," + std::to_string(users);
                        const NormalizingFactors numeric = solve_factors(model, users);
                        rows.push_back(prefix + ",numeric," + detail::fmt_g(numeric.scale) + "," +
                                       detail::fmt_g(numeric.location) + "," +
                                       detail::fmt_g(detail::location_residual(
                                           model, numeric.location, users)));
                        if (snr == 1.0) {
                            try {
                                const NormalizingFactors approx = approx_factors(combiner, users);
                                rows.push_back(prefix + ",approx_rho1," +
                                               detail::fmt_g(approx.scale) + "," +
                                               detail::fmt_g(approx.location) + "," +
                                               detail::fmt_g(detail::location_residual(
                                                   model, approx.location, users)));
                            } catch (const std::invalid_argument&) {
                                // K below the closed form's domain: numeric row only
                            }
                        }
                    }
                }
            if (rows.empty()) throw std::invalid_argument("factors: need K >= 2");
            break;
        }
        case Command::throughput:
        case Command::compare: {
            header = "combiner,rho,K,method,value,stderr";
            ExperimentSpec full = spec;
            if (spec.command == Command::compare)
                full.methods = {Method::monte_carlo, Method::exact_quadrature,
                                Method::asymptotic_numeric, Method::asymptotic_approx};
            detail::emit_throughput_rows(full, rows);
            break;
        }
    }

    out << detail::spec_comment(spec) << '\n' << header << '\n';
    for (const std::string& row : rows) out << row << '\n';
    out.flush();
    if (!out) throw std::runtime_error("run: write failed for '" + spec.out_path + "'");

    summary << command_name(spec.command) << ": wrote " << rows.size() << " rows to "
            << spec.out_path << '\n';
    return rows.size();
}

}  // namespace osdma

#endif  // OSDMA_EXPERIMENTS_HPP
