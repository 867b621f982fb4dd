#ifndef OSDMA_MONTE_CARLO_HPP
#define OSDMA_MONTE_CARLO_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "osdma/channel.hpp"
#include "osdma/combining.hpp"
#include "osdma/estimate.hpp"
#include "osdma/rng.hpp"
#include "osdma/schedule.hpp"
#include "osdma/system.hpp"

namespace osdma {

namespace detail {

/// One slot: fresh beams, then K fresh channels, consumed from the stream
/// in that order. Per-beam maxima are tracked while streaming over users,
/// which matches schedule() on the full table without materializing it.
/// Several combiners can share one slot's draws; each entry of `rates`
/// receives the slot sum-rate of the matching combiner.
inline void slot_sum_rates(const SystemConfig& cfg, std::span<const Combiner> combiners,
                           RandomStream& rng, std::span<double> rates) {
    const std::size_t beams = cfg.tx_antennas;
    const BeamMatrix beam_matrix = draw_beams(beams, rng);

    std::vector<double> peak(combiners.size() * beams, 0.0);
    for (std::size_t k = 0; k < cfg.users; ++k) {
        const ChannelRealization channel = draw_channel(cfg, rng);
        const CMatrix gains = effective_gains(channel, beam_matrix);
        for (std::size_t c = 0; c < combiners.size(); ++c) {
            for (std::size_t m = 0; m < beams; ++m) {
                const double v = effective_sinr(combiners[c], gains, m, cfg.avg_snr);
                double& best = peak[c * beams + m];
                if (v > best) best = v;
            }
        }
    }
    for (std::size_t c = 0; c < combiners.size(); ++c) {
        double rate = 0.0;
        for (std::size_t m = 0; m < beams; ++m) rate += std::log2(1.0 + peak[c * beams + m]);
        rates[c] = rate;
    }
}

inline ThroughputEstimate summarize(const std::vector<double>& values) {
    const std::size_t n = values.size();
    double sum = 0.0;
    for (const double v : values) sum += v;  // fixed index order
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    const double std_error =
        n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n)) : 0.0;
    return {mean, Method::monte_carlo, 0, std_error, 0.0};
}

template <std::size_t NC>
inline std::array<ThroughputEstimate, NC> run_trials(const SystemConfig& cfg,
                                                     const std::array<Combiner, NC>& combiners,
                                                     std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("simulate_sum_rate: need at least one trial");

    std::vector<std::array<double, NC>> rates(trials);
    const auto worker = [&](std::size_t first, std::size_t last) {
        for (std::size_t t = first; t < last; ++t) {
            RandomStream rng(seed, t);  // stream indexed by trial
            slot_sum_rates(cfg, combiners, rng, rates[t]);
        }
    };

    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t num_threads = std::min({hw, trials, std::size_t{16}});
    if (num_threads <= 1) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(num_threads);
        const std::size_t chunk = (trials + num_threads - 1) / num_threads;
        for (std::size_t i = 0; i < num_threads; ++i)
            pool.emplace_back(worker, i * chunk, std::min(trials, (i + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    std::array<ThroughputEstimate, NC> out;
    std::vector<double> column(trials);
    for (std::size_t c = 0; c < NC; ++c) {
        for (std::size_t t = 0; t < trials; ++t) column[t] = rates[t][c];
        out[c] = summarize(column);
        out[c].users = cfg.users;
    }
    return out;
}

}  // namespace detail

/// Monte Carlo average sum-rate. Deterministic in (cfg, combiner, trials,
/// seed); trial t always consumes stream (seed, t), so runs with the same
/// seed see identical channel and beam draws regardless of combiner or
/// thread count.
inline ThroughputEstimate simulate_sum_rate(const SystemConfig& cfg, Combiner combiner,
                                            std::size_t trials, std::uint64_t seed) {
    return detail::run_trials<1>(cfg, {combiner}, trials, seed)[0];
}

/// All three combiners evaluated on shared draws; entry order SC, MRC, OC.
/// Each entry is bitwise identical to the matching single-combiner run.
inline std::array<ThroughputEstimate, 3> simulate_sum_rate_all(const SystemConfig& cfg,
                                                               std::size_t trials,
                                                               std::uint64_t seed) {
    return detail::run_trials<3>(cfg, {Combiner::SC, Combiner::MRC, Combiner::OC}, trials, seed);
}

}  // namespace osdma

#endif  // OSDMA_MONTE_CARLO_HPP
