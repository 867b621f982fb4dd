#ifndef OSDMA_SCHEDULE_HPP
#define OSDMA_SCHEDULE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "osdma/combining.hpp"
#include "osdma/linalg.hpp"
#include "osdma/system.hpp"

namespace osdma {

/// Effective SINR of every user on every beam for one slot.
struct SinrTable {
    std::size_t users = 0;
    std::size_t beams = 0;
    std::vector<double> sinr;  // row-major, users x beams

    SinrTable() = default;
    SinrTable(std::size_t k, std::size_t m) : users(k), beams(m), sinr(k * m) {}

    double& at(std::size_t user, std::size_t beam) { return sinr[user * beams + beam]; }
    double at(std::size_t user, std::size_t beam) const { return sinr[user * beams + beam]; }
};

inline SinrTable build_sinr_table(Combiner combiner, const std::vector<CMatrix>& user_gains,
                                  double snr) {
    if (user_gains.empty()) throw std::invalid_argument("build_sinr_table: no users");
    const std::size_t beams = user_gains.front().cols();
    SinrTable table(user_gains.size(), beams);
    for (std::size_t k = 0; k < user_gains.size(); ++k)
        for (std::size_t m = 0; m < beams; ++m)
            table.at(k, m) = effective_sinr(combiner, user_gains[k], m, snr);
    return table;
}

/// Per-beam winner and the slot sum-rate.
struct ScheduleResult {
    std::vector<std::size_t> winner;  // user index per beam
    std::vector<double> peak_sinr;    // max_k sinr(k, m) per beam
    double sum_rate = 0.0;            // sum_m log2(1 + peak_sinr[m]), bits/s/Hz
};

/// Assigns each beam to the user with the largest effective SINR on it.
/// Ties break toward the lowest user index. A user may win several beams;
/// each beam's rate is counted independently.
inline ScheduleResult schedule(const SinrTable& table) {
    if (table.users == 0 || table.beams == 0)
        throw std::invalid_argument("schedule: empty SINR table");
    ScheduleResult result;
    result.winner.resize(table.beams);
    result.peak_sinr.resize(table.beams);
    for (std::size_t m = 0; m < table.beams; ++m) {
        std::size_t best_user = 0;
        double best = table.at(0, m);
        for (std::size_t k = 1; k < table.users; ++k) {
            const double v = table.at(k, m);
            if (v > best) {
                best = v;
                best_user = k;
            }
        }
        result.winner[m] = best_user;
        result.peak_sinr[m] = best;
        result.sum_rate += std::log2(1.0 + best);
    }
    return result;
}

}  // namespace osdma

#endif  // OSDMA_SCHEDULE_HPP
