#ifndef OSDMA_SYSTEM_HPP
#define OSDMA_SYSTEM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace osdma {

/// Linear combining technique applied at the receiver.
enum class Combiner { SC, MRC, OC };

inline constexpr Combiner all_combiners[] = {Combiner::SC, Combiner::MRC, Combiner::OC};

inline std::string combiner_name(Combiner c) {
    switch (c) {
        case Combiner::SC: return "sc";
        case Combiner::MRC: return "mrc";
        case Combiner::OC: return "oc";
    }
    throw std::invalid_argument("combiner_name: unknown combiner");
}

inline Combiner parse_combiner(std::string_view s) {
    if (s == "sc") return Combiner::SC;
    if (s == "mrc") return Combiner::MRC;
    if (s == "oc") return Combiner::OC;
    throw std::invalid_argument("parse_combiner: expected sc|mrc|oc, got '" + std::string(s) + "'");
}

/// Downlink system dimensions and the common average-SNR constant (linear
/// scale). Per-user SNR is homogeneous. Requires N <= M.
struct SystemConfig {
    std::size_t tx_antennas;  // M
    std::size_t rx_antennas;  // N
    std::size_t users;        // K
    double avg_snr;           // rho

    SystemConfig(std::size_t tx, std::size_t rx, std::size_t num_users, double snr)
        : tx_antennas(tx), rx_antennas(rx), users(num_users), avg_snr(snr) {
        if (tx < 1) throw std::invalid_argument("SystemConfig: need at least one transmit antenna");
        if (rx < 1) throw std::invalid_argument("SystemConfig: need at least one receive antenna");
        if (rx > tx) throw std::invalid_argument("SystemConfig: receive antennas must not exceed transmit antennas");
        if (num_users < 1) throw std::invalid_argument("SystemConfig: need at least one user");
        if (!(snr > 0.0)) throw std::invalid_argument("SystemConfig: average SNR must be positive");
    }
};

}  // namespace osdma

#endif  // OSDMA_SYSTEM_HPP
