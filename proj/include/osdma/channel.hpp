#ifndef OSDMA_CHANNEL_HPP
#define OSDMA_CHANNEL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "osdma/linalg.hpp"
#include "osdma/rng.hpp"
#include "osdma/system.hpp"

namespace osdma {

/// One user's N x M channel matrix for one slot. Entries are i.i.d.
/// circularly-symmetric complex Gaussian with unit variance (Rayleigh
/// amplitudes). Receiver noise is CN(0, I_N) and is carried implicitly as
/// the "1" in the SINR denominators.
struct ChannelRealization {
    CMatrix h;  // N x M
};

/// M x M unitary beamforming matrix; columns are the transmit beams.
struct BeamMatrix {
    CMatrix a;  // M x M, A^H A = I
};

/// Draws a fresh channel. Entries are consumed from the stream in row-major
/// order, one complex Gaussian per entry.
inline ChannelRealization draw_channel(const SystemConfig& cfg, RandomStream& rng) {
    CMatrix h(cfg.rx_antennas, cfg.tx_antennas);
    for (std::size_t n = 0; n < cfg.rx_antennas; ++n)
        for (std::size_t m = 0; m < cfg.tx_antennas; ++m) h(n, m) = rng.complex_gaussian();
    return {std::move(h)};
}

/// Haar-distributed unitary M x M matrix: a complex Gaussian matrix
/// (row-major draw order) orthonormalized column-by-column with modified
/// Gram-Schmidt. Normalizing by the real positive column norm fixes the
/// phase convention, so the result is a deterministic function of the
/// stream state. A second orthogonalization pass keeps ||A^H A - I||_max
/// well below 1e-12.
inline BeamMatrix draw_beams(std::size_t num_beams, RandomStream& rng) {
    if (num_beams < 1) throw std::invalid_argument("draw_beams: need at least one beam");
    const std::size_t m = num_beams;
    CMatrix a(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) a(r, c) = rng.complex_gaussian();

    for (std::size_t j = 0; j < m; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                cplx proj(0.0, 0.0);
                for (std::size_t r = 0; r < m; ++r) proj += std::conj(a(r, i)) * a(r, j);
                for (std::size_t r = 0; r < m; ++r) a(r, j) -= proj * a(r, i);
            }
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < m; ++r) norm2 += std::norm(a(r, j));
        const double norm = std::sqrt(norm2);
        if (!(norm > 0.0)) throw std::runtime_error("draw_beams: degenerate Gaussian draw");
        for (std::size_t r = 0; r < m; ++r) a(r, j) /= norm;
    }
    return {std::move(a)};
}

/// Effective per-beam channel G = H * A; column m is the channel seen on
/// beam m after beamforming.
inline CMatrix effective_gains(const ChannelRealization& channel, const BeamMatrix& beams) {
    if (channel.h.cols() != beams.a.rows())
        throw std::invalid_argument("effective_gains: channel/beam dimensions differ");
    return channel.h * beams.a;
}

}  // namespace osdma

#endif  // OSDMA_CHANNEL_HPP
