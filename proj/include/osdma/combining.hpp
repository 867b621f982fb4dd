#ifndef OSDMA_COMBINING_HPP
#define OSDMA_COMBINING_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "osdma/linalg.hpp"
#include "osdma/system.hpp"

namespace osdma {

namespace detail {

inline void check_beam_index(const CMatrix& gains, std::size_t beam) {
    if (beam >= gains.cols()) throw std::out_of_range("effective SINR: beam index out of range");
}

}  // namespace detail

/// Selection combining: best single receive antenna for the beam.
/// Per antenna n: snr*|g_nm|^2 / (1 + snr * sum_{j != m} |g_nj|^2).
inline double sinr_sc(const CMatrix& gains, std::size_t beam, double snr) {
    detail::check_beam_index(gains, beam);
    double best = 0.0;
    for (std::size_t n = 0; n < gains.rows(); ++n) {
        double desired = 0.0, total = 0.0;
        for (std::size_t j = 0; j < gains.cols(); ++j) {
            const double p = std::norm(gains(n, j));
            total += p;
            if (j == beam) desired = p;
        }
        const double value = snr * desired / (1.0 + snr * (total - desired));
        if (value > best) best = value;
    }
    return best;
}

/// Maximum ratio combining with weights matched to the desired beam:
/// snr*||g_m||^4 / (||g_m||^2 + snr * sum_{j != m} |g_m^H g_j|^2).
/// Interference is measured after projection onto the MRC weight.
/// An all-zero desired column returns 0.
inline double sinr_mrc(const CMatrix& gains, std::size_t beam, double snr) {
    detail::check_beam_index(gains, beam);
    const std::size_t rx = gains.rows();
    double desired2 = 0.0;
    for (std::size_t n = 0; n < rx; ++n) desired2 += std::norm(gains(n, beam));
    if (desired2 == 0.0) return 0.0;

    double interference = 0.0;
    for (std::size_t j = 0; j < gains.cols(); ++j) {
        if (j == beam) continue;
        cplx dot(0.0, 0.0);
        for (std::size_t n = 0; n < rx; ++n) dot += std::conj(gains(n, beam)) * gains(n, j);
        interference += std::norm(dot);
    }
    return snr * desired2 * desired2 / (desired2 + snr * interference);
}

/// Optimum (MMSE) combining:
/// snr * g_m^H (I_N + snr * sum_{j != m} g_j g_j^H)^{-1} g_m.
/// The N=2 case inverts via the 2x2 adjugate; larger N falls back to a
/// Cholesky solve. The identity regularizer keeps the matrix positive
/// definite, so the determinant check only guards against underflow.
inline double sinr_oc(const CMatrix& gains, std::size_t beam, double snr) {
    detail::check_beam_index(gains, beam);
    const std::size_t rx = gains.rows();

    if (rx == 2) {
        // B = I + snr * sum_{j != m} g_j g_j^H, Hermitian 2x2
        double b11 = 1.0, b22 = 1.0;
        cplx b12(0.0, 0.0);
        for (std::size_t j = 0; j < gains.cols(); ++j) {
            if (j == beam) continue;
            const cplx u = gains(0, j), v = gains(1, j);
            b11 += snr * std::norm(u);
            b22 += snr * std::norm(v);
            b12 += snr * (u * std::conj(v));
        }
        const double det = b11 * b22 - std::norm(b12);
        if (!(det > 0.0)) throw std::runtime_error("sinr_oc: 2x2 determinant underflowed to zero");
        const cplx g1 = gains(0, beam), g2 = gains(1, beam);
        const double quad =
            b22 * std::norm(g1) + b11 * std::norm(g2) - 2.0 * (b12 * std::conj(g1) * g2).real();
        return snr * quad / det;
    }

    CMatrix b = CMatrix::identity(rx);
    for (std::size_t j = 0; j < gains.cols(); ++j) {
        if (j == beam) continue;
        for (std::size_t r = 0; r < rx; ++r)
            for (std::size_t c = 0; c < rx; ++c)
                b(r, c) += snr * gains(r, j) * std::conj(gains(c, j));
    }
    std::vector<cplx> g(rx);
    for (std::size_t r = 0; r < rx; ++r) g[r] = gains(r, beam);
    const std::vector<cplx> y = hermitian_solve(b, g);
    double quad = 0.0;
    for (std::size_t r = 0; r < rx; ++r) quad += (std::conj(g[r]) * y[r]).real();
    return snr * quad;
}

inline double effective_sinr(Combiner combiner, const CMatrix& gains, std::size_t beam, double snr) {
    switch (combiner) {
        case Combiner::SC: return sinr_sc(gains, beam, snr);
        case Combiner::MRC: return sinr_mrc(gains, beam, snr);
        case Combiner::OC: return sinr_oc(gains, beam, snr);
    }
    throw std::invalid_argument("effective_sinr: unknown combiner");
}

}  // namespace osdma

#endif  // OSDMA_COMBINING_HPP
