#ifndef OSDMA_SINR_MODEL_HPP
#define OSDMA_SINR_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "osdma/system.hpp"

namespace osdma {

/// Closed-form distribution of the effective SINR of one beam for a system
/// with 4 transmit antennas and 2 receive antennas. The forms are specific
/// to those dimensions; construction rejects anything else.
///
/// With E = exp(-x/rho) the implemented survival functions 1 - F(x) are
///   SC:  B*(2 - B),                          B = E/(1+x)^3
///   MRC: E/(1+x)^3 * (1 + x/rho + 3x/(1+x))
///   OC:  E/(1+x)^3 * (1 + 3x + x/rho)
/// evaluated in this factored form so deep-tail values keep full relative
/// precision (1 - cdf would lose everything past ~1e-16).
class SinrModel {
public:
    SinrModel(Combiner combiner, double snr, std::size_t tx_antennas = 4,
              std::size_t rx_antennas = 2)
        : combiner_(combiner), snr_(snr) {
        if (tx_antennas != 4 || rx_antennas != 2)
            throw std::invalid_argument(
                "SinrModel: closed forms are available for 4 transmit / 2 receive antennas only");
        if (!(snr > 0.0)) throw std::invalid_argument("SinrModel: SNR must be positive");
    }

    Combiner combiner() const { return combiner_; }
    double snr() const { return snr_; }

    /// P(X > x), evaluated in the cancellation-free factored form.
    double survival(double x) const {
        check_domain(x);
        const double e = std::exp(-x / snr_);
        const double c3 = cube(1.0 + x);
        switch (combiner_) {
            case Combiner::SC: {
                const double b = e / c3;
                return b * (2.0 - b);
            }
            case Combiner::MRC:
                return e / c3 * (1.0 + x / snr_ + 3.0 * x / (1.0 + x));
            case Combiner::OC:
                return e / c3 * (1.0 + 3.0 * x + x / snr_);
        }
        throw std::invalid_argument("SinrModel: unknown combiner");
    }

    double cdf(double x) const { return 1.0 - survival(x); }

    double pdf(double x) const {
        check_domain(x);
        const double e = std::exp(-x / snr_);
        const double c1 = 1.0 + x;
        const double c3 = cube(c1);
        switch (combiner_) {
            case Combiner::SC: {
                const double b = e / c3;
                return 2.0 * (1.0 - b) * e * (c1 / snr_ + 3.0) / (c3 * c1);
            }
            case Combiner::MRC:
                return x * e / (snr_ * snr_ * c3) + 6.0 * x * e / (snr_ * c3 * c1) +
                       12.0 * x * e / (c3 * c1 * c1);
            case Combiner::OC:
                return x * e / (snr_ * snr_ * c3 * c1) *
                       ((3.0 * snr_ + 1.0) * x + (6.0 * snr_ * snr_ + 6.0 * snr_ + 1.0));
        }
        throw std::invalid_argument("SinrModel: unknown combiner");
    }

    /// Mills-type ratio (1 - F(x)) / f(x), whose x -> infinity limit is rho
    /// (the hazard condition for a Gumbel-type extreme-value limit). The
    /// common exp(-x/rho) factor of numerator and denominator is cancelled
    /// algebraically, so the ratio stays evaluable far beyond the point
    /// where pdf() underflows.
    double hazard_limit(double x) const {
        check_domain(x);
        if (x == 0.0 || !std::isfinite(x))
            throw std::runtime_error("hazard_limit: tail too deep (density vanishes)");
        const double c1 = 1.0 + x;
        switch (combiner_) {
            case Combiner::SC: {
                const double b = std::exp(-x / snr_) / cube(c1);
                return (2.0 - b) * c1 / (2.0 * (1.0 - b) * (c1 / snr_ + 3.0));
            }
            case Combiner::MRC:
                return (1.0 + x / snr_ + 3.0 * x / c1) /
                       (x / (snr_ * snr_) + 6.0 * x / (snr_ * c1) + 12.0 * x / (c1 * c1));
            case Combiner::OC:
                return snr_ * snr_ * c1 * (1.0 + 3.0 * x + x / snr_) /
                       (x * ((3.0 * snr_ + 1.0) * x + 6.0 * snr_ * snr_ + 6.0 * snr_ + 1.0));
        }
        throw std::invalid_argument("SinrModel: unknown combiner");
    }

    /// Solves survival(x) = target to relative residual rel_tol by
    /// bisection. The bracket starts at snr*ln(1/target) + 10 and grows
    /// geometrically until it encloses the root; survival is strictly
    /// decreasing so the root is unique. The default sits one decade under
    /// the 1e-12 contract so downstream residual checks keep headroom.
    double solve_survival(double target, double rel_tol = 1e-13) const {
        if (!(target > 0.0 && target <= 1.0))
            throw std::domain_error("solve_survival: target must be in (0, 1]");
        if (target == 1.0) return 0.0;

        double lo = 0.0;
        double hi = snr_ * std::log(1.0 / target) + 10.0;
        while (survival(hi) > target) {
            lo = hi;
            hi *= 2.0;
            if (!std::isfinite(hi)) throw std::runtime_error("solve_survival: bracket blew up");
        }
        double mid = hi;
        for (int it = 0; it < 400; ++it) {
            mid = 0.5 * (lo + hi);
            const double s = survival(mid);
            if (std::abs(s - target) <= rel_tol * target) return mid;
            (s > target ? lo : hi) = mid;
            if (hi - lo <= 1e-300) break;
        }
        throw std::runtime_error("solve_survival: bisection stalled before reaching " +
                                 std::to_string(rel_tol) + " relative residual");
    }

    /// Inverse CDF. Residual |cdf(x) - p| <= 1e-12.
    double quantile(double p) const {
        if (!(p >= 0.0) || p >= 1.0)
            throw std::domain_error("quantile: probability must satisfy 0 <= p < 1");
        if (p == 0.0) return 0.0;
        return solve_survival(1.0 - p);
    }

private:
    static double cube(double v) { return v * v * v; }
    static void check_domain(double x) {
        if (!(x >= 0.0)) throw std::domain_error("SinrModel: SINR argument must be nonnegative");
    }

    Combiner combiner_;
    double snr_;
};

/// Pointwise rho -> infinity limit of the SINR CDFs (the interference-only
/// distributions):
///   SC:  [1 - 1/(1+x)^3]^2
///   MRC: 1 - 1/(1+x)^3 - 3x/(1+x)^4
///   OC:  1 - (1+3x)/(1+x)^3
inline double sir_limit_cdf(Combiner combiner, double x) {
    if (!(x >= 0.0)) throw std::domain_error("sir_limit_cdf: SINR argument must be nonnegative");
    const double c1 = 1.0 + x;
    const double c3 = c1 * c1 * c1;
    switch (combiner) {
        case Combiner::SC: {
            const double b = 1.0 / c3;
            return 1.0 - b * (2.0 - b);
        }
        case Combiner::MRC:
            return 1.0 - (1.0 + 3.0 * x / c1) / c3;
        case Combiner::OC:
            return 1.0 - (1.0 + 3.0 * x) / c3;
    }
    throw std::invalid_argument("sir_limit_cdf: unknown combiner");
}

/// Fixed evaluation grid for distribution-level checks: `points`
/// log-spaced values on [1e-4, 1e4] scaled by rho.
inline std::vector<double> evaluation_grid(double snr, std::size_t points = 400) {
    if (points < 2) throw std::invalid_argument("evaluation_grid: need at least two points");
    std::vector<double> grid(points);
    const double lo = std::log(1e-4), hi = std::log(1e4);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        grid[i] = snr * std::exp(t);
    }
    return grid;
}

}  // namespace osdma

#endif  // OSDMA_SINR_MODEL_HPP
