#ifndef OSDMA_THROUGHPUT_HPP
#define OSDMA_THROUGHPUT_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "osdma/estimate.hpp"
#include "osdma/extreme_value.hpp"
#include "osdma/quadrature.hpp"
#include "osdma/sinr_model.hpp"

namespace osdma {

namespace detail {

inline void require_converged(const QuadratureResult& q, const char* op) {
    if (!q.converged)
        throw std::runtime_error(std::string(op) + ": quadrature did not converge (error estimate " +
                                 std::to_string(q.error_estimate) + ")");
}

}  // namespace detail

/// Average sum-rate over `beams` beams with `users` i.i.d. SINRs per beam:
///   beams * Integral log2(1+x) K F(x)^{K-1} f(x) dx.
/// The improper integral is truncated at the x where K*(1 - F(x)) drops
/// below 1e-12, so the neglected mass of the max distribution is below
/// 1e-12; the cutoff is recorded in the estimate.
inline ThroughputEstimate exact_throughput(const SinrModel& model, std::size_t users,
                                           std::size_t beams = 4, double abs_tol = 1e-10,
                                           int initial_intervals = 8) {
    if (users < 1) throw std::invalid_argument("exact_throughput: need at least one user");
    if (beams < 1) throw std::invalid_argument("exact_throughput: need at least one beam");

    const double k = static_cast<double>(users);
    const double cutoff = model.solve_survival(1e-12 / k);
    const auto integrand = [&](double x) {
        const double f = 1.0 - model.survival(x);
        return std::log2(1.0 + x) * k * std::pow(f, k - 1.0) * model.pdf(x);
    };
    const QuadratureResult q =
        integrate_adaptive(integrand, 0.0, cutoff, abs_tol, initial_intervals);
    detail::require_converged(q, "exact_throughput");
    return {static_cast<double>(beams) * q.value, Method::exact_quadrature, users, 0.0, cutoff};
}

/// Gumbel-limit throughput
///   (4/ln 2) * Integral (1 - exp(-exp(-(x - b)/a))) / (1 + x) dx,
/// truncated where the integrand falls below 1e-14. Tagged
/// asymptotic_numeric or asymptotic_approx after the factors' provenance.
inline ThroughputEstimate asymptotic_throughput(const SinrModel& model,
                                                const NormalizingFactors& factors,
                                                double abs_tol = 1e-10, int initial_intervals = 8) {
    (void)model;  // the 4-beam prefactor is fixed by the model's dimensions
    if (!(factors.scale > 0.0))
        throw std::invalid_argument("asymptotic_throughput: factor scale must be positive");

    const auto integrand = [&](double x) {
        return -std::expm1(-std::exp(-(x - factors.location) / factors.scale)) / (1.0 + x);
    };
    double cutoff = std::max(1.0, factors.location + 34.0 * factors.scale);
    while (integrand(cutoff) > 1e-14) cutoff *= 1.5;

    const QuadratureResult q =
        integrate_adaptive(integrand, 0.0, cutoff, abs_tol, initial_intervals);
    detail::require_converged(q, "asymptotic_throughput");
    const Method method = factors.method == FactorMethod::approx_rho1 ? Method::asymptotic_approx
                                                                      : Method::asymptotic_numeric;
    return {4.0 / std::log(2.0) * q.value, method, factors.users, 0.0, cutoff};
}

/// Ratio of the asymptotic throughput to its scaling-law denominator
/// 4 log2(b_K); tends to 1 as K grows.
inline double scaling_ratio(const SinrModel& model, std::size_t users) {
    const NormalizingFactors factors = solve_factors(model, users);
    if (!(factors.location > 1.0))
        throw std::runtime_error("scaling_ratio: pre-asymptotic K (location factor <= 1)");
    return asymptotic_throughput(model, factors).value / (4.0 * std::log2(factors.location));
}

/// Scaling-law denominator built from the rho = 1 closed-form factors:
/// 4 log2(approx b_K).
inline double rho1_scaling_form(Combiner combiner, std::size_t users) {
    const NormalizingFactors factors = approx_factors(combiner, users);
    if (!(factors.location > 1.0))
        throw std::runtime_error("rho1_scaling_form: pre-asymptotic K (location factor <= 1)");
    return 4.0 * std::log2(factors.location);
}

}  // namespace osdma

#endif  // OSDMA_THROUGHPUT_HPP
