#ifndef OSDMA_EXTREME_VALUE_HPP
#define OSDMA_EXTREME_VALUE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "osdma/sinr_model.hpp"
#include "osdma/system.hpp"

namespace osdma {

enum class FactorMethod { numeric, approx_rho1 };

inline std::string factor_method_name(FactorMethod m) {
    return m == FactorMethod::numeric ? "numeric" : "approx_rho1";
}

/// Gumbel normalizing pair for the maximum of `users` i.i.d. effective
/// SINRs: location solves 1 - F(b) = 1/K (the characteristic extreme),
/// scale is F^{-1}(1 - 1/(K e)) - b.
struct NormalizingFactors {
    double location = 0.0;  // b_K
    double scale = 0.0;     // a_K
    std::size_t users = 0;
    FactorMethod method = FactorMethod::numeric;
};

/// Numeric factors by root finding on the survival function. Residuals:
/// |(1 - F(b)) - 1/K| <= 1e-12 relative and |F(a + b) - (1 - 1/(K e))|
/// <= 1e-10 absolute.
inline NormalizingFactors solve_factors(const SinrModel& model, std::size_t users) {
    if (users < 2) throw std::invalid_argument("solve_factors: need at least two users");
    const double k = static_cast<double>(users);
    const double location = model.solve_survival(1.0 / k);
    const double upper = model.solve_survival(1.0 / (k * std::exp(1.0)));
    const double scale = upper - location;
    if (!(scale > 0.0)) throw std::runtime_error("solve_factors: scale did not come out positive");
    return {location, scale, users, FactorMethod::numeric};
}

/// Closed-form large-K factor approximations, valid at rho = 1 only:
///   SC:  b ~ ln(2K) - 2 ln(1 + ln 2K)
///   MRC: b ~ ln(3K) - 2 ln(1 + ln K)
///   OC:  b ~ ln(4K) - 2 ln(ln K)       (needs K >= 3)
/// with a ~ 1 throughout. K below the positivity range of the formula is
/// rejected.
inline NormalizingFactors approx_factors(Combiner combiner, std::size_t users) {
    if (users < 2) throw std::invalid_argument("approx_factors: need at least two users");
    const double k = static_cast<double>(users);
    double location = 0.0;
    switch (combiner) {
        case Combiner::SC:
            location = std::log(2.0 * k) - 2.0 * std::log(1.0 + std::log(2.0 * k));
            break;
        case Combiner::MRC:
            location = std::log(3.0 * k) - 2.0 * std::log(1.0 + std::log(k));
            break;
        case Combiner::OC:
            if (users < 3) throw std::invalid_argument("approx_factors: OC form needs K >= 3");
            location = std::log(4.0 * k) - 2.0 * std::log(std::log(k));
            break;
    }
    if (!(location > 0.0))
        throw std::invalid_argument("approx_factors: K too small, formula is not positive");
    return {location, 1.0, users, FactorMethod::approx_rho1};
}

/// Gumbel CDF of the normalized maximum: exp(-exp(-(x - b)/a)).
inline double gumbel_max_cdf(double x, const NormalizingFactors& factors) {
    if (!(factors.scale > 0.0)) throw std::invalid_argument("gumbel_max_cdf: scale must be positive");
    return std::exp(-std::exp(-(x - factors.location) / factors.scale));
}

}  // namespace osdma

#endif  // OSDMA_EXTREME_VALUE_HPP
