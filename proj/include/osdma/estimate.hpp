#ifndef OSDMA_ESTIMATE_HPP
#define OSDMA_ESTIMATE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace osdma {

enum class Method { monte_carlo, exact_quadrature, asymptotic_numeric, asymptotic_approx };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::monte_carlo: return "monte_carlo";
        case Method::exact_quadrature: return "exact_quadrature";
        case Method::asymptotic_numeric: return "asymptotic_numeric";
        case Method::asymptotic_approx: return "asymptotic_approx";
    }
    throw std::invalid_argument("method_name: unknown method");
}

/// Average sum-rate in bits/s/Hz. std_error is nonzero only for Monte
/// Carlo; tail_cutoff records the truncation point of the improper
/// integral for the quadrature methods (0 otherwise).
struct ThroughputEstimate {
    double value = 0.0;
    Method method = Method::monte_carlo;
    std::size_t users = 0;
    double std_error = 0.0;
    double tail_cutoff = 0.0;
};

}  // namespace osdma

#endif  // OSDMA_ESTIMATE_HPP
