#ifndef OSDMA_RNG_HPP
#define OSDMA_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace osdma {

/// SplitMix64 finalizer. Bijective on 64-bit integers.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream addressed by (root seed, stream index).
///
/// Stream scheme: the generator is a mt19937_64 seeded with
/// mix64(root_seed ^ mix64(stream_index)). A stream depends only on the
/// pair (seed, index), never on draw order elsewhere, so per-trial streams
/// can be consumed in any order or in parallel and still reproduce.
///
/// Gaussian variates come from Box-Muller on the raw uniforms rather than
/// std::normal_distribution, which keeps the byte-level output independent
/// of the standard library implementation.
class RandomStream {
public:
    RandomStream(std::uint64_t root_seed, std::uint64_t stream_index = 0)
        : gen_(mix64(root_seed ^ mix64(stream_index))) {}

    /// Uniform double in (0, 1]; never returns 0 so log() stays finite.
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Independent standard normal pair (Box-Muller).
    std::pair<double, double> normal_pair() {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double t = two_pi * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Circularly-symmetric complex Gaussian, zero mean, unit variance:
    /// (g1 + i*g2)/sqrt(2) with g1, g2 independent standard normals.
    std::complex<double> complex_gaussian() {
        const auto [g1, g2] = normal_pair();
        return {g1 * inv_sqrt2, g2 * inv_sqrt2};
    }

private:
    static constexpr double two_pi = 6.283185307179586476925286766559;
    static constexpr double inv_sqrt2 = 0.70710678118654752440084436210485;

    std::mt19937_64 gen_;
};

}  // namespace osdma

#endif  // OSDMA_RNG_HPP
