#include <catch2/catch.hpp>

#include <vector>

#include "osdma/channel.hpp"
#include "osdma/combining.hpp"
#include "osdma/rng.hpp"
#include "osdma/sinr_model.hpp"
#include "osdma/system.hpp"
#include "support/oracles.hpp"

using namespace osdma;

namespace {

// Builds H*A directly; unlike SystemConfig this places no N <= M
// constraint, which the degenerate-shape cases below exploit.
CMatrix random_gains(std::size_t rx, std::size_t tx, RandomStream& rng) {
    CMatrix h(rx, tx);
    for (std::size_t n = 0; n < rx; ++n)
        for (std::size_t m = 0; m < tx; ++m) h(n, m) = rng.complex_gaussian();
    return h * draw_beams(tx, rng).a;
}

std::vector<double> sinr_samples(Combiner combiner, double snr, std::size_t count,
                                 std::uint64_t seed) {
    // One sample per realization (beam 0 only) so samples are i.i.d.
    std::vector<double> samples(count);
    for (std::size_t i = 0; i < count; ++i) {
        RandomStream rng(seed, i);
        const CMatrix gains = random_gains(2, 4, rng);
        samples[i] = effective_sinr(combiner, gains, 0, snr);
    }
    return samples;
}

}  // namespace

TEST_CASE("no interferers reduces every combiner to matched-filter SNR") {
    RandomStream rng(7, 0);
    const CMatrix gains = random_gains(2, 1, rng);  // M=1: single beam, no interference
    const double power = std::norm(gains(0, 0)) + std::norm(gains(1, 0));
    const double rho = 2.5;
    REQUIRE(sinr_mrc(gains, 0, rho) == Approx(rho * power).epsilon(1e-12));
    REQUIRE(sinr_oc(gains, 0, rho) == Approx(rho * power).epsilon(1e-12));
    const double best_antenna = rho * std::max(std::norm(gains(0, 0)), std::norm(gains(1, 0)));
    REQUIRE(sinr_sc(gains, 0, rho) == Approx(best_antenna).epsilon(1e-12));
}

TEST_CASE("selection combining ignores a zeroed antenna row") {
    RandomStream rng(13, 0);
    CMatrix gains = random_gains(2, 4, rng);
    CMatrix zeroed = gains;
    for (std::size_t j = 0; j < 4; ++j) zeroed(0, j) = cplx(0.0, 0.0);

    double desired = std::norm(gains(1, 0));
    double interference = 0.0;
    for (std::size_t j = 1; j < 4; ++j) interference += std::norm(gains(1, j));
    const double row1 = 1.0 * desired / (1.0 + interference);
    REQUIRE(sinr_sc(zeroed, 0, 1.0) == Approx(row1).epsilon(1e-12));
}

TEST_CASE("single receive antenna makes MRC coincide with SC") {
    RandomStream rng(19, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const CMatrix gains = random_gains(1, 4, rng);
        REQUIRE(sinr_mrc(gains, 2, 1.7) == Approx(sinr_sc(gains, 2, 1.7)).epsilon(1e-10));
    }
}

TEST_CASE("all-zero desired column yields zero MRC SINR") {
    CMatrix gains(2, 4);
    gains(0, 1) = cplx(1.0, 0.0);
    gains(1, 2) = cplx(0.0, 2.0);
    REQUIRE(sinr_mrc(gains, 0, 1.0) == 0.0);
}

TEST_CASE("optimum combining dominates MRC and SC realization by realization") {
    RandomStream rng(101, 0);
    for (int rep = 0; rep < 500; ++rep) {
        const CMatrix gains = random_gains(2, 4, rng);
        for (std::size_t m = 0; m < 4; ++m) {
            const double oc = sinr_oc(gains, m, 1.0);
            REQUIRE(oc >= sinr_mrc(gains, m, 1.0) * (1.0 - 1e-10));
            REQUIRE(oc >= sinr_sc(gains, m, 1.0) * (1.0 - 1e-10));
        }
    }
}

TEST_CASE("every combiner's SINR is nondecreasing in SNR") {
    RandomStream rng(103, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const CMatrix gains = random_gains(2, 4, rng);
        for (const Combiner c : all_combiners) {
            double prev = 0.0;
            for (const double rho : {0.25, 1.0, 4.0, 16.0}) {
                const double v = effective_sinr(c, gains, 1, rho);
                REQUIRE(v >= prev * (1.0 - 1e-12));
                prev = v;
            }
        }
    }
}

TEST_CASE("general-N optimum combining agrees with the 2x2 closed form") {
    // Same realization evaluated through the adjugate path (N=2) and the
    // Cholesky path (general N) must coincide.
    RandomStream rng(107, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const CMatrix gains = random_gains(2, 4, rng);
        CMatrix b = CMatrix::identity(2);
        for (std::size_t j = 1; j < 4; ++j)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    b(r, c) += 1.0 * gains(r, j) * std::conj(gains(c, j));
        std::vector<cplx> g = {gains(0, 0), gains(1, 0)};
        const auto y = hermitian_solve(b, g);
        const double general = (std::conj(g[0]) * y[0] + std::conj(g[1]) * y[1]).real();
        REQUIRE(sinr_oc(gains, 0, 1.0) == Approx(general).epsilon(1e-10));
    }
}

TEST_CASE("optimum combining works for three receive antennas") {
    RandomStream rng(109, 0);
    const CMatrix gains = random_gains(3, 4, rng);
    const double v = sinr_oc(gains, 0, 2.0);
    REQUIRE(v > 0.0);
    REQUIRE(v >= sinr_mrc(gains, 0, 2.0) * (1.0 - 1e-10));
}

TEST_CASE("beam index out of range is rejected") {
    RandomStream rng(1, 0);
    const CMatrix gains = random_gains(2, 4, rng);
    REQUIRE_THROWS_AS(sinr_sc(gains, 4, 1.0), std::out_of_range);
    REQUIRE_THROWS_AS(sinr_mrc(gains, 4, 1.0), std::out_of_range);
    REQUIRE_THROWS_AS(sinr_oc(gains, 4, 1.0), std::out_of_range);
}

TEST_CASE("simulated SINR distributions track the closed forms (smoke)") {
    // Full-strength 1e5-sample checks at KS <= 0.01 run in the acceptance
    // suite; this keeps a fast 2e4-sample version in the unit loop.
    const std::size_t n = 20000;
    for (const Combiner c : all_combiners) {
        const SinrModel model(c, 1.0);
        const double d =
            testing::ks_distance(sinr_samples(c, 1.0, n, 555), [&](double x) { return model.cdf(x); });
        INFO(combiner_name(c));
        REQUIRE(d <= 0.02);
    }
}

TEST_CASE("MRC SINR matches the gamma-ratio model (smoke)") {
    const std::size_t n = 20000;
    const double rho = 1.0;
    std::vector<double> ratio_model(n);
    RandomStream rng(777, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = testing::gamma_integer_shape(rng, 2);  // desired: N=2 complex dims
        const double y = testing::gamma_integer_shape(rng, 3);  // interference: M-1=3
        ratio_model[i] = z / (1.0 / rho + y);
    }
    const double d = testing::ks_distance_two_sample(sinr_samples(Combiner::MRC, rho, n, 888),
                                                     std::move(ratio_model));
    REQUIRE(d <= 0.02);
}
