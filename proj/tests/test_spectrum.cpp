#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "tcphonon/bogoliubov.hpp"
#include "tcphonon/scan.hpp"
#include "tcphonon/spectrum.hpp"

using namespace tcphonon;
using doctest::Approx;

namespace {

ModelParams mp(double s, double M, double beta)
{
    ModelParams m;
    m.s = s;
    m.M = M;
    m.beta = beta;
    return m;
}

double crel(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("dispersion examples")
{
    DispersionPoint d = dispersion(mp(1, 1, 1), 0.0);
    CHECK(d.omega_G == 0.0);
    CHECK(d.omega_L == Approx(std::sqrt(2.0)).epsilon(1e-15));

    d = dispersion(mp(1, 1, 0), 1.0);
    CHECK(d.omega_G == Approx(1.0).epsilon(1e-15));
    CHECK(d.omega_L == Approx(std::sqrt(2.0)).epsilon(1e-15));

    d = dispersion(mp(1, 1, 1), 1.0);
    // x^2 - 4x + 2 = 0
    CHECK(d.omega_G == Approx(std::sqrt(2.0 - std::sqrt(2.0))).epsilon(1e-15));
    CHECK(d.omega_L == Approx(std::sqrt(2.0 + std::sqrt(2.0))).epsilon(1e-15));
    CHECK(d.omega_G == Approx(0.7653669).epsilon(1e-7));
    CHECK(d.omega_L == Approx(1.8477591).epsilon(1e-7));

    CHECK_THROWS_AS(dispersion(mp(1, 1, 1), -1e-3), std::invalid_argument);
}

TEST_CASE("dispersion matches companion-matrix roots")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const ModelParams m = mp(0.2 + 0.8 * u(rng), 0.1 + 2 * u(rng), 3 * u(rng));
        for (double k : {1e-2, 0.3, 1.0, 4.0, 30.0}) {
            const auto ref = oracle::quartic_frequencies(m, k);
            const DispersionPoint d = dispersion(m, k);
            CHECK(d.omega_G == Approx(ref[0]).epsilon(1e-12));
            CHECK(d.omega_L == Approx(ref[1]).epsilon(1e-12));
        }
    }
}

TEST_CASE("dispersion_residual")
{
    CHECK(dispersion_residual(mp(1, 1, 0), 1.0, 1.0) == 0.0);
    const ModelParams m = mp(1, 1, 1);
    CHECK(std::abs(dispersion_residual(m, 1.0, dispersion(m, 1.0).omega_G)) < 1e-12);
    // (1 - 1)(1 - 2) - 1 = -1, over Lambda^4 = 4
    CHECK(dispersion_residual(m, 1.0, 1.0) == Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("small-k root is free of cancellation")
{
    const ModelParams m = params_from_physical({1.0, 0.5, 1.0});
    for (double k : {1e-8, 1e-6, 1e-4}) {
        const DispersionPoint d = dispersion(m, k);
        CHECK(d.omega_G / k == Approx(0.5).epsilon(1e-6));
        CHECK(std::abs(dispersion_relative_residual(m, k, d.omega_G)) < 1e-14);
    }
}

TEST_CASE("amplitudes examples")
{
    ModeAmplitudes a = amplitudes(mp(1, 1, 0), 2.0);
    CHECK(a.pi_G.real() == Approx(0.5).epsilon(1e-15));
    CHECK(a.pi_L == complex(0.0));
    CHECK(a.sigma_G == complex(0.0));
    CHECK(a.sigma_L.real() == Approx(1.0 / std::sqrt(2.0 * std::sqrt(5.0))).epsilon(1e-15));
    CHECK(a.sigma_L.real() == Approx(0.4728708).epsilon(1e-7));

    // x^2 - 4x + 2 = 0 by hand: |pi_G| from the closed form, |pi_L| from the
    // pi sum rule, |sigma_a| = |k^2 - w_a^2| |pi_a| / w_a
    a = amplitudes(mp(1, 1, 1), 1.0);
    const double xg = 2 - std::sqrt(2.0), xl = 2 + std::sqrt(2.0), wg = std::sqrt(xg), wl = std::sqrt(xl);
    const double pg = std::sqrt((xl - 1) * wg / (2 * (xl - xg)));
    const double pl = std::sqrt((1 - 2 * wg * pg * pg) / (2 * wl));
    CHECK(std::abs(a.pi_G) == Approx(pg).epsilon(1e-14));
    CHECK(std::abs(a.pi_L) == Approx(pl).epsilon(1e-14));
    CHECK(std::abs(a.sigma_G) == Approx((1 - xg) * pg / wg).epsilon(1e-14));
    CHECK(std::abs(a.sigma_L) == Approx((xl - 1) * pl / wl).epsilon(1e-14));
    CHECK(std::abs(a.pi_G) == Approx(0.5715249).epsilon(1e-6));
    CHECK(std::abs(a.pi_L) == Approx(0.3678302).epsilon(1e-6));
    CHECK(std::abs(a.sigma_G) == Approx(0.3093071).epsilon(1e-6));
    CHECK(std::abs(a.sigma_L) == Approx(0.4805933).epsilon(1e-6));

    CHECK_THROWS_AS(amplitudes(mp(1, 1, 1), 0.0), std::invalid_argument);
}

TEST_CASE("phase conventions")
{
    const ModelParams m = mp(1, 1, 1);
    const ModeAmplitudes c = amplitudes(m, 1.0, PhaseConvention::canonical);
    CHECK(c.pi_G.imag() == 0.0);
    CHECK(c.pi_G.real() > 0.0);
    CHECK(c.sigma_L.imag() == 0.0);
    CHECK(c.sigma_L.real() > 0.0);
    CHECK(c.pi_L.real() == 0.0);
    CHECK(c.pi_L.imag() < 0.0);
    CHECK(c.sigma_G.real() == 0.0);
    CHECK(c.sigma_G.imag() < 0.0);

    // sigma_a = -i (s^2 k^2 - w_a^2) pi_a / (beta w_a)
    const DispersionPoint d = dispersion(m, 1.0);
    CHECK(crel(complex(0, -1) * (1.0 - d.omega_G * d.omega_G) * c.pi_G / d.omega_G, c.sigma_G) < 1e-14);
    CHECK(crel(complex(0, -1) * (1.0 - d.omega_L * d.omega_L) * c.pi_L / d.omega_L, c.sigma_L) < 1e-14);

    const ModeAmplitudes p = amplitudes(m, 1.0, PhaseConvention::printed);
    CHECK(p.pi_L == -c.pi_L);
    CHECK(p.pi_G == c.pi_G);
    CHECK(p.sigma_G == c.sigma_G);
    CHECK(p.sigma_L == c.sigma_L);
    CHECK(with_phases(c, PhaseConvention::printed).pi_L == p.pi_L);
}

TEST_CASE("gapped amplitudes at rest")
{
    const ModelParams m = params_from_physical({1.0, 0.5, 1.0});
    const GappedAmplitudes g0 = gapped_amplitudes(m, 0.0);
    CHECK(std::isfinite(std::abs(g0.pi)));
    const ModeAmplitudes tiny = amplitudes(m, 1e-6);
    CHECK(std::abs(g0.sigma - tiny.sigma_L) < 1e-10);
    CHECK(std::abs(g0.pi - tiny.pi_L) < 1e-10);
    const GappedAmplitudes g = gapped_amplitudes(m, 1e-7);
    CHECK(std::abs(g.pi - g0.pi) < 1e-10);
    const ModeAmplitudes a = amplitudes(m, 0.3);
    const GappedAmplitudes b = gapped_amplitudes(m, 0.3);
    CHECK(crel(b.pi, a.pi_L) < 1e-14);
    CHECK(crel(b.sigma, a.sigma_L) < 1e-14);
}

TEST_CASE("sum rules, Vieta, monotonicity on a log grid")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> cs_d(0.05, 0.999), l_d(0.3, 3.0);
    const auto grid = logspace(1e-3, 1e3, 50);
    for (int draw = 0; draw < 10; ++draw) {
        const PhysicalParams p{l_d(rng), cs_d(rng), 1.0};
        const ModelParams m = params_from_physical(p);
        DispersionPoint prev{};
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double k = grid[i] * p.Lambda;
            const DispersionPoint d = dispersion(m, k);
            const ModeAmplitudes a = amplitudes(m, k);
            const double wg = d.omega_G, wl = d.omega_L;
            CHECK(std::abs(2 * wg * std::norm(a.pi_G) + 2 * wl * std::norm(a.pi_L) - 1) < 1e-10);
            CHECK(std::abs(2 * wg * std::norm(a.sigma_G) + 2 * wl * std::norm(a.sigma_L) - 1) < 1e-10);
            const complex cg = a.pi_G * std::conj(a.sigma_G), cl = a.pi_L * std::conj(a.sigma_L);
            CHECK(std::abs(cg.imag() + cl.imag()) < 1e-10);
            CHECK(std::abs(cg.real() * wg + cl.real() * wl) < 1e-10);

            const double L2 = p.Lambda * p.Lambda;
            CHECK((wg * wg + wl * wl) == Approx(L2 + 2 * k * k).epsilon(1e-12));
            CHECK((wg * wg * wl * wl) == Approx(k * k * (m.M * m.M + k * k)).epsilon(1e-12));
            CHECK(std::abs(dispersion_relative_residual(m, k, wg)) < 1e-12);
            CHECK(std::abs(dispersion_relative_residual(m, k, wl)) < 1e-12);
            if (i > 0) {
                CHECK(wg > prev.omega_G);
                CHECK(wl > prev.omega_L);
            }
            CHECK(wg < wl);
            prev = d;
        }
    }
}

TEST_CASE("long-wavelength limits")
{
    for (double cs : {0.1, 0.5, 0.9}) {
        const PhysicalParams p{2.0, cs, 1.0};
        const ModelParams m = params_from_physical(p);
        CHECK(dispersion(m, 0.0).omega_L == Approx(2.0).epsilon(1e-15));
        CHECK(dispersion(m, 1e-7).omega_G / 1e-7 == Approx(cs).epsilon(1e-12));
    }
}

TEST_CASE("decoupled branch")
{
    for (double beta : {0.0, 1e-12}) {
        const ModelParams m = mp(0.7, 1.3, beta);
        for (double k : {1e-3, 0.4, 9.0}) {
            const DispersionPoint d = dispersion(m, k);
            const ModeAmplitudes a = amplitudes(m, k);
            CHECK(a.pi_L == complex(0.0));
            CHECK(a.sigma_G == complex(0.0));
            CHECK(a.pi_G.real() == Approx(1 / std::sqrt(2 * d.omega_G)).epsilon(1e-15));
            CHECK(a.sigma_L.real() == Approx(1 / std::sqrt(2 * d.omega_L)).epsilon(1e-15));
        }
    }
}

TEST_CASE("group velocity")
{
    const ModelParams m = params_from_physical({1.0, 0.5, 1.0});
    for (double k : {1e-4, 0.3, 1.0, 5.0}) {
        const double h = 1e-6 * k;
        const double fd = (dispersion(m, k + h).omega_G - dispersion(m, k - h).omega_G) / (2 * h);
        CHECK(goldstone_group_velocity(m, k) == Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("bogoliubov oracle")
{
    auto [d0, a0] = bogoliubov_oracle(mp(1, 1, 0), 1.0);
    CHECK(d0.omega_G == Approx(1.0).epsilon(1e-14));
    CHECK(d0.omega_L == Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(a0.pi_G) == Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(a0.pi_L) < 1e-14);
    CHECK(std::abs(a0.sigma_G) < 1e-14);

    auto [d1, a1] = bogoliubov_oracle(mp(1, 1, 1), 1.0);
    const auto ref = oracle::quartic_frequencies(mp(1, 1, 1), 1.0);
    CHECK(d1.omega_G == Approx(ref[0]).epsilon(1e-13));
    CHECK(d1.omega_L == Approx(ref[1]).epsilon(1e-13));
    CHECK(d1.omega_G == Approx(0.7653669).epsilon(1e-7));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> cs_d(0.05, 0.95), l_d(0.5, 2.0);
    for (int draw = 0; draw < 10; ++draw) {
        const PhysicalParams p{l_d(rng), cs_d(rng), 1.0};
        const ModelParams m = params_from_physical(p);
        for (double k : logspace(1e-3, 1e3, 50)) {
            const auto [od, oa] = bogoliubov_oracle(m, k * p.Lambda);
            const ModeAmplitudes a = amplitudes(m, k * p.Lambda);
            CHECK(crel(oa.pi_G, a.pi_G) < 1e-8);
            CHECK(crel(oa.pi_L, a.pi_L) < 1e-8);
            CHECK(crel(oa.sigma_G, a.sigma_G) < 1e-8);
            CHECK(crel(oa.sigma_L, a.sigma_L) < 1e-8);
        }
    }
}

}
