#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "tcphonon/model.hpp"
#include "tcphonon/spectrum.hpp"
#include "tcphonon/vertex.hpp"

namespace oracle {

// Both positive roots in omega of (w^2 - s^2 k^2)(w^2 - M^2 - k^2) - beta^2 w^2,
// from the eigenvalues of the companion matrix of the quartic.
inline std::array<double, 2> quartic_frequencies(const tcphonon::ModelParams& m, double k)
{
    using Real = long double;
    const Real A = Real(m.M) * m.M + Real(k) * k, B = Real(m.s) * m.s * k * k;
    const Real c2 = -(A + B + Real(m.beta) * m.beta), c0 = A * B;
    Eigen::Matrix<Real, 4, 4> companion = Eigen::Matrix<Real, 4, 4>::Zero();
    companion(0, 3) = -c0;
    companion(2, 3) = -c2;
    companion(1, 0) = companion(2, 1) = companion(3, 2) = 1;
    Eigen::EigenSolver<Eigen::Matrix<Real, 4, 4>> es(companion, false);
    std::vector<double> positive;
    for (int i = 0; i < 4; ++i) {
        const auto z = es.eigenvalues()(i);
        if (z.real() > 0) {
            positive.push_back(static_cast<double>(z.real()));
        }
    }
    std::sort(positive.begin(), positive.end());
    if (positive.size() != 2) {
        return {NAN, NAN};
    }
    // polish against the companion's conditioning
    for (double& w : positive) {
        for (int it = 0; it < 3; ++it) {
            const Real x = Real(w) * w;
            const Real f = x * x + c2 * x + c0, df = 2 * Real(w) * (2 * x + c2);
            if (df != 0) {
                w = static_cast<double>(w - f / df);
            }
        }
    }
    return {positive[0], positive[1]};
}

// 2 omega_G(k*) = Lambda at s = 1, Lambda = 1.
inline double threshold_closed_form(double cs)
{
    const double a = 0.5 - cs * cs;
    return std::sqrt((a + std::sqrt(a * a + 0.75)) / 2.0);
}

// On-shell tree amplitude of three Goldstones from the cubic terms of the
// two-field action before the field redefinition,
//   (beta/2Omega) sigma ((d_t pi)^2 - (grad pi)^2) + (beta^2/4Omega^2) sigma^2 d_t pi,
// valid for Lambda = Omega = 1. Converted to the normalization of
// tcphonon::matrix_element.
inline std::complex<double> original_action_g_to_2g(const tcphonon::PhysicalParams& p, const tcphonon::Vec3& k,
                                                    const tcphonon::Vec3& q1)
{
    using cd = std::complex<double>;
    const tcphonon::ModelParams m = tcphonon::params_from_physical(p);
    struct L {
        double w;
        cd pi, sigma, dt;
        tcphonon::Vec3 dx;
        bool incoming;
    };
    auto leg = [&](const tcphonon::Vec3& v, bool incoming) {
        const double kk = tcphonon::norm(v);
        const auto d = tcphonon::dispersion(m, kk);
        const auto a = tcphonon::amplitudes(m, kk, tcphonon::PhaseConvention::canonical);
        L l{d.omega_G, a.pi_G, a.sigma_G, cd(0, -d.omega_G), v, incoming};
        if (!incoming) {
            l.pi = std::conj(l.pi);
            l.sigma = std::conj(l.sigma);
            l.dt = cd(0, d.omega_G);
        }
        return l;
    };
    const tcphonon::Vec3 q2{k[0] - q1[0], k[1] - q1[1], k[2] - q1[2]};
    const std::array<L, 3> legs{leg(k, true), leg(q1, false), leg(q2, false)};
    auto grad = [](const L& a, const L& b) {
        const double sign = (a.incoming ? 1.0 : -1.0) * (b.incoming ? 1.0 : -1.0);
        // (i ka).(i kb) with outgoing momenta entering as -k
        return -sign * (a.dx[0] * b.dx[0] + a.dx[1] * b.dx[1] + a.dx[2] * b.dx[2]);
    };
    const double c1 = m.beta / (2.0 * p.Omega), c2 = m.beta * m.beta / (4.0 * p.Omega * p.Omega);
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    cd total = 0.0;
    for (const auto& pr : perms) {
        const L &x = legs[pr[0]], &y = legs[pr[1]], &z = legs[pr[2]];
        total += c1 * x.sigma * y.pi * z.pi * (y.dt * z.dt - grad(y, z));
        total += c2 * x.sigma * y.sigma * z.dt * z.pi;
    }
    const double root = std::sqrt(2.0 * legs[0].w * legs[1].w * legs[2].w);
    return cd(0, 2) * root * total;
}

}  // namespace oracle
