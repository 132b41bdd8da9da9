#include "tcphonon/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace tcphonon {

namespace {

// Below this beta/Lambda the mixing is dropped and the decoupled expressions are used.
constexpr double decoupling_threshold = 1e-8;

// Roots x = omega^2 of x^2 - (A + B + beta^2) x + A B = 0 with A = M^2 + k^2,
// B = s^2 k^2, together with the cancellation-free differences the amplitudes need.
struct Resolvent {
    double A, B, beta2;
    double xG, xL;
    double split;      // xL - xG
    double xL_minus_B;
    double A_minus_xG;
    double xL_minus_A;
};

Resolvent resolve(const ModelParams& m, double k)
{
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("dispersion: wave number must be finite and >= 0");
    }
    Resolvent r{};
    r.A = m.M * m.M + k * k;
    r.B = m.s * m.s * k * k;
    r.beta2 = m.beta * m.beta;
    // A - B written so that no two large terms cancel
    const double a_minus_b = m.M * m.M + (1.0 - m.s) * (1.0 + m.s) * k * k;
    const double disc = a_minus_b * a_minus_b + 2.0 * r.beta2 * (r.A + r.B) + r.beta2 * r.beta2;
    r.split = std::sqrt(disc);
    r.xL = 0.5 * (r.A + r.B + r.beta2 + r.split);
    r.xG = r.A * r.B / r.xL;
    r.xL_minus_B = 0.5 * (a_minus_b + r.beta2 + r.split);
    r.A_minus_xG = r.A * r.xL_minus_B / r.xL;
    r.xL_minus_A = r.beta2 * r.xL / r.xL_minus_B;
    return r;
}

bool decoupled(const ModelParams& m) { return m.beta < decoupling_threshold * m.gap(); }

}  // namespace

DispersionPoint dispersion(const ModelParams& m, double k)
{
    if (decoupled(m)) {
        if (!(k >= 0.0) || !std::isfinite(k)) {
            throw std::invalid_argument("dispersion: wave number must be finite and >= 0");
        }
        // s <= 1 and M > 0 keep s k strictly below sqrt(M^2 + k^2)
        return {k, m.s * k, std::hypot(m.M, k)};
    }
    const Resolvent r = resolve(m, k);
    return {k, std::sqrt(r.xG), std::sqrt(r.xL)};
}

double dispersion_residual(const ModelParams& m, double k, double omega)
{
    const double x = omega * omega;
    const double lhs = (x - m.s * m.s * k * k) * (x - m.M * m.M - k * k);
    const double lambda2 = m.M * m.M + m.beta * m.beta;
    return (lhs - m.beta * m.beta * x) / (lambda2 * lambda2);
}

double dispersion_relative_residual(const ModelParams& m, double k, double omega)
{
    const double x = omega * omega;
    const double A = m.M * m.M + k * k;
    const double B = m.s * m.s * k * k;
    const double b2 = m.beta * m.beta;
    const double scale = x * x + x * (A + B + b2) + A * B;
    const double res = (x - B) * (x - A) - b2 * x;
    return scale > 0.0 ? res / scale : res;
}

double goldstone_group_velocity(const ModelParams& m, double k)
{
    if (decoupled(m)) {
        return m.s;
    }
    const Resolvent r = resolve(m, k);
    const double x = r.xG;
    if (k == 0.0) {
        return m.sound_speed();
    }
    // F(x, k) = (x - B)(x - A) - beta^2 x; x - B = -beta^2 x / (A - x)
    const double x_minus_B = -r.beta2 * x / r.A_minus_xG;
    const double x_minus_A = -r.A_minus_xG;
    const double dF_dk = -2.0 * m.s * m.s * k * x_minus_A - 2.0 * k * x_minus_B;
    const double dF_dx = x_minus_A + x_minus_B - r.beta2;
    return -dF_dk / dF_dx / (2.0 * std::sqrt(x));
}

ModeAmplitudes with_phases(ModeAmplitudes a, PhaseConvention phases)
{
    if (phases == PhaseConvention::printed) {
        a.pi_L = -a.pi_L;
    }
    return a;
}

GappedAmplitudes gapped_amplitudes(const ModelParams& m, double k, PhaseConvention phases)
{
    if (decoupled(m)) {
        if (!(k >= 0.0) || !std::isfinite(k)) {
            throw std::invalid_argument("gapped_amplitudes: wave number must be finite and >= 0");
        }
        return {0.0, 1.0 / std::sqrt(2.0 * std::hypot(m.M, k))};
    }
    const Resolvent r = resolve(m, k);
    const double wL = std::sqrt(r.xL);
    // (B - xG) / B = beta^2 A / (xL (A - xG)), finite at k = 0
    const double b_minus_xg_over_b = r.beta2 * r.A / (r.xL * r.A_minus_xG);
    const double pi_mag = std::sqrt(b_minus_xg_over_b * wL / (2.0 * r.split));
    const double sigma_mag = std::sqrt(r.A_minus_xG * wL / (2.0 * r.A * r.split));
    const double sign = phases == PhaseConvention::canonical ? -1.0 : 1.0;
    return {complex(0.0, sign * pi_mag), complex(sigma_mag, 0.0)};
}

ModeAmplitudes amplitudes(const ModelParams& m, double k, PhaseConvention phases)
{
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("amplitudes: wave number must be finite and > 0");
    }
    ModeAmplitudes a;
    if (decoupled(m)) {
        const DispersionPoint d = dispersion(m, k);
        a.pi_G = 1.0 / std::sqrt(2.0 * d.omega_G);
        a.sigma_L = 1.0 / std::sqrt(2.0 * d.omega_L);
        return a;
    }
    const Resolvent r = resolve(m, k);
    const double wG = std::sqrt(r.xG);
    const double wL = std::sqrt(r.xL);
    const double b_minus_xg = r.beta2 * r.xG / r.A_minus_xG;

    const double pi_G = std::sqrt(r.xL_minus_B * wG / (2.0 * r.B * r.split));
    const double pi_L = std::sqrt(b_minus_xg * wL / (2.0 * r.B * r.split));
    const double sigma_G = std::sqrt(r.xL_minus_A * wG / (2.0 * r.A * r.split));
    const double sigma_L = std::sqrt(r.A_minus_xG * wL / (2.0 * r.A * r.split));

    a.pi_G = complex(pi_G, 0.0);
    a.pi_L = complex(0.0, -pi_L);
    a.sigma_G = complex(0.0, -sigma_G);
    a.sigma_L = complex(sigma_L, 0.0);
    return with_phases(a, phases);
}

}  // namespace tcphonon
