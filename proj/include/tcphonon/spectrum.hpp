#pragma once

#include <complex>

#include "tcphonon/model.hpp"

namespace tcphonon {

using complex = std::complex<double>;

struct DispersionPoint {
    double k = 0.0;
    double omega_G = 0.0;  // gapless (acoustic) branch
    double omega_L = 0.0;  // gapped (optical) branch
};

// Fock-space amplitudes of pi_c and sigma on both branches at fixed |k|, for
// modes multiplying a_a(k) exp(i(k.x - omega_a t)).
struct ModeAmplitudes {
    complex pi_G;
    complex pi_L;
    complex sigma_G;
    complex sigma_L;
};

struct GappedAmplitudes {
    complex pi;
    complex sigma;
};

// Relative phases between the pi and sigma components of each mode.
//
// canonical: fixed by the linear equations of motion,
//   sigma_a = -i (s^2 k^2 - omega_a^2) pi_a / (beta omega_a),
//   with pi_G and sigma_L real positive (pi_L, sigma_G negative imaginary).
//   All equal-time commutators take their canonical values.
// printed: pi_L = +i|pi_L|, sigma_G = -i|sigma_G| as in the reference closed
//   forms. Same magnitudes; [pi_c, sigma] != 0.
enum class PhaseConvention { canonical, printed };

// Both branches of the characteristic equation
//   (w^2 - s^2 k^2)(w^2 - M^2 - k^2) = beta^2 w^2.
// Throws std::invalid_argument for k < 0.
DispersionPoint dispersion(const ModelParams& m, double k);

// Left minus right side of the characteristic equation, divided by Lambda^4.
double dispersion_residual(const ModelParams& m, double k, double omega);

// Residual divided by the sum of magnitudes of the expanded polynomial terms;
// O(machine epsilon) at a root independently of the scale of k.
double dispersion_relative_residual(const ModelParams& m, double k, double omega);

// d omega_G / dk, by implicit differentiation of the characteristic equation.
double goldstone_group_velocity(const ModelParams& m, double k);

// Requires k > 0: the Goldstone amplitude diverges as 1/sqrt(k).
ModeAmplitudes amplitudes(const ModelParams& m, double k,
                          PhaseConvention phases = PhaseConvention::canonical);

// Gapped-branch amplitudes only; finite at k = 0.
GappedAmplitudes gapped_amplitudes(const ModelParams& m, double k,
                                   PhaseConvention phases = PhaseConvention::canonical);

// Rewrites canonical-convention amplitudes into the printed convention.
ModeAmplitudes with_phases(ModeAmplitudes a, PhaseConvention phases);

}  // namespace tcphonon
