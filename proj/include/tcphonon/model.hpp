#pragma once

#include <array>

namespace tcphonon {

// Couplings of the quadratic + cubic two-field action (canonical Goldstone pi_c
// and orthogonal field sigma). gamma2, gamma3 and xi do not enter the quadratic
// sector.
struct ModelParams {
    double s = 1.0;      // gradient coefficient of pi_c, 0 < s <= 1
    double beta = 0.0;   // pi_c-sigma mixing, mass units
    double M = 1.0;      // sigma mass parameter
    double Omega = 1.0;  // symmetry-breaking scale
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
    double xi = 0.0;

    // Throws std::invalid_argument if an invariant is violated.
    void validate() const;

    double gap() const;          // sqrt(M^2 + beta^2)
    double sound_speed() const;  // s M / sqrt(M^2 + beta^2)
};

// The three independent parameters of the SO(2)-symmetric model.
struct PhysicalParams {
    double Lambda = 1.0;  // gap of the optical branch
    double cs = 1.0;      // Goldstone sound speed
    double Omega = 1.0;

    void validate() const;
};

// s = 1, M = cs Lambda, beta = Lambda sqrt(1 - cs^2), gamma1 = beta^2 / (2 Omega^2),
// gamma2 = gamma3 = xi = 0.
ModelParams params_from_physical(const PhysicalParams& p);

PhysicalParams physical_from_params(const ModelParams& m);

// Uniform rotation of the background field around the SO(2) axis.
struct BackgroundOrbit {
    double mu = 0.0;
    std::array<double, 2> phi0{1.0, 0.0};
};

// exp(mu t Q) phi0 with Q the generator of SO(2).
std::array<double, 2> background_orbit(const BackgroundOrbit& orbit, double t);

}  // namespace tcphonon
