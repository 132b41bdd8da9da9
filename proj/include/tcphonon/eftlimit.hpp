#pragma once

#include <array>

#include "tcphonon/model.hpp"

namespace tcphonon {

// Single-field EFT coefficients and the values at sigma = 0 of the sigma-dependent
// functions of the two-field theory (primes are derivatives in sigma/Omega).
struct AlphaCouplings {
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double abar1p = 0.0;
    double abar2p = 0.0;
    double abar1pp = 0.0;
    double abar3 = 0.0;
};

// 1/cs^2 = 1 + 2 alpha2. Throws std::invalid_argument for alpha2 <= -1/2.
double cs_from_alpha2(double alpha2);

// alpha3 after integrating out sigma at long wavelength.
double alpha3_matched(const AlphaCouplings& a, double M, double Omega);

struct LongWavelengthReport {
    std::array<double, 3> k{};                   // probe wave numbers, 1e-3, 1e-4, 1e-5 Lambda
    std::array<double, 3> phase_velocity{};      // omega_G(k) / k
    std::array<double, 3> raw_residual{};        // omega_G(k) / k - cs
    double extrapolated_cs = 0.0;                // Richardson extrapolation to k -> 0
    double expected_cs = 0.0;                    // s M / sqrt(M^2 + beta^2)
    double sound_speed_residual = 0.0;           // extrapolated_cs - expected_cs
    double gap_residual = 0.0;                   // M s / cs - sqrt(M^2 + beta^2)
};

LongWavelengthReport verify_long_wavelength(const PhysicalParams& p);

}  // namespace tcphonon
