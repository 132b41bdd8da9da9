#pragma once

#include <span>
#include <vector>

#include "tcphonon/model.hpp"
#include "tcphonon/spectrum.hpp"

namespace tcphonon {

struct DecayResult {
    double rate = 0.0;  // mass units
    bool kinematically_open = false;
    double estimated_error = 0.0;  // absolute
};

struct RateOptions {
    double abs_tol = 1e-10;  // in units of Lambda^5 / Omega^4
    double rel_tol = 1e-6;
    PhaseConvention phases = PhaseConvention::printed;
};

// Identical-particle factor for two Goldstones in the final state.
inline constexpr double identical_pair_symmetry = 2.0;

// Figure normalizations, only meaningful for Omega = Lambda.
inline constexpr double fig1_rate_unit = 3.5e-4;
inline constexpr double fig2_rate_unit = 4e-5;

// Gamma Omega^4 / Lambda^5.
double rate_dimensionless(const PhysicalParams& p, double rate);

// Root of 2 omega_G(k) = Lambda, by bracketing bisection to |2 omega_G - Lambda| <= 1e-12 Lambda.
double lambda_threshold_momentum(const PhysicalParams& p);

// Matrix element of an at-rest gapped mode into two back-to-back Goldstones at
// the threshold momentum. Purely imaginary in both phase conventions.
complex lambda_decay_amplitude(const PhysicalParams& p, PhaseConvention phases = PhaseConvention::printed);

// Zeros in cs of the at-rest gapped decay amplitude: sign changes of Im M on
// the grid, refined by bisection.
std::vector<double> lambda_amplitude_zeros(double Lambda, double Omega, std::span<const double> cs_grid,
                                           PhaseConvention phases = PhaseConvention::printed);

// Golden-rule rate of an at-rest gapped mode into two Goldstones.
DecayResult rate_lambda_to_2g(const PhysicalParams& p, const RateOptions& options = {});

// Golden-rule rate of a Goldstone of momentum k into two Goldstones. The
// two-body phase space is reduced to a quadrature over the first daughter
// momentum q, with the opening angle fixed by energy conservation.
DecayResult rate_g_to_2g(const PhysicalParams& p, double k, const RateOptions& options = {});

}  // namespace tcphonon
