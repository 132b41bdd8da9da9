#pragma once

#include <array>

#include "tcphonon/model.hpp"
#include "tcphonon/spectrum.hpp"

namespace tcphonon {

enum class Branch { goldstone, gapped };

using Vec3 = std::array<double, 3>;

struct Leg {
    Branch branch = Branch::goldstone;
    Vec3 momentum{0.0, 0.0, 0.0};
};

double norm(const Vec3& v);

// lambda in S_int = -lambda \int pi~^2 sigma~:
// (Lambda^3 / 4 Omega^2) cs^3 (cs^-2 - 1)^(1/2). Vanishes at cs = 1.
double cubic_coupling(const PhysicalParams& p);

// Tree-level amplitude for parent -> child1 + child2 from the pi~^2 sigma~ vertex,
//
//   M = -i (Lambda^3/Omega^2) cs^3 (cs^-2 - 1)^(1/2) sqrt(2 w_a w_b w_c)
//       [ sigma_a pi_b* pi_c* + sigma_b* pi_a pi_c* + sigma_c* pi_b* pi_a ]
//
// for any branch labels (a = parent, b, c = children; the outgoing legs are
// conjugated). Amplitudes depend only on |momentum|; a gapped leg may be at rest,
// a Goldstone leg may not. Requires parent = child1 + child2 to 1e-10 relative
// (std::invalid_argument otherwise). The default phase convention is the printed
// one, which reproduces the vanishing of the at-rest gapped decay at cs^2 = 3/8;
// with canonical phases that amplitude has no zero.
complex matrix_element(const PhysicalParams& p, const Leg& parent, const Leg& child1, const Leg& child2,
                       PhaseConvention phases = PhaseConvention::printed);

// The same amplitude using precomputed leg data; no momentum check.
struct LegState {
    double omega;
    complex pi;
    complex sigma;
};

LegState leg_state(const ModelParams& m, Branch branch, double k, PhaseConvention phases);

complex vertex_amplitude(const PhysicalParams& p, const LegState& parent, const LegState& child1,
                         const LegState& child2);

}  // namespace tcphonon
