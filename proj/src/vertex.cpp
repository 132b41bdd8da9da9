#include "tcphonon/vertex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tcphonon {

double norm(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

namespace {

// (Lambda^3 / Omega^2) cs^3 (cs^-2 - 1)^(1/2) = (Lambda^3 / Omega^2) cs^2 sqrt(1 - cs^2)
double amplitude_prefactor(const PhysicalParams& p)
{
    const double lambda3 = p.Lambda * p.Lambda * p.Lambda;
    return lambda3 / (p.Omega * p.Omega) * p.cs * p.cs * std::sqrt((1.0 - p.cs) * (1.0 + p.cs));
}

}  // namespace

double cubic_coupling(const PhysicalParams& p)
{
    p.validate();
    return 0.25 * amplitude_prefactor(p);
}

LegState leg_state(const ModelParams& m, Branch branch, double k, PhaseConvention phases)
{
    const DispersionPoint d = dispersion(m, k);
    if (branch == Branch::gapped) {
        const GappedAmplitudes g = gapped_amplitudes(m, k, phases);
        return {d.omega_L, g.pi, g.sigma};
    }
    const ModeAmplitudes a = amplitudes(m, k, phases);
    return {d.omega_G, a.pi_G, a.sigma_G};
}

complex vertex_amplitude(const PhysicalParams& p, const LegState& a, const LegState& b, const LegState& c)
{
    const complex bracket = a.sigma * std::conj(b.pi) * std::conj(c.pi)
                          + std::conj(b.sigma) * a.pi * std::conj(c.pi)
                          + std::conj(c.sigma) * std::conj(b.pi) * a.pi;
    const double energies = std::sqrt(2.0 * a.omega * b.omega * c.omega);
    return complex(0.0, -1.0) * amplitude_prefactor(p) * energies * bracket;
}

complex matrix_element(const PhysicalParams& p, const Leg& parent, const Leg& child1, const Leg& child2,
                       PhaseConvention phases)
{
    p.validate();
    Vec3 mismatch{};
    for (int i = 0; i < 3; ++i) {
        mismatch[i] = parent.momentum[i] - child1.momentum[i] - child2.momentum[i];
    }
    const double scale = std::max({norm(parent.momentum), norm(child1.momentum), norm(child2.momentum)});
    if (norm(mismatch) > 1e-10 * scale) {
        throw std::invalid_argument("matrix_element: momentum is not conserved");
    }
    const ModelParams m = params_from_physical(p);
    const LegState a = leg_state(m, parent.branch, norm(parent.momentum), phases);
    const LegState b = leg_state(m, child1.branch, norm(child1.momentum), phases);
    const LegState c = leg_state(m, child2.branch, norm(child2.momentum), phases);
    return vertex_amplitude(p, a, b, c);
}

}  // namespace tcphonon
