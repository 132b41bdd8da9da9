#include "tcphonon/eftlimit.hpp"

#include <cmath>
#include <stdexcept>

#include "tcphonon/spectrum.hpp"

namespace tcphonon {

double cs_from_alpha2(double alpha2)
{
    if (!(alpha2 > -0.5) || !std::isfinite(alpha2)) {
        throw std::invalid_argument("cs_from_alpha2: alpha2 must exceed -1/2");
    }
    return 1.0 / std::sqrt(1.0 + 2.0 * alpha2);
}

double alpha3_matched(const AlphaCouplings& a, double M, double Omega)
{
    if (!(M > 0.0) || !(Omega > 0.0)) {
        throw std::invalid_argument("alpha3_matched: M and Omega must be > 0");
    }
    const double r2 = (Omega / M) * (Omega / M);
    return a.abar3 + a.abar2p * a.abar1p * r2 + a.abar1p * a.abar1p * a.abar1pp * r2 * r2 / 2.0;
}

LongWavelengthReport verify_long_wavelength(const PhysicalParams& p)
{
    const ModelParams m = params_from_physical(p);
    LongWavelengthReport r;
    r.expected_cs = m.sound_speed();
    for (int i = 0; i < 3; ++i) {
        r.k[i] = p.Lambda * std::pow(10.0, -3 - i);
        r.phase_velocity[i] = dispersion(m, r.k[i]).omega_G / r.k[i];
        r.raw_residual[i] = r.phase_velocity[i] - r.expected_cs;
    }
    // v(k) = cs + a k^2 + b k^4 + ..., step ratio 10 between probes
    const double first_a = (100.0 * r.phase_velocity[1] - r.phase_velocity[0]) / 99.0;
    const double first_b = (100.0 * r.phase_velocity[2] - r.phase_velocity[1]) / 99.0;
    r.extrapolated_cs = (10000.0 * first_b - first_a) / 9999.0;
    r.sound_speed_residual = r.extrapolated_cs - r.expected_cs;
    r.gap_residual = m.M * m.s / r.expected_cs - m.gap();
    return r;
}

}  // namespace tcphonon
