#include "tcphonon/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcphonon {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

void ModelParams::validate() const
{
    require(std::isfinite(s) && s > 0.0 && s <= 1.0, "ModelParams: s must lie in (0, 1]");
    require(std::isfinite(beta) && beta >= 0.0, "ModelParams: beta must be >= 0");
    require(std::isfinite(M) && M > 0.0, "ModelParams: M must be > 0");
    require(std::isfinite(Omega) && Omega > 0.0, "ModelParams: Omega must be > 0");
    require(std::isfinite(gamma1) && std::isfinite(gamma2) && std::isfinite(gamma3) && std::isfinite(xi),
            "ModelParams: cubic couplings must be finite");
}

double ModelParams::gap() const { return std::hypot(M, beta); }

double ModelParams::sound_speed() const { return s * M / gap(); }

void PhysicalParams::validate() const
{
    require(std::isfinite(Lambda) && Lambda > 0.0, "PhysicalParams: Lambda must be > 0");
    require(std::isfinite(cs) && cs > 0.0 && cs <= 1.0, "PhysicalParams: cs must lie in (0, 1]");
    require(std::isfinite(Omega) && Omega > 0.0, "PhysicalParams: Omega must be > 0");
}

ModelParams params_from_physical(const PhysicalParams& p)
{
    p.validate();
    ModelParams m;
    m.s = 1.0;
    m.M = p.cs * p.Lambda;
    // (1 - cs)(1 + cs) keeps a few more bits than 1 - cs^2 near cs = 1
    m.beta = p.Lambda * std::sqrt((1.0 - p.cs) * (1.0 + p.cs));
    m.Omega = p.Omega;
    m.gamma1 = m.beta * m.beta / (2.0 * p.Omega * p.Omega);
    return m;
}

PhysicalParams physical_from_params(const ModelParams& m)
{
    m.validate();
    PhysicalParams p;
    p.Lambda = m.gap();
    p.cs = m.sound_speed();
    p.Omega = m.Omega;
    return p;
}

std::array<double, 2> background_orbit(const BackgroundOrbit& orbit, double t)
{
    const double angle = orbit.mu * t;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const auto& [x, y] = orbit.phi0;
    return {c * x - s * y, s * x + c * y};
}

}  // namespace tcphonon
