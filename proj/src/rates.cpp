#include "tcphonon/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tcphonon/quadrature.hpp"
#include "tcphonon/vertex.hpp"

namespace tcphonon {

namespace {

constexpr double pi = std::numbers::pi;

// points used to locate the kinematic window of G -> 2G before edge refinement
constexpr int window_scan_points = 64;

double rate_unit(const PhysicalParams& p)
{
    const double l2 = p.Lambda * p.Lambda;
    const double o2 = p.Omega * p.Omega;
    return l2 * l2 * p.Lambda / (o2 * o2);
}

double omega_G(const ModelParams& m, double k) { return dispersion(m, k).omega_G; }

}  // namespace

double rate_dimensionless(const PhysicalParams& p, double rate) { return rate / rate_unit(p); }

double lambda_threshold_momentum(const PhysicalParams& p)
{
    p.validate();
    const ModelParams m = params_from_physical(p);
    auto excess = [&](double k) { return 2.0 * omega_G(m, k) - p.Lambda; };
    double hi = p.Lambda;
    for (int i = 0; excess(hi) <= 0.0; ++i) {
        if (i > 60) {
            throw std::runtime_error("lambda_threshold_momentum: failed to bracket the threshold");
        }
        hi *= 2.0;
    }
    const double k = bisect(excess, 0.0, hi, 1e-15 * hi);
    if (std::abs(excess(k)) > 1e-12 * p.Lambda) {
        throw std::runtime_error("lambda_threshold_momentum: bisection did not reach tolerance");
    }
    return k;
}

complex lambda_decay_amplitude(const PhysicalParams& p, PhaseConvention phases)
{
    const ModelParams m = params_from_physical(p);
    const double k = lambda_threshold_momentum(p);
    const LegState parent = leg_state(m, Branch::gapped, 0.0, phases);
    const LegState child = leg_state(m, Branch::goldstone, k, phases);
    return vertex_amplitude(p, parent, child, child);
}

std::vector<double> lambda_amplitude_zeros(double Lambda, double Omega, std::span<const double> cs_grid,
                                           PhaseConvention phases)
{
    std::vector<double> zeros;
    auto signed_amplitude = [&](double cs) { return lambda_decay_amplitude({Lambda, cs, Omega}, phases).imag(); };
    for (std::size_t i = 0; i + 1 < cs_grid.size(); ++i) {
        const double a = signed_amplitude(cs_grid[i]);
        const double b = signed_amplitude(cs_grid[i + 1]);
        if (a == 0.0) {
            zeros.push_back(cs_grid[i]);
        } else if ((a > 0.0) != (b > 0.0) && b != 0.0) {
            zeros.push_back(bisect(signed_amplitude, cs_grid[i], cs_grid[i + 1], 1e-14));
        }
    }
    if (!cs_grid.empty() && signed_amplitude(cs_grid.back()) == 0.0) {
        zeros.push_back(cs_grid.back());
    }
    return zeros;
}

DecayResult rate_lambda_to_2g(const PhysicalParams& p, const RateOptions& options)
{
    p.validate();
    if (p.cs == 1.0) {
        return {0.0, true, 0.0};
    }
    const ModelParams m = params_from_physical(p);
    const double k = lambda_threshold_momentum(p);
    const complex amplitude = lambda_decay_amplitude(p, options.phases);
    const double omega = 0.5 * p.Lambda;
    const double velocity = goldstone_group_velocity(m, k);

    // Gamma = 1/S 1/(2 E) (2 pi)^-2 \int d^3q |M|^2 / (2 w 2 w) delta(Lambda - 2 w(q))
    const double measure = 4.0 * pi * k * k / ((2.0 * pi) * (2.0 * pi));
    const double norms = 2.0 * p.Lambda * (2.0 * omega) * (2.0 * omega);
    const double rate = measure / norms * std::norm(amplitude) / (2.0 * velocity) / identical_pair_symmetry;
    return {rate, true, 1e-12 * rate};
}

DecayResult rate_g_to_2g(const PhysicalParams& p, double k, const RateOptions& options)
{
    p.validate();
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("rate_g_to_2g: parent momentum must be finite and > 0");
    }
    if (p.cs == 1.0) {
        return {0.0, false, 0.0};
    }
    const ModelParams m = params_from_physical(p);
    const auto phases = options.phases;
    const LegState parent = leg_state(m, Branch::goldstone, k, phases);
    const double energy = parent.omega;

    // energy left over for the second daughter when both daughters are collinear with k
    auto collinear_excess = [&](double q) { return energy - omega_G(m, q) - omega_G(m, std::abs(k - q)); };

    std::vector<double> grid(window_scan_points + 1);
    std::vector<bool> open(window_scan_points + 1, false);
    for (int i = 0; i <= window_scan_points; ++i) {
        grid[i] = k * i / window_scan_points;
        if (i > 0 && i < window_scan_points) {
            open[i] = collinear_excess(grid[i]) > 0.0;
        }
    }

    // contiguous runs of open scan points, edges refined by bisection
    struct Window {
        double lo, hi;
    };
    std::vector<Window> windows;
    for (int i = 1; i < window_scan_points; ++i) {
        if (!open[i] || open[i - 1]) {
            continue;
        }
        int j = i;
        while (j + 1 < window_scan_points && open[j + 1]) {
            ++j;
        }
        const double edge_tol = 1e-14 * k;
        const double lo = i == 1 ? 0.0 : bisect(collinear_excess, grid[i - 1], grid[i], edge_tol);
        const double hi = j + 1 == window_scan_points ? k : bisect(collinear_excess, grid[j], grid[j + 1], edge_tol);
        windows.push_back({lo, hi});
        i = j;
    }
    if (windows.empty()) {
        return {0.0, false, 0.0};
    }

    auto integrand = [&](double q) {
        const double wq = omega_G(m, q);
        // energy mismatch is increasing in cos(theta): the second daughter shrinks
        auto mismatch = [&](double c) {
            const double p2 = std::sqrt(std::max(k * k + q * q - 2.0 * k * q * c, 0.0));
            return energy - wq - omega_G(m, p2);
        };
        if (!(mismatch(1.0) >= 0.0) || !(mismatch(-1.0) <= 0.0)) {
            return 0.0;
        }
        const double c = bisect(mismatch, -1.0, 1.0, 1e-12);
        const double q2 = std::sqrt(std::max(k * k + q * q - 2.0 * k * q * c, 0.0));
        if (q2 <= 0.0) {
            return 0.0;
        }
        const LegState first = leg_state(m, Branch::goldstone, q, phases);
        const LegState second = leg_state(m, Branch::goldstone, q2, phases);
        const double amp2 = std::norm(vertex_amplitude(p, parent, first, second));
        // |d(energy mismatch)/d cos(theta)| = w'(q2) k q / q2
        const double jacobian = goldstone_group_velocity(m, q2) * k * q / q2;
        return q * q * amp2 / (4.0 * first.omega * second.omega) / jacobian;
    };

    // Gamma = 1/S 1/(2 E) (2 pi)^-2 2 pi \int dq [...]
    const double prefactor = 1.0 / (identical_pair_symmetry * 2.0 * energy * 2.0 * pi);
    const double abs_tol = options.abs_tol * rate_unit(p) / prefactor / static_cast<double>(windows.size());

    double total = 0.0;
    double error = 0.0;
    for (const Window& w : windows) {
        // split off thin panels at the window edges, where the integrand has square-root behaviour
        const double edge = 1e-3 * (w.hi - w.lo);
        const double cuts[4] = {w.lo, w.lo + edge, w.hi - edge, w.hi};
        for (int i = 0; i < 3; ++i) {
            const QuadratureResult r = integrate_gk15(integrand, cuts[i], cuts[i + 1], abs_tol / 3.0, options.rel_tol);
            total += r.value;
            error += r.error;
        }
    }
    return {prefactor * total, true, prefactor * error};
}

}  // namespace tcphonon
