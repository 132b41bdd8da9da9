#include "tcphonon/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "tcphonon/bogoliubov.hpp"
#include "tcphonon/eftlimit.hpp"
#include "tcphonon/mc_oracle.hpp"
#include "tcphonon/rates.hpp"
#include "tcphonon/vertex.hpp"

namespace tcphonon {

namespace {

class Suite {
public:
    explicit Suite(double scale) : scale_(scale) {}

    void record(std::string name, double measured, double default_tol, std::string detail = {})
    {
        const double tol = default_tol * scale_;
        const bool ok = std::isfinite(measured) && measured <= tol;
        results_.push_back({std::move(name), measured, tol, ok, std::move(detail)});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    double scale_;
    std::vector<CheckResult> results_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double crel(complex a, complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string describe(const char* label, double value)
{
    std::ostringstream out;
    out.precision(6);
    out << label << value;
    return out.str();
}

struct Draws {
    std::vector<PhysicalParams> physical;
};

Draws draw_parameters(std::uint64_t seed, int count, double Omega)
{
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> cs(0.05, 0.95);
    std::uniform_real_distribution<double> log_lambda(std::log(0.5), std::log(2.0));
    Draws d;
    for (int i = 0; i < count; ++i) {
        d.physical.push_back({std::exp(log_lambda(engine)), cs(engine), Omega});
    }
    return d;
}

void model_checks(Suite& suite, const CheckOptions& o, const Draws& draws)
{
    double round_trip = 0.0;
    for (const auto& p : draws.physical) {
        const PhysicalParams back = physical_from_params(params_from_physical(p));
        round_trip = std::max({round_trip, rel(back.Lambda, p.Lambda), rel(back.cs, p.cs), rel(back.Omega, p.Omega)});
        const ModelParams m = params_from_physical(p);
        const ModelParams again = params_from_physical(physical_from_params(m));
        round_trip = std::max({round_trip, std::abs(again.M - m.M) / p.Lambda, std::abs(again.beta - m.beta) / p.Lambda});
    }
    suite.record("model.round_trip", round_trip, 1e-14);

    BackgroundOrbit orbit{1.7, {0.6, -0.8}};
    double drift = 0.0;
    for (double t : {0.0, 1.0, 17.3, 250.0, 4999.0, 1e4 / 1.7}) {
        const auto phi = background_orbit(orbit, t);
        drift = std::max(drift, std::abs(std::hypot(phi[0], phi[1]) - 1.0));
    }
    suite.record("model.orbit_norm", drift, 1e-14);

    std::mt19937_64 engine(o.seed + 11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double excess = 0.0;
    for (int i = 0; i < 200; ++i) {
        ModelParams m;
        m.s = 0.05 + 0.95 * unit(engine);
        m.M = 0.1 + 3.0 * unit(engine);
        m.beta = 3.0 * unit(engine);
        excess = std::max(excess, m.sound_speed() - m.s);
    }
    suite.record("model.cs_not_above_s", std::max(excess, 0.0), 0.0);
}

void spectrum_checks(Suite& suite, const CheckOptions& o, const Draws& draws)
{
    double residual = 0.0, vieta_sum = 0.0, vieta_product = 0.0;
    double sum_pi = 0.0, sum_sigma = 0.0, sum_im = 0.0, sum_re = 0.0, oracle = 0.0;
    int non_monotone = 0;
    const auto grid = logspace(1e-3, 1e3, 50);
    for (const auto& p : draws.physical) {
        const ModelParams m = params_from_physical(p);
        const double L2 = p.Lambda * p.Lambda;
        DispersionPoint prev{};
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double k = grid[i] * p.Lambda;
            const DispersionPoint d = dispersion(m, k);
            residual = std::max({residual, std::abs(dispersion_relative_residual(m, k, d.omega_G)),
                                 std::abs(dispersion_relative_residual(m, k, d.omega_L))});
            const double xg = d.omega_G * d.omega_G, xl = d.omega_L * d.omega_L;
            vieta_sum = std::max(vieta_sum, rel(xg + xl, L2 + k * k * (1.0 + m.s * m.s)));
            vieta_product = std::max(vieta_product, rel(xg * xl, m.s * m.s * k * k * (m.M * m.M + k * k)));
            if (i > 0 && !(d.omega_G > prev.omega_G && d.omega_L > prev.omega_L)) {
                ++non_monotone;
            }
            prev = d;

            const ModeAmplitudes a = amplitudes(m, k);
            const double wg = d.omega_G, wl = d.omega_L;
            sum_pi = std::max(sum_pi, std::abs(2 * wg * std::norm(a.pi_G) + 2 * wl * std::norm(a.pi_L) - 1.0));
            sum_sigma = std::max(sum_sigma, std::abs(2 * wg * std::norm(a.sigma_G) + 2 * wl * std::norm(a.sigma_L) - 1.0));
            const complex cg = a.pi_G * std::conj(a.sigma_G), cl = a.pi_L * std::conj(a.sigma_L);
            sum_im = std::max(sum_im, std::abs(cg.imag() + cl.imag()));
            sum_re = std::max(sum_re, std::abs(cg.real() * wg + cl.real() * wl));

            const auto [od, oa] = bogoliubov_oracle(m, k);
            oracle = std::max({oracle, rel(od.omega_G, d.omega_G), rel(od.omega_L, d.omega_L), crel(oa.pi_G, a.pi_G),
                               crel(oa.pi_L, a.pi_L), crel(oa.sigma_G, a.sigma_G), crel(oa.sigma_L, a.sigma_L)});
        }
    }
    suite.record("spectrum.dispersion_residual", residual, 1e-12);
    suite.record("spectrum.vieta_sum", vieta_sum, 1e-12);
    suite.record("spectrum.vieta_product", vieta_product, 1e-12);
    suite.record("spectrum.monotonic_branches", non_monotone, 0.0, "violations on a 50-point log grid");
    suite.record("spectrum.sum_rule_pi", sum_pi, 1e-10);
    suite.record("spectrum.sum_rule_sigma", sum_sigma, 1e-10);
    suite.record("spectrum.sum_rule_im_pi_sigma", sum_im, 1e-10);
    suite.record("spectrum.sum_rule_re_pi_sigma_omega", sum_re, 1e-10);
    suite.record("spectrum.oracle_agreement", oracle, 1e-8, "closed form vs symplectic diagonalization");

    double long_wave = 0.0;
    for (const auto& p : draws.physical) {
        const ModelParams m = params_from_physical(p);
        const double k = 1e-6 * p.Lambda;
        long_wave = std::max({long_wave, rel(dispersion(m, k).omega_G / k, p.cs),
                              rel(dispersion(m, 0.0).omega_L, p.Lambda)});
    }
    suite.record("spectrum.long_wavelength_limits", long_wave, 1e-9);

    double decoupling = 0.0;
    for (double k : {1e-3, 0.5, 2.0, 40.0}) {
        const ModelParams m = params_from_physical({o.Lambda, 1.0, o.Omega});
        const DispersionPoint d = dispersion(m, k);
        const ModeAmplitudes a = amplitudes(m, k);
        decoupling = std::max({decoupling, std::abs(a.pi_L), std::abs(a.sigma_G),
                               crel(a.pi_G, 1.0 / std::sqrt(2.0 * d.omega_G)),
                               crel(a.sigma_L, 1.0 / std::sqrt(2.0 * d.omega_L))});
    }
    suite.record("spectrum.beta_zero_decoupling", decoupling, 1e-15);
}

Vec3 rotate(const Vec3& v, double yaw, double pitch)
{
    const double cy = std::cos(yaw), sy = std::sin(yaw), cp = std::cos(pitch), sp = std::sin(pitch);
    const Vec3 a{cy * v[0] - sy * v[1], sy * v[0] + cy * v[1], v[2]};
    return {a[0], cp * a[1] - sp * a[2], sp * a[1] + cp * a[2]};
}

void vertex_checks(Suite& suite, const CheckOptions& o)
{
    const PhysicalParams p{o.Lambda, 0.5, o.Omega};
    const Leg parent{Branch::goldstone, {0.1, 0.2, 1.0}};
    const Leg c1{Branch::goldstone, {0.3, -0.1, 0.4}};
    const Leg c2{Branch::goldstone, {parent.momentum[0] - c1.momentum[0], parent.momentum[1] - c1.momentum[1],
                                     parent.momentum[2] - c1.momentum[2]}};
    const complex base = matrix_element(p, parent, c1, c2);
    double rotation = 0.0;
    for (auto [yaw, pitch] : {std::pair{0.3, 1.1}, std::pair{2.0, -0.7}, std::pair{-1.4, 2.9}}) {
        const complex r = matrix_element(p, {parent.branch, rotate(parent.momentum, yaw, pitch)},
                                         {c1.branch, rotate(c1.momentum, yaw, pitch)},
                                         {c2.branch, rotate(c2.momentum, yaw, pitch)});
        rotation = std::max(rotation, crel(r, base));
    }
    suite.record("vertex.rotation_invariance", rotation, 1e-12);
    suite.record("vertex.bose_symmetry", crel(matrix_element(p, parent, c2, c1), base), 1e-15);

    const PhysicalParams scaled{p.Lambda, p.cs, 3.0 * p.Omega};
    suite.record("vertex.omega_scaling", crel(9.0 * matrix_element(scaled, parent, c1, c2), base), 1e-13);

    const auto zeros = lambda_amplitude_zeros(o.Lambda, o.Omega, linspace(0.05, 0.99, 95));
    const double expected = std::sqrt(3.0 / 8.0);
    double location = zeros.size() == 1 ? std::abs(zeros[0] - expected) : INFINITY;
    suite.record("vertex.lambda_decay_zero_location", location, 5e-3,
                 describe("zeros found: ", static_cast<double>(zeros.size())));
}

void rate_checks(Suite& suite, const CheckOptions& o)
{
    const RateOptions ro;
    const auto cs_grid = linspace(0.05, 0.99, 95);
    const RateCurve curve = scan_lambda_rate(o.Lambda, o.Omega, cs_grid, ro, o.execution);
    const double peak = *std::max_element(curve.rates.begin(), curve.rates.end());
    const double lowest = *std::min_element(curve.rates.begin(), curve.rates.end());
    suite.record("rates.lambda_nonnegative", std::max(-lowest, 0.0), 0.0);
    const auto zeros = lambda_amplitude_zeros(o.Lambda, o.Omega, cs_grid);
    suite.record("rates.lambda_single_interior_zero", std::abs(static_cast<double>(zeros.size()) - 1.0), 0.0);
    const double at_one = rate_lambda_to_2g({o.Lambda, 1.0, o.Omega}).rate;
    const double near_zero = rate_lambda_to_2g({o.Lambda, 1e-2, o.Omega}).rate;
    suite.record("rates.lambda_vanishes_at_cs_one", std::abs(at_one) / peak, 0.0);
    suite.record("rates.lambda_vanishes_as_cs_to_zero", near_zero / peak, 1e-6, "Gamma(cs=0.01) / max");

    const double small_k = rate_g_to_2g({o.Lambda, 0.5, o.Omega}, 1e-4 * o.Lambda).rate;
    suite.record("rates.g_vanishes_as_k_to_zero", small_k / o.Lambda, 1e-12, "Gamma(k=1e-4 Lambda) / Lambda");

    std::vector<double> k_grid = linspace(o.kmax * o.Lambda / o.k_points, o.kmax * o.Lambda, o.k_points);
    const auto curves = scan_g_rate(o.Lambda, o.Omega, o.cs_list, k_grid, ro, o.execution);
    for (const RateCurve& c : curves) {
        double worst_drop = 0.0;
        double turnover = NAN;
        for (std::size_t i = 1; i < c.rates.size(); ++i) {
            const double drop = (c.rates[i - 1] - c.rates[i]) / c.rates[i - 1];
            if (drop > worst_drop) {
                worst_drop = drop;
            }
            if (drop > 0.0 && std::isnan(turnover)) {
                turnover = c.grid[i - 1];
            }
        }
        std::ostringstream name;
        name << "rates.g_nondecreasing_in_k[cs=" << c.fixed.cs << "]";
        suite.record(name.str(), worst_drop, 0.0,
                     std::isnan(turnover) ? "non-decreasing on the grid" : describe("peaks near k/Lambda = ", turnover / o.Lambda));
    }

    double omega_scaling = 0.0;
    for (const PhysicalParams& base : {PhysicalParams{o.Lambda, 0.5, o.Omega}, PhysicalParams{o.Lambda, 0.8, o.Omega}}) {
        PhysicalParams scaled = base;
        scaled.Omega *= 2.0;
        omega_scaling = std::max(omega_scaling, rel(16.0 * rate_lambda_to_2g(scaled).rate, rate_lambda_to_2g(base).rate));
        omega_scaling = std::max(omega_scaling,
                                 rel(16.0 * rate_g_to_2g(scaled, o.Lambda).rate, rate_g_to_2g(base, o.Lambda).rate));
    }
    suite.record("rates.omega_scaling", omega_scaling, 1e-12);

    double halving = 0.0;
    std::vector<RateOptions> ladder{ro};
    for (double rel_tol : {3e-2, 1e-2, 3e-3, 1e-3, 1e-4}) {
        ladder.push_back({1e-14, rel_tol, ro.phases});
    }
    for (const RateOptions& base : ladder) {
        for (double cs : {0.35, 0.65, 0.95}) {
            RateOptions tight = base;
            tight.rel_tol *= 0.5;
            tight.abs_tol *= 0.5;
            const DecayResult a = rate_g_to_2g({o.Lambda, cs, o.Omega}, o.Lambda, base);
            const DecayResult b = rate_g_to_2g({o.Lambda, cs, o.Omega}, o.Lambda, tight);
            halving = std::max(halving, std::abs(a.rate - b.rate) / std::max(a.estimated_error, 1e-300));
        }
    }
    suite.record("rates.tolerance_halving_within_error", halving, 1.0, "|change| / estimated_error");

    McOptions mc;
    mc.seed = o.seed;
    mc.samples = o.mc_samples;
    mc.execution = o.execution;
    const PhysicalParams p{o.Lambda, 0.5, o.Omega};
    const McResult lam = mc_rate_oracle(p, {Process::lambda_to_2g, 0.0}, mc);
    suite.record("rates.mc_agreement_lambda_to_2g", rel(lam.result.rate, rate_lambda_to_2g(p).rate), 0.01);
    mc.stream = 1;
    const McResult gold = mc_rate_oracle(p, {Process::g_to_2g, o.Lambda}, mc);
    suite.record("rates.mc_agreement_g_to_2g", rel(gold.result.rate, rate_g_to_2g(p, o.Lambda).rate), 0.01);
    suite.record("rates.mc_width_halving", std::max(lam.halving_shift, gold.halving_shift), 0.005);
}

void eft_checks(Suite& suite, const CheckOptions& o)
{
    int violations = 0;
    double prev = cs_from_alpha2(-0.49);
    for (double a : linspace(-0.48, 50.0, 200)) {
        const double cs = cs_from_alpha2(a);
        violations += cs < prev ? 0 : 1;
        prev = cs;
    }
    suite.record("eft.cs_decreasing_in_alpha2", violations, 0.0);

    double sound = 0.0, gap = 0.0, scaling = 0.0;
    for (double cs : {0.2, 0.5, 0.8}) {
        const LongWavelengthReport r = verify_long_wavelength({o.Lambda, cs, o.Omega});
        sound = std::max(sound, std::abs(r.sound_speed_residual));
        gap = std::max(gap, std::abs(r.gap_residual) / o.Lambda);
        scaling = std::max({scaling, std::abs(r.raw_residual[0] / r.raw_residual[1] / 100.0 - 1.0),
                            std::abs(r.raw_residual[1] / r.raw_residual[2] / 100.0 - 1.0)});
    }
    suite.record("eft.extrapolated_sound_speed", sound, 1e-6);
    suite.record("eft.gap_identity", gap, 1e-14);
    suite.record("eft.residual_scales_as_k2", scaling, 1e-3);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const CheckOptions& options)
{
    Suite suite(options.tolerance_scale);
    const Draws draws = draw_parameters(options.seed, 10, options.Omega);
    model_checks(suite, options, draws);
    spectrum_checks(suite, options, draws);
    vertex_checks(suite, options);
    rate_checks(suite, options);
    eft_checks(suite, options);
    return suite.take();
}

}  // namespace tcphonon
