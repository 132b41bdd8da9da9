#include "tcphonon/mc_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tcphonon/vertex.hpp"

namespace tcphonon {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int width_count = 4;
constexpr double gaussian_cutoff = 8.0;  // in widths
constexpr std::uint64_t chunk_size = 1u << 15;

// Lagrange weights extrapolating f(h) to h = 0 from three nodes h_j = w_j^2.
std::array<double, 3> extrapolation_weights(const std::array<double, 3>& w)
{
    std::array<double, 3> c{};
    for (int j = 0; j < 3; ++j) {
        double v = 1.0;
        for (int i = 0; i < 3; ++i) {
            if (i != j) {
                const double hi = w[i] * w[i];
                const double hj = w[j] * w[j];
                v *= (0.0 - hi) / (hj - hi);
            }
        }
        c[j] = v;
    }
    return c;
}

struct Sums {
    std::array<double, width_count> smeared{};
    double extrap = 0.0;
    double extrap_sq = 0.0;
    double halved = 0.0;
    double halved_sq = 0.0;

    void add(const Sums& o)
    {
        for (int j = 0; j < width_count; ++j) {
            smeared[j] += o.smeared[j];
        }
        extrap += o.extrap;
        extrap_sq += o.extrap_sq;
        halved += o.halved;
        halved_sq += o.halved_sq;
    }
};

struct Sampler {
    PhysicalParams physical;
    ModelParams model;
    ProcessDescriptor process;
    PhaseConvention phases;
    double parent_energy;
    LegState parent;
    double r_lo, r_hi;
    double volume;         // of the Lambda -> 2G sampling shell
    double normalization;  // 1 / (S 2E (2 pi)^2)
    std::array<double, width_count> widths;
    std::array<double, 3> weights_full, weights_halved;

    Sums run_chunk(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk, std::uint64_t count) const
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                          static_cast<std::uint32_t>(process.process), static_cast<std::uint32_t>(chunk),
                          static_cast<std::uint32_t>(chunk >> 32)};
        std::mt19937_64 engine(seq);
        auto uniform = [&engine] { return std::generate_canonical<double, 53>(engine); };

        const double r3_lo = r_lo * r_lo * r_lo;
        const double r3_hi = r_hi * r_hi * r_hi;
        const double cutoff = gaussian_cutoff * widths[0];
        const double parent_k = process.parent_momentum;
        Sums sums;
        for (std::uint64_t n = 0; n < count; ++n) {
            double k1 = 0.0;
            double k2 = 0.0;
            double weight = 1.0;  // phase-space volume / sampling density
            if (process.process == Process::lambda_to_2g) {
                // uniform in the spherical shell, daughters back to back
                const double r = std::cbrt(r3_lo + (r3_hi - r3_lo) * uniform());
                const double cos_t = 2.0 * uniform() - 1.0;
                const double phi = 2.0 * pi * uniform();
                const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
                const Vec3 q{r * sin_t * std::cos(phi), r * sin_t * std::sin(phi), r * cos_t};
                k1 = norm(q);
                k2 = norm(Vec3{-q[0], -q[1], -q[2]});
                weight = volume;
            } else {
                // d^3q = (q q2 / k) dq dq2 dphi with q2 = |k - q|; q uniform on (0, r_hi],
                // q2 uniform where the widest Gaussian can be nonzero
                const double q = r_hi * (1.0 - uniform());
                const double e1 = dispersion(model, q).omega_G;
                const double lo_energy = parent_energy - e1 - cutoff;
                const double hi_energy = parent_energy - e1 + cutoff;
                if (hi_energy <= 0.0) {
                    continue;
                }
                const double lo = std::max(std::abs(parent_k - q),
                                           lo_energy > 0.0 ? goldstone_momentum_for_energy(model, lo_energy) : 0.0);
                const double hi = std::min(parent_k + q, goldstone_momentum_for_energy(model, hi_energy));
                if (!(hi > lo)) {
                    continue;
                }
                const double q2 = lo + (hi - lo) * uniform();
                const double phi = 2.0 * pi * uniform();
                // rebuild the vectors and take |k - q| from the geometry
                const double cos_t = std::clamp((parent_k * parent_k + q * q - q2 * q2) / (2.0 * parent_k * q), -1.0, 1.0);
                const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
                const Vec3 first{q * sin_t * std::cos(phi), q * sin_t * std::sin(phi), q * cos_t};
                const Vec3 second{-first[0], -first[1], parent_k - first[2]};
                k1 = norm(first);
                k2 = norm(second);
                weight = 2.0 * pi * r_hi * (hi - lo) * q * q2 / parent_k;
            }
            if (!(k1 > 0.0) || !(k2 > 0.0)) {
                continue;
            }
            const double e1 = dispersion(model, k1).omega_G;
            const double e2 = dispersion(model, k2).omega_G;
            const double mismatch = parent_energy - e1 - e2;
            if (std::abs(mismatch) > cutoff) {
                continue;
            }
            const LegState first = leg_state(model, Branch::goldstone, k1, phases);
            const LegState second = leg_state(model, Branch::goldstone, k2, phases);
            const double amp2 = std::norm(vertex_amplitude(physical, parent, first, second));
            const double f = weight * normalization * amp2 / (4.0 * e1 * e2);

            std::array<double, width_count> y{};
            for (int j = 0; j < width_count; ++j) {
                const double u = mismatch / widths[j];
                y[j] = std::abs(u) > gaussian_cutoff
                     ? 0.0
                     : f * std::exp(-0.5 * u * u) / (widths[j] * std::sqrt(2.0 * pi));
                sums.smeared[j] += y[j];
            }
            const double full = weights_full[0] * y[0] + weights_full[1] * y[1] + weights_full[2] * y[2];
            const double halved = weights_halved[0] * y[1] + weights_halved[1] * y[2] + weights_halved[2] * y[3];
            sums.extrap += full;
            sums.extrap_sq += full * full;
            sums.halved += halved;
            sums.halved_sq += halved * halved;
        }
        return sums;
    }
};

}  // namespace

double goldstone_momentum_for_energy(const ModelParams& m, double energy)
{
    if (!(energy >= 0.0) || !std::isfinite(energy)) {
        throw std::invalid_argument("goldstone_momentum_for_energy: energy must be finite and >= 0");
    }
    // The characteristic equation at fixed x = w^2 is quadratic in P = k^2:
    //   s^2 P^2 - (x (1 + s^2) - s^2 M^2) P + x (x - Lambda^2) = 0,
    // and the Goldstone branch is the larger root.
    const double x = energy * energy;
    const double s2 = m.s * m.s;
    const double lambda2 = m.M * m.M + m.beta * m.beta;
    const double b = x * (1.0 + s2) - s2 * m.M * m.M;
    const double c = x * (x - lambda2);
    const double root = std::sqrt(std::max(0.0, b * b - 4.0 * s2 * c));
    const double P = b >= 0.0 ? (b + root) / (2.0 * s2) : 2.0 * c / (b - root);
    return std::sqrt(std::max(0.0, P));
}

McResult mc_rate_oracle(const PhysicalParams& p, const ProcessDescriptor& process, const McOptions& options)
{
    p.validate();
    if (options.samples == 0 || !(options.width > 0.0)) {
        throw std::invalid_argument("mc_rate_oracle: need a positive sample count and width");
    }
    if (process.process == Process::g_to_2g && !(process.parent_momentum > 0.0)) {
        throw std::invalid_argument("mc_rate_oracle: Goldstone parent momentum must be > 0");
    }
    McResult out;
    out.result.kinematically_open = true;
    if (p.cs == 1.0) {
        out.widths.assign(width_count, 0.0);
        out.smeared_rates.assign(width_count, 0.0);
        out.converged = true;
        return out;
    }

    Sampler s;
    s.physical = p;
    s.model = params_from_physical(p);
    s.process = process;
    s.phases = options.phases;
    if (process.process == Process::lambda_to_2g) {
        s.parent = leg_state(s.model, Branch::gapped, 0.0, options.phases);
    } else {
        s.parent = leg_state(s.model, Branch::goldstone, process.parent_momentum, options.phases);
    }
    s.parent_energy = s.parent.omega;
    // energy scale over which the final-state energy varies near the shell
    double scale = s.parent_energy;
    if (process.process == Process::g_to_2g) {
        const double half = 0.5 * process.parent_momentum;
        scale = s.parent_energy - 2.0 * dispersion(s.model, half).omega_G;
        if (!(scale > 0.0)) {
            scale = s.parent_energy;
        }
    }
    for (int j = 0; j < width_count; ++j) {
        s.widths[j] = options.width * scale / std::ldexp(1.0, j);
    }
    const double reach = gaussian_cutoff * s.widths[0];
    if (process.process == Process::lambda_to_2g) {
        // back-to-back daughters: 2 w(|q|) within the smearing window of Lambda
        const double lo_energy = 0.5 * (s.parent_energy - reach);
        s.r_lo = lo_energy > 0.0 ? goldstone_momentum_for_energy(s.model, lo_energy) : 0.0;
        s.r_hi = goldstone_momentum_for_energy(s.model, 0.5 * (s.parent_energy + reach));
    } else {
        s.r_lo = 0.0;
        s.r_hi = goldstone_momentum_for_energy(s.model, s.parent_energy + reach);
    }
    s.volume = 4.0 * pi / 3.0 * (std::pow(s.r_hi, 3) - std::pow(s.r_lo, 3));
    s.normalization = 1.0 / (identical_pair_symmetry * 2.0 * s.parent_energy * 4.0 * pi * pi);
    s.weights_full = extrapolation_weights({s.widths[0], s.widths[1], s.widths[2]});
    s.weights_halved = extrapolation_weights({s.widths[1], s.widths[2], s.widths[3]});

    const std::uint64_t chunks = (options.samples + chunk_size - 1) / chunk_size;
    std::vector<Sums> partial(chunks);
    auto run = [&](std::uint64_t c) {
        const std::uint64_t begin = c * chunk_size;
        const std::uint64_t count = std::min(chunk_size, options.samples - begin);
        partial[c] = s.run_chunk(options.seed, options.stream, c, count);
    };
    const auto n = static_cast<std::int64_t>(chunks);
    if (options.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < n; ++c) {
            run(static_cast<std::uint64_t>(c));
        }
    } else {
        for (std::int64_t c = 0; c < n; ++c) {
            run(static_cast<std::uint64_t>(c));
        }
    }
    Sums total;
    for (const Sums& part : partial) {
        total.add(part);
    }

    const double count = static_cast<double>(options.samples);
    auto mean_and_error = [count](double sum, double sum_sq) {
        const double mean = sum / count;
        const double var = std::max(0.0, sum_sq / count - mean * mean);
        return std::pair{mean, std::sqrt(var / count)};
    };
    const auto [rate, error] = mean_and_error(total.extrap, total.extrap_sq);
    const auto [halved, halved_error] = mean_and_error(total.halved, total.halved_sq);

    out.widths.assign(s.widths.begin(), s.widths.end());
    for (int j = 0; j < width_count; ++j) {
        out.smeared_rates.push_back(total.smeared[j] / count);
    }
    out.result = {std::max(rate, 0.0), true, error};
    out.halved_rate = halved;
    out.halving_shift = rate != 0.0 ? std::abs(halved - rate) / std::abs(rate) : 0.0;
    const bool statistically_zero = std::abs(rate) <= 3.0 * error && std::abs(halved) <= 3.0 * halved_error;
    out.converged = out.halving_shift < 0.005 || statistically_zero;
    return out;
}

}  // namespace tcphonon
