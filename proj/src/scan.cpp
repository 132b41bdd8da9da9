#include "tcphonon/scan.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tcphonon {

namespace {

// Runs body(i) for i in [0, n). The lowest failing index is rethrown after the
// loop, prefixed with describe(i); exceptions never leave an OpenMP region.
template <class Body, class Describe>
void for_each_point(std::size_t n, Execution execution, Describe describe, Body body)
{
    std::vector<std::exception_ptr> failures(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                failures[i] = std::current_exception();
                break;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!failures[i]) {
            continue;
        }
        const std::string where = "scan failed at " + describe(i) + ": ";
        try {
            std::rethrow_exception(failures[i]);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error(where + e.what());
        }
    }
}

std::string format_value(const char* name, double v)
{
    std::ostringstream out;
    out.precision(17);
    out << name << " = " << v;
    return out.str();
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int points)
{
    if (points < 1) {
        throw std::invalid_argument("linspace: need at least one point");
    }
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < points; ++i) {
        out[i] = lo + (hi - lo) * i / (points - 1);
    }
    out.back() = hi;
    return out;
}

std::vector<double> logspace(double lo, double hi, int points)
{
    if (!(lo > 0.0) || !(hi > 0.0)) {
        throw std::invalid_argument("logspace: bounds must be positive");
    }
    std::vector<double> out = linspace(std::log(lo), std::log(hi), points);
    for (double& v : out) {
        v = std::exp(v);
    }
    out.front() = lo;
    if (points > 1) {
        out.back() = hi;
    }
    return out;
}

void require_increasing(std::span<const double> grid, const std::string& name)
{
    if (grid.empty()) {
        throw std::invalid_argument(name + " grid is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) {
            throw std::invalid_argument(name + " grid contains a non-finite value");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument(name + " grid must be strictly increasing");
        }
    }
}

RateCurve scan_lambda_rate(double Lambda, double Omega, std::span<const double> cs_grid, const RateOptions& options,
                           Execution execution)
{
    require_increasing(cs_grid, "cs");
    RateCurve curve;
    curve.parameter = "cs";
    curve.grid.assign(cs_grid.begin(), cs_grid.end());
    curve.rates.resize(cs_grid.size());
    curve.errors.resize(cs_grid.size());
    curve.open.resize(cs_grid.size());
    curve.fixed = {Lambda, std::numeric_limits<double>::quiet_NaN(), Omega};

    std::vector<char> open(cs_grid.size());
    auto describe = [&](std::size_t i) { return format_value("cs", cs_grid[i]); };
    for_each_point(cs_grid.size(), execution, describe, [&](std::size_t i) {
        const DecayResult r = rate_lambda_to_2g({Lambda, cs_grid[i], Omega}, options);
        curve.rates[i] = r.rate;
        curve.errors[i] = r.estimated_error;
        open[i] = r.kinematically_open;
    });
    for (std::size_t i = 0; i < open.size(); ++i) {
        curve.open[i] = open[i] != 0;
    }
    return curve;
}

std::vector<RateCurve> scan_g_rate(double Lambda, double Omega, std::span<const double> cs_list,
                                   std::span<const double> k_grid, const RateOptions& options, Execution execution)
{
    require_increasing(k_grid, "k");
    if (cs_list.empty()) {
        throw std::invalid_argument("cs list is empty");
    }
    const std::size_t nk = k_grid.size();
    std::vector<RateCurve> curves(cs_list.size());
    for (std::size_t c = 0; c < cs_list.size(); ++c) {
        curves[c].parameter = "k";
        curves[c].grid.assign(k_grid.begin(), k_grid.end());
        curves[c].rates.resize(nk);
        curves[c].errors.resize(nk);
        curves[c].fixed = {Lambda, cs_list[c], Omega};
    }
    // one flat index space so that every (cs, k) point is a separate task
    std::vector<char> open(cs_list.size() * nk);
    auto describe = [&](std::size_t i) {
        return format_value("cs", cs_list[i / nk]) + ", " + format_value("k", k_grid[i % nk]);
    };
    for_each_point(open.size(), execution, describe, [&](std::size_t i) {
        const std::size_t c = i / nk;
        const std::size_t j = i % nk;
        const DecayResult r = rate_g_to_2g({Lambda, cs_list[c], Omega}, k_grid[j], options);
        curves[c].rates[j] = r.rate;
        curves[c].errors[j] = r.estimated_error;
        open[i] = r.kinematically_open;
    });
    for (std::size_t c = 0; c < cs_list.size(); ++c) {
        curves[c].open.resize(nk);
        for (std::size_t j = 0; j < nk; ++j) {
            curves[c].open[j] = open[c * nk + j] != 0;
        }
    }
    return curves;
}

std::vector<double> interior_zeros(const RateCurve& curve, double rel_threshold)
{
    std::vector<double> out;
    if (curve.rates.size() < 3) {
        return out;
    }
    double peak = 0.0;
    for (double r : curve.rates) {
        peak = std::max(peak, r);
    }
    for (std::size_t i = 1; i + 1 < curve.rates.size(); ++i) {
        const double r = curve.rates[i];
        if (r <= curve.rates[i - 1] && r <= curve.rates[i + 1] && r <= rel_threshold * peak) {
            out.push_back(curve.grid[i]);
        }
    }
    return out;
}

std::vector<SpectrumRow> scan_spectrum(const ModelParams& m, std::span<const double> k_grid, Execution execution)
{
    m.validate();
    require_increasing(k_grid, "k");
    std::vector<SpectrumRow> rows(k_grid.size());
    auto describe = [&](std::size_t i) { return format_value("k", k_grid[i]); };
    for_each_point(k_grid.size(), execution, describe, [&](std::size_t i) {
        rows[i].point = dispersion(m, k_grid[i]);
        rows[i].amps = amplitudes(m, k_grid[i]);
    });
    return rows;
}

}  // namespace tcphonon
