#pragma once

#include <span>
#include <string>
#include <vector>

#include "tcphonon/model.hpp"
#include "tcphonon/rates.hpp"
#include "tcphonon/spectrum.hpp"

namespace tcphonon {

// Grid kernels come in a serial reference form and an OpenMP form; both
// produce identical output.
enum class Execution { serial, parallel };

struct RateCurve {
    std::string parameter;  // "cs" or "k"
    std::vector<double> grid;
    std::vector<double> rates;
    std::vector<double> errors;
    std::vector<bool> open;
    PhysicalParams fixed;  // cs is meaningful only for k scans
};

struct SpectrumRow {
    DispersionPoint point;
    ModeAmplitudes amps;
};

std::vector<double> linspace(double lo, double hi, int points);
std::vector<double> logspace(double lo, double hi, int points);

// Throws std::invalid_argument unless the grid is non-empty and strictly increasing.
void require_increasing(std::span<const double> grid, const std::string& name);

// Gamma(Lambda -> 2G) over cs at fixed Lambda and Omega.
RateCurve scan_lambda_rate(double Lambda, double Omega, std::span<const double> cs_grid,
                           const RateOptions& options = {}, Execution execution = Execution::parallel);

// Gamma(G -> 2G) over k, one curve per cs, at fixed Lambda and Omega.
std::vector<RateCurve> scan_g_rate(double Lambda, double Omega, std::span<const double> cs_list,
                                   std::span<const double> k_grid, const RateOptions& options = {},
                                   Execution execution = Execution::parallel);

// Interior grid points that are local minima of the rate with rate <= rel_threshold * max.
std::vector<double> interior_zeros(const RateCurve& curve, double rel_threshold = 1e-6);

std::vector<SpectrumRow> scan_spectrum(const ModelParams& m, std::span<const double> k_grid,
                                       Execution execution = Execution::parallel);

}  // namespace tcphonon
