#pragma once

#include <cstdint>
#include <vector>

#include "tcphonon/rates.hpp"
#include "tcphonon/scan.hpp"

namespace tcphonon {

enum class Process { lambda_to_2g, g_to_2g };

struct ProcessDescriptor {
    Process process = Process::lambda_to_2g;
    double parent_momentum = 0.0;  // |k| of the decaying Goldstone; ignored for the at-rest gapped parent
};

struct McOptions {
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;           // independent substream, e.g. a grid index
    std::uint64_t samples = 1u << 23;
    // Largest smearing width, relative to the energy scale of the process: the
    // parent energy for Lambda -> 2G, the collinear energy excess
    // w(k) - 2 w(k/2) for G -> 2G.
    double width = 0.02;
    PhaseConvention phases = PhaseConvention::printed;
    Execution execution = Execution::parallel;
};

struct McResult {
    DecayResult result;                 // extrapolated from widths w, w/2, w/4
    std::vector<double> widths;         // absolute smearing widths w, w/2, w/4, w/8
    std::vector<double> smeared_rates;  // rate at each width
    double halved_rate = 0.0;           // extrapolated from w/2, w/4, w/8
    double halving_shift = 0.0;         // |halved_rate - rate| / rate
    bool converged = false;             // halving_shift < 0.5% (or both rates statistically zero)
};

// Monte-Carlo estimate of a tree-level decay rate. Samples the first daughter
// momentum uniformly in 3D over the region the smeared energy delta can reach,
// with a Gaussian energy delta of several widths evaluated on common samples,
// and extrapolates the width to zero. Deterministic for fixed seed and stream,
// independent of thread count.
McResult mc_rate_oracle(const PhysicalParams& p, const ProcessDescriptor& process, const McOptions& options = {});

// Inverse of the Goldstone dispersion, k with omega_G(k) = energy.
double goldstone_momentum_for_energy(const ModelParams& m, double energy);

}  // namespace tcphonon
