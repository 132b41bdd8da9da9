#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcphonon/scan.hpp"

namespace tcphonon {

struct CheckResult {
    std::string name;
    double measured = 0.0;   // residual or violation count; pass iff measured <= tolerance
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct CheckOptions {
    double tolerance_scale = 1.0;  // multiplies every default tolerance
    double Lambda = 1.0;
    double Omega = 1.0;
    double kmax = 2.0;              // G -> 2G monotonicity window, units of Lambda
    int k_points = 40;
    std::vector<double> cs_list{0.35, 0.5, 0.65, 0.8, 0.95};
    std::uint64_t seed = 1;
    std::uint64_t mc_samples = 1u << 22;
    Execution execution = Execution::parallel;
};

// Runs every machine-checkable invariant of the model, spectrum, vertex, rates
// and EFT-limit modules.
std::vector<CheckResult> run_invariant_suite(const CheckOptions& options = {});

}  // namespace tcphonon
