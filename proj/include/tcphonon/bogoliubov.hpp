#pragma once

#include <utility>

#include "tcphonon/spectrum.hpp"

namespace tcphonon {

// Brute-force canonical quantization of the linear equations of motion at fixed |k|.
//
// Builds the 4x4 Hamiltonian matrix in z = (pi_c, sigma, p_pi, p_sigma) with
// p_pi = pi_c' + beta sigma, p_sigma = sigma', diagonalizes J H numerically in
// extended precision and normalizes each positive-frequency eigenvector v by
// v^T J v* = i. Phases are then fixed like the canonical convention: pi_G and
// sigma_L real positive. Throws std::runtime_error if the eigensolver fails or the
// spectrum is not a pair of stable normal modes.
std::pair<DispersionPoint, ModeAmplitudes> bogoliubov_oracle(const ModelParams& m, double k);

}  // namespace tcphonon
