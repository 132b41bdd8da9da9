#include "tcphonon/bogoliubov.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace tcphonon {

namespace {

using real = long double;
using Matrix4 = Eigen::Matrix<real, 4, 4>;
using CVector4 = Eigen::Matrix<std::complex<real>, 4, 1>;

struct NormalMode {
    real omega;
    CVector4 vector;
};

}  // namespace

std::pair<DispersionPoint, ModeAmplitudes> bogoliubov_oracle(const ModelParams& m, double k)
{
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("bogoliubov_oracle: wave number must be finite and > 0");
    }
    const real s = m.s;
    const real beta = m.beta;
    const real mass = m.M;
    const real kk = k;

    // H = 1/2 [ (p_pi - beta sigma)^2 + s^2 k^2 pi^2 + p_sigma^2 + (M^2 + k^2) sigma^2 ]
    Matrix4 H = Matrix4::Zero();
    H(0, 0) = s * s * kk * kk;
    H(1, 1) = mass * mass + kk * kk + beta * beta;
    H(2, 2) = 1;
    H(3, 3) = 1;
    H(1, 2) = H(2, 1) = -beta;

    Matrix4 J = Matrix4::Zero();
    J(0, 2) = J(1, 3) = 1;
    J(2, 0) = J(3, 1) = -1;

    Eigen::EigenSolver<Matrix4> solver(J * H);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("bogoliubov_oracle: eigensolver failed");
    }

    // z(t) = v exp(-i w t) is an eigenvector with eigenvalue -i w
    std::array<NormalMode, 2> modes{};
    int found = 0;
    const real scale = std::max<real>(H.cwiseAbs().maxCoeff(), 1);
    for (int i = 0; i < 4; ++i) {
        const std::complex<real> lambda = solver.eigenvalues()(i);
        if (std::abs(lambda.real()) > 1e-12L * std::sqrt(scale) + 1e-12L * std::abs(lambda)) {
            throw std::runtime_error("bogoliubov_oracle: unstable or non-normal mode");
        }
        if (lambda.imag() >= 0) {
            continue;
        }
        if (found == 2) {
            throw std::runtime_error("bogoliubov_oracle: unexpected spectrum");
        }
        modes[found++] = {-lambda.imag(), solver.eigenvectors().col(i)};
    }
    if (found != 2) {
        throw std::runtime_error("bogoliubov_oracle: unexpected spectrum");
    }
    std::sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) { return a.omega < b.omega; });

    for (auto& mode : modes) {
        const CVector4 Jv = J.cast<std::complex<real>>() * mode.vector.conjugate();
        const std::complex<real> norm = mode.vector.transpose() * Jv;
        if (!(norm.imag() > 0)) {
            throw std::runtime_error("bogoliubov_oracle: negative symplectic norm for a positive frequency");
        }
        mode.vector /= std::sqrt(norm.imag());
    }

    // pi_G real positive; sigma_L real positive
    auto fix_phase = [](CVector4& v, int component) {
        const std::complex<real> c = v(component);
        if (std::abs(c) > 0) {
            v *= std::conj(c) / std::abs(c);
        }
    };
    fix_phase(modes[0].vector, 0);
    fix_phase(modes[1].vector, 1);

    auto to_double = [](std::complex<real> z) {
        return complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    };
    DispersionPoint point{k, static_cast<double>(modes[0].omega), static_cast<double>(modes[1].omega)};
    ModeAmplitudes amps;
    amps.pi_G = to_double(modes[0].vector(0));
    amps.sigma_G = to_double(modes[0].vector(1));
    amps.pi_L = to_double(modes[1].vector(0));
    amps.sigma_L = to_double(modes[1].vector(1));
    return {point, amps};
}

}  // namespace tcphonon
