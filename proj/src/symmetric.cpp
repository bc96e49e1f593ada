#include "wernermaps/symmetric.hpp"

#include <stdexcept>

namespace wernermaps {

WernerParam::WernerParam(int d_, double nu_) : d(d_), nu(nu_) {
    if (d < 2) throw std::invalid_argument("WernerParam: d must be >= 2");
    if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("WernerParam: nu must be in [0,1]");
}

Matrix flip(int d) {
    Matrix f = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
    return f;
}

Projectors projectors(int d) {
    const Matrix f = flip(d);
    const Matrix id = Matrix::Identity(d * d, d * d);
    return {(id + f) / 2.0, (id - f) / 2.0};
}

Matrix max_entangled_projector(int d) {
    Vector phi = Vector::Zero(d * d);
    for (int k = 0; k < d; ++k) phi(k * d + k) = 1.0;
    phi /= std::sqrt(static_cast<double>(d));
    return phi * phi.adjoint();
}

Matrix werner_state(const WernerParam& p) {
    const auto [s, a] = projectors(p.d);
    const double tr_s = p.d * (p.d + 1) / 2.0;
    const double tr_a = p.d * (p.d - 1) / 2.0;
    return p.nu * (a / tr_a) + (1.0 - p.nu) * (s / tr_s);
}

WernerParam twirl_exact(const Matrix& rho, int d, double tol) {
    if (rho.rows() != d * d || rho.cols() != d * d) {
        throw std::invalid_argument("twirl_exact: dimension mismatch");
    }
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) {
        throw std::invalid_argument("twirl_exact: input must have unit trace");
    }
    const auto [s, a] = projectors(d);
    (void)s;
    return WernerParam(d, std::clamp((rho * a).trace().real(), 0.0, 1.0));
}

Matrix twirl_mc(const Matrix& rho, int d, int samples, Rng& rng) {
    if (samples < 1) throw std::invalid_argument("twirl_mc: samples must be >= 1");
    Matrix acc = Matrix::Zero(d * d, d * d);
    for (int n = 0; n < samples; ++n) {
        const Matrix u = haar_unitary(d, rng);
        const Matrix uu = kron(u, u);
        acc += uu * rho * uu.adjoint();
    }
    return acc / static_cast<double>(samples);
}

namespace {

std::array<Matrix, 4> commutant_projectors(int d) {
    const auto [s, a] = projectors(d);
    return {kron(a, a), kron(a, s), kron(s, a), kron(s, s)};
}

}  // namespace

LambdaVec double_twirl(const Matrix& rho4, int d, double tol) {
    const int dim = d * d * d * d;
    if (rho4.rows() != dim || rho4.cols() != dim) {
        throw std::invalid_argument("double_twirl: dimension mismatch");
    }
    if (std::abs(rho4.trace().real() - 1.0) > tol || std::abs(rho4.trace().imag()) > tol) {
        throw std::invalid_argument("double_twirl: input must have unit trace");
    }
    const auto p = commutant_projectors(d);
    LambdaVec lambda;
    for (int i = 0; i < 4; ++i) lambda[i] = (rho4 * p[static_cast<size_t>(i)]).trace().real();
    return lambda;
}

Matrix double_twirl_mc(const Matrix& rho4, int d, int samples, Rng& rng) {
    if (samples < 1) throw std::invalid_argument("double_twirl_mc: samples must be >= 1");
    const int dim = d * d * d * d;
    Matrix acc = Matrix::Zero(dim, dim);
    for (int n = 0; n < samples; ++n) {
        const Matrix u = haar_unitary(d, rng);
        const Matrix v = haar_unitary(d, rng);
        const Matrix g = kron(kron(u, u), kron(v, v));
        acc += g * rho4 * g.adjoint();
    }
    return acc / static_cast<double>(samples);
}

Matrix symmetric_state(const LambdaVec& lambda, int d) {
    require_normalized(lambda);
    const auto p = commutant_projectors(d);
    const double tr_a = d * (d - 1) / 2.0;
    const double tr_s = d * (d + 1) / 2.0;
    const std::array<double, 4> norms = {tr_a * tr_a, tr_a * tr_s, tr_s * tr_a, tr_s * tr_s};
    Matrix xi = Matrix::Zero(d * d * d * d, d * d * d * d);
    for (int i = 0; i < 4; ++i) {
        xi += (lambda[i] / norms[static_cast<size_t>(i)]) * p[static_cast<size_t>(i)];
    }
    return xi;
}

Vector depolarization_product_input(int d) {
    // (A,B,A',B') ordering: component (k, s, k, s) gets weight 1/d.
    Vector chi = Vector::Zero(d * d * d * d);
    for (int k = 0; k < d; ++k)
        for (int s = 0; s < d; ++s) chi(((k * d + s) * d + k) * d + s) = 1.0 / d;
    return chi;
}

}  // namespace wernermaps
