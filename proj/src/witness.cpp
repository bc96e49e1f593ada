#include "wernermaps/witness.hpp"

#include "wernermaps/symmetric.hpp"

#include <stdexcept>

namespace wernermaps {

ProductVector::ProductVector(Matrix a, Matrix b)
    : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.rows() != alpha.cols() || beta.rows() != beta.cols() ||
        alpha.rows() != beta.rows()) {
        throw std::invalid_argument("ProductVector: coefficient matrices must be square, same size");
    }
    const double na = alpha.norm();
    const double nb = beta.norm();
    if (na <= 0.0 || nb <= 0.0) {
        throw std::invalid_argument("ProductVector: zero coefficient matrix");
    }
    alpha /= na;
    beta /= nb;
}

Vector ProductVector::as_state(int d) const {
    if (alpha.rows() != d) throw std::invalid_argument("ProductVector: dimension mismatch");
    // |ψ⟩ = Σ α_ij β_kl |i⟩_A |k⟩_B |j⟩_{A'} |l⟩_{B'}
    Vector psi(d * d * d * d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l)
                    psi(((i * d + k) * d + j) * d + l) = alpha(i, j) * beta(k, l);
    return psi;
}

ProductVector random_product_vector(int d, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(d, d), b(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            a(i, j) = Complex(gauss(rng), gauss(rng));
            b(i, j) = Complex(gauss(rng), gauss(rng));
        }
    return {std::move(a), std::move(b)};
}

Matrix witness_operator(int i, int d) {
    const Matrix f = flip(d);
    const Matrix id = Matrix::Identity(d * d, d * d);
    switch (i) {
        case 1: return kron(f, f);
        case 2: return static_cast<double>(d) * kron(id, f) - kron(f, f);
        case 3: return static_cast<double>(d) * kron(f, id) - kron(f, f);
        default: throw std::invalid_argument("witness_operator: index must be 1, 2 or 3");
    }
}

Matrix witness_from_facet(const FacetVec& facet, int d) {
    const auto [s, a] = projectors(d);
    return facet.mu(0) * kron(a, a) + facet.mu(1) * kron(a, s) +
           facet.mu(2) * kron(s, a) + facet.mu(3) * kron(s, s);
}

double product_expectation(int i, const ProductVector& p, int d) {
    const Matrix& a = p.alpha;
    const Matrix& b = p.beta;
    const double i_f = ((a.adjoint() * a) * (b.adjoint() * b)).trace().real();
    const double f_i = ((a * a.adjoint()) * (b * b.adjoint())).trace().real();
    const double f_f = std::norm((a * b.adjoint()).trace());
    switch (i) {
        case 1: return f_f;
        case 2: return d * i_f - f_f;
        case 3: return d * f_i - f_f;
        default: throw std::invalid_argument("product_expectation: index must be 1, 2 or 3");
    }
}

double product_expectation_matrix(int i, const ProductVector& p, int d) {
    const Vector psi = p.as_state(d);
    return (psi.adjoint() * witness_operator(i, d) * psi)(0).real();
}

MinResult random_product_min(int i, int d, int samples, Rng& rng) {
    if (samples < 1) throw std::invalid_argument("random_product_min: samples must be >= 1");
    ProductVector best = random_product_vector(d, rng);
    double best_val = product_expectation(i, best, d);
    for (int n = 1; n < samples; ++n) {
        ProductVector candidate = random_product_vector(d, rng);
        const double val = product_expectation(i, candidate, d);
        if (val < best_val) {
            best_val = val;
            best = std::move(candidate);
        }
    }
    return {best_val, std::move(best)};
}

MinResult refine_min(int i, int d, const ProductVector& start, int iterations,
                     Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ProductVector current = start;
    double value = product_expectation(i, current, d);
    double step = 0.3;
    int rejected = 0;
    for (int it = 0; it < iterations; ++it) {
        Matrix da(d, d), db(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                da(r, c) = Complex(gauss(rng), gauss(rng));
                db(r, c) = Complex(gauss(rng), gauss(rng));
            }
        ProductVector candidate(current.alpha + step * da, current.beta + step * db);
        const double val = product_expectation(i, candidate, d);
        if (val < value) {
            value = val;
            current = std::move(candidate);
            rejected = 0;
        } else if (++rejected >= 20) {
            step *= 0.5;
            rejected = 0;
            if (step < 1e-10) break;
        }
    }
    return {value, std::move(current)};
}

}  // namespace wernermaps
