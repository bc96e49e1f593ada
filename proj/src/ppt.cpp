#include "wernermaps/ppt.hpp"

#include "wernermaps/symmetric.hpp"

#include <algorithm>

namespace wernermaps {

double PptSpectrum::min_eigenvalue() const {
    double m = blocks[0].eigenvalue;
    for (const auto& b : blocks) m = std::min(m, b.eigenvalue);
    return m;
}

Eigen::VectorXd PptSpectrum::expanded() const {
    int total = 0;
    for (const auto& b : blocks) total += b.multiplicity;
    Eigen::VectorXd out(total);
    int at = 0;
    for (const auto& b : blocks) {
        for (int k = 0; k < b.multiplicity; ++k) out(at++) = b.eigenvalue;
    }
    std::sort(out.data(), out.data() + out.size());
    return out;
}

PptSpectrum ppt_spectrum(const LambdaVec& lambda, int d) {
    require_normalized(lambda);
    const double dd = d;
    // Â^Γ eigenvalues: -1/d on Φ, 1/(d(d-1)) on Φ^⊥.
    // Ŝ^Γ eigenvalues: +1/d on Φ, 1/(d(d+1)) on Φ^⊥.
    const double a_phi = -1.0 / dd, a_perp = 1.0 / (dd * (dd - 1.0));
    const double s_phi = 1.0 / dd, s_perp = 1.0 / (dd * (dd + 1.0));
    const int m = d * d - 1;

    const auto block = [&](double first_a, double first_s, double second_a,
                           double second_s) {
        return lambda[0] * first_a * second_a + lambda[1] * first_a * second_s +
               lambda[2] * first_s * second_a + lambda[3] * first_s * second_s;
    };

    PptSpectrum spec;
    spec.blocks[0] = {block(a_phi, s_phi, a_phi, s_phi), 1};
    spec.blocks[1] = {block(a_phi, s_phi, a_perp, s_perp), m};
    spec.blocks[2] = {block(a_perp, s_perp, a_phi, s_phi), m};
    spec.blocks[3] = {block(a_perp, s_perp, a_perp, s_perp), m * m};
    return spec;
}

Eigen::VectorXd ppt_spectrum_numeric(const LambdaVec& lambda, int d) {
    require_normalized(lambda);
    const Matrix xi = symmetric_state(lambda, d);
    const Matrix gamma = partial_transpose(xi, shape_four(d), {1, 3});
    return spectral(gamma);
}

bool is_ppt(const LambdaVec& lambda, int d, double tol) {
    return ppt_spectrum(lambda, d).min_eigenvalue() >= -tol;
}

}  // namespace wernermaps
