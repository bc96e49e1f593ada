#include "wernermaps/choi.hpp"

#include <stdexcept>

namespace wernermaps {

CovariantMap::CovariantMap(int d_, LambdaVec l) : d(d_), lambda(l) {
    if (d < 2) throw std::invalid_argument("CovariantMap: d must be >= 2");
    require_normalized(lambda);
}

Matrix choi_state(const CovariantMap& m) { return symmetric_state(m.lambda, m.d); }

ApplyResult apply_via_choi(const Matrix& xi, const Matrix& rho_in, int d) {
    const int d2 = d * d;
    if (rho_in.rows() != d2 || rho_in.cols() != d2) {
        throw std::invalid_argument("apply_via_choi: input dimension mismatch");
    }
    if (xi.rows() != d2 * d2 || xi.cols() != d2 * d2) {
        throw std::invalid_argument("apply_via_choi: Choi state dimension mismatch");
    }
    // Transposition in the computational product basis of the input pair.
    const Matrix contracted = xi * kron(rho_in.transpose(), Matrix::Identity(d2, d2));
    Matrix out = partial_trace(contracted, shape_four(d), {2, 3});
    const double weight = out.trace().real();
    if (weight <= 1e-14) {
        throw std::domain_error("apply_via_choi: map annihilates the input");
    }
    out /= weight;
    return {std::move(out), weight};
}

TracePreserving is_trace_preserving(const CovariantMap& m, double tol) {
    const auto& l = m.lambda;
    const double residual =
        std::abs((m.d + 1) * (l[0] + l[1]) - (m.d - 1) * (l[2] + l[3]));
    return {residual <= tol, residual};
}

}  // namespace wernermaps
