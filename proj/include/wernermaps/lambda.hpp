// lambda.hpp
// The four-component weight vector parameterizing U⊗U⊗V⊗V-invariant states
// (and, through the Choi correspondence, covariant maps).

#pragma once

#include <Eigen/Dense>
#include <array>
#include <stdexcept>

namespace wernermaps {

// Weights (λ1..λ4) on the four commutant blocks A⊗A, A⊗S, S⊗A, S⊗S.
// Normalized form has λ_i >= 0 and Σλ_i = 1; unnormalized values are only
// allowed transiently (construct then call normalized()).
struct LambdaVec {
    std::array<double, 4> v{};

    LambdaVec() = default;
    LambdaVec(double l1, double l2, double l3, double l4) : v{l1, l2, l3, l4} {}

    double operator[](int i) const { return v[static_cast<size_t>(i)]; }
    double& operator[](int i) { return v[static_cast<size_t>(i)]; }

    double sum() const { return v[0] + v[1] + v[2] + v[3]; }

    bool is_normalized(double tol = 1e-10) const {
        for (double x : v)
            if (x < -tol) return false;
        return std::abs(sum() - 1.0) <= tol;
    }

    LambdaVec normalized() const {
        const double s = sum();
        if (s <= 0.0) throw std::invalid_argument("LambdaVec: nonpositive total weight");
        return {v[0] / s, v[1] / s, v[2] / s, v[3] / s};
    }

    Eigen::Vector4d as_vector() const { return {v[0], v[1], v[2], v[3]}; }

    friend bool operator==(const LambdaVec&, const LambdaVec&) = default;
};

inline void require_normalized(const LambdaVec& l, double tol = 1e-10) {
    if (!l.is_normalized(tol)) {
        throw std::invalid_argument("LambdaVec must be normalized");
    }
}

}  // namespace wernermaps
