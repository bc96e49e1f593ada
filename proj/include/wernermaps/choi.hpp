// choi.hpp
// Choi correspondence between U⊗U⊗V⊗V-covariant maps and the invariant
// states ξ(λ); map application through the Choi state; trace-preservation.
//
// Convention: Choi states live on (A, B, A', B') with (A,B) the input pair
// and (A',B') the output pair, and are normalized to unit trace. The success
// weight of a stochastic map is surfaced as the pre-normalization output
// trace.

#pragma once

#include "wernermaps/lambda.hpp"
#include "wernermaps/symmetric.hpp"
#include "wernermaps/tensor.hpp"

namespace wernermaps {

struct CovariantMap {
    int d = 2;
    LambdaVec lambda;

    CovariantMap() = default;
    CovariantMap(int d_, LambdaVec l);
};

// ξ(λ) = λ1 Â⊗Â + λ2 Â⊗Ŝ + λ3 Ŝ⊗Â + λ4 Ŝ⊗Ŝ, first slot on the input pair.
Matrix choi_state(const CovariantMap& m);

struct ApplyResult {
    Matrix output;   // unit-trace state on the output pair
    double weight;   // pre-normalization trace (success weight)
};

// E(ρ) ∝ tr_in[ξ (ρ^T ⊗ I_out)], renormalized to unit trace. Throws if the
// map annihilates the input (zero output trace).
ApplyResult apply_via_choi(const Matrix& xi, const Matrix& rho_in, int d);

struct TracePreserving {
    bool preserving;
    double residual;  // |(d+1)(λ1+λ2) - (d-1)(λ3+λ4)|
};

// tr_out ξ ∝ I, equivalently (d+1)(λ1+λ2) = (d-1)(λ3+λ4).
TracePreserving is_trace_preserving(const CovariantMap& m, double tol = 1e-10);

}  // namespace wernermaps
