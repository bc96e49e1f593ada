// symmetric.hpp
// The commutant algebra of U⊗U: flip operator, symmetric/antisymmetric
// projectors, Werner states, exact and Monte-Carlo twirls, and the two-pair
// double twirl.

#pragma once

#include "wernermaps/lambda.hpp"
#include "wernermaps/tensor.hpp"

namespace wernermaps {

// A Werner state ω_ν on two d-dimensional systems. Separable iff ν <= 1/2.
struct WernerParam {
    int d = 2;
    double nu = 0.0;

    WernerParam() = default;
    WernerParam(int d_, double nu_);

    bool separable() const { return nu <= 0.5; }
};

// Swap of two d-dimensional factors: F|ψφ⟩ = |φψ⟩.
Matrix flip(int d);

// Symmetric and antisymmetric projectors S = (I+F)/2, A = (I-F)/2.
struct Projectors {
    Matrix sym;
    Matrix antisym;
};
Projectors projectors(int d);

// Normalized maximally-entangled projector on d⊗d.
Matrix max_entangled_projector(int d);

// ω_ν = ν Â + (1-ν) Ŝ.
Matrix werner_state(const WernerParam& p);

// Projection onto the Werner family: ν = tr(ρA). Requires unit trace.
WernerParam twirl_exact(const Matrix& rho, int d, double tol = 1e-8);

// Monte-Carlo average of (U⊗U) ρ (U⊗U)† over N Haar samples.
Matrix twirl_mc(const Matrix& rho, int d, int samples, Rng& rng);

// Two-pair commutant projection of a unit-trace state on (A,B,A',B'):
// λ_i = tr(ρ P_i) with P_i ∈ {A⊗A, A⊗S, S⊗A, S⊗S}.
LambdaVec double_twirl(const Matrix& rho4, int d, double tol = 1e-8);

// Monte-Carlo average of (U⊗U⊗V⊗V) ρ (·)† over N independent (U,V) pairs.
Matrix double_twirl_mc(const Matrix& rho4, int d, int samples, Rng& rng);

// The invariant state ξ(λ) = Σ λ_i P̂_i on (A,B,A',B').
Matrix symmetric_state(const LambdaVec& lambda, int d);

// The paper-noted product input (1/d) Σ_{ks} |ks⟩_{AB}|ks⟩_{A'B'}, as a unit
// norm vector in (A,B,A',B') ordering. Its double twirl is the depolarization
// vertex λ^(5).
Vector depolarization_product_input(int d);

}  // namespace wernermaps
