// ppt.hpp
// Partial-transpose spectra of the invariant states ξ(λ) and the PPT test.
//
// Transposition acts on the (B, B') factors, the second party of the
// separability bipartition. Â^Γ and Ŝ^Γ are simultaneously diagonal in the
// {Φ, Φ^⊥} eigenbasis of the maximally entangled projector, so ξ^Γ has four
// eigenvalue blocks.

#pragma once

#include "wernermaps/lambda.hpp"
#include "wernermaps/tensor.hpp"

#include <array>

namespace wernermaps {

struct PptBlock {
    double eigenvalue;
    int multiplicity;
};

// Blocks ordered (Φ,Φ), (Φ,Φ^⊥), (Φ^⊥,Φ), (Φ^⊥,Φ^⊥). The (Φ,Φ) eigenvalue
// is μ^(1)·λ/d²; the mixed blocks carry μ^(3)·λ and μ^(2)·λ with positive
// constants; the last block is nonnegative for every λ >= 0.
struct PptSpectrum {
    std::array<PptBlock, 4> blocks;

    double min_eigenvalue() const;
    // Full multiset as a sorted vector of length d⁴.
    Eigen::VectorXd expanded() const;
};

// Analytic block spectrum of ξ(λ)^Γ.
PptSpectrum ppt_spectrum(const LambdaVec& lambda, int d);

// Independent numeric oracle: builds ξ, partial-transposes factors {B, B'},
// diagonalizes.
Eigen::VectorXd ppt_spectrum_numeric(const LambdaVec& lambda, int d);

bool is_ppt(const LambdaVec& lambda, int d, double tol = 1e-12);

}  // namespace wernermaps
