// witness.hpp
// The three entanglement witnesses dual to the separability polytope, the
// product-state trace identities, and numerical positivity certification
// over the product manifold.
//
// Operators are stored in (A, B, A', B') ordering; the witness bipartition
// is (A,A')|(B,B'), so product states |α⟩_{AA'}|β⟩_{BB'} are embedded by an
// explicit factor interleaving.

#pragma once

#include "wernermaps/polytope.hpp"
#include "wernermaps/tensor.hpp"

namespace wernermaps {

// A product state across (A,A')|(B,B'): |α⟩ = Σ α_ij |i⟩_A|j⟩_{A'} with
// coefficient matrices of unit Frobenius norm, likewise |β⟩ on (B,B').
struct ProductVector {
    Matrix alpha;
    Matrix beta;

    ProductVector(Matrix a, Matrix b);

    // The joint vector in (A, B, A', B') factor ordering.
    Vector as_state(int d) const;
};

ProductVector random_product_vector(int d, Rng& rng);

// W^(1) = F⊗F, W^(2) = dI⊗F - F⊗F, W^(3) = dF⊗I - F⊗F, tensor slots across
// (AB)(A'B'). Equal (not merely proportional) to the projector form below.
Matrix witness_operator(int i, int d);

// W_μ = μ1 A⊗A + μ2 A⊗S + μ3 S⊗A + μ4 S⊗S, satisfying tr(ξ(λ) W_μ) = μ·λ.
Matrix witness_from_facet(const FacetVec& facet, int d);

// ⟨αβ|W^(i)|αβ⟩ via the trace identities:
//   I⊗F -> tr(α†α β†β),  F⊗I -> tr(αα† ββ†),  F⊗F -> |tr(αβ†)|².
double product_expectation(int i, const ProductVector& p, int d);

// Same expectation evaluated against the full witness matrix; independent
// code path used to cross-check the identities.
double product_expectation_matrix(int i, const ProductVector& p, int d);

struct MinResult {
    double value;
    ProductVector argmin;
};

// Minimum of product_expectation over Gaussian-random product vectors.
MinResult random_product_min(int i, int d, int samples, Rng& rng);

// Derivative-free local descent on the product manifold (random perturbation
// with shrinking step, renormalizing after each move). Never increases the
// value.
MinResult refine_min(int i, int d, const ProductVector& start, int iterations,
                     Rng& rng);

}  // namespace wernermaps
