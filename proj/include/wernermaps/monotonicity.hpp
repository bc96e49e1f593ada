// monotonicity.hpp
// The Werner-parameter monotonicity result: closed-form ν', verification
// that maps inside the separability polytope never increase ν on the
// entangled range, and explicit violations outside the polytope.

#pragma once

#include "wernermaps/lambda.hpp"
#include "wernermaps/tensor.hpp"

#include <vector>

namespace wernermaps {

struct MonotonicityRecord {
    LambdaVec lambda;
    double nu = 0.0;
    double nu_prime = 0.0;
    double eta = 0.0;  // (1-ν)/ν
    bool member = false;
    std::vector<double> margins;  // facet margins of lambda
};

// Closed-form output Werner parameter when the map λ acts on ω_ν:
//   ν' = [ν λ1/(d(d-1)) + (1-ν) λ3/(d(d+1))] / normalizer.
// Throws when the map annihilates the input (zero normalizer).
double nu_prime(const LambdaVec& lambda, double nu, int d);

// Pre-normalization output trace (success weight) of the same action.
double success_weight(const LambdaVec& lambda, double nu, int d);

struct MonotonicityReport {
    int d = 0;
    long samples = 0;
    long violations = 0;
    double worst_margin = 0.0;       // min over samples of (ν - ν')
    double acceptance_rate = 0.0;    // of the rejection sampler on the simplex
    bool inequality_chain_ok = true; // (d-1)(ηλ4 - η²λ3) + (d+1)(λ2 - ηλ1) >= -tol
};

// Rejection-samples λ uniformly from P and ν from [1/2, 1]; checks
// ν' <= ν + tol on every draw.
MonotonicityReport verify_monotonicity(int d, long samples, Rng& rng,
                                       double tol = 1e-12);

// Canonical non-member counterexample: λ = (1,0,0,0) pumps any ν > 0 to
// ν' = 1 with positive success weight.
MonotonicityRecord find_violation_outside(int d, double nu = 0.6);

// Uniform sample from the probability simplex (Dirichlet(1,1,1,1)).
LambdaVec random_simplex_point(Rng& rng);

}  // namespace wernermaps
