// polytope.hpp
// The separability polytope P in λ-space: the five separable vertices, the
// supporting facets, membership with per-facet margins, convex
// decomposition, and an independent brute-force facet oracle.

#pragma once

#include "wernermaps/lambda.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wernermaps {

// A supporting inequality μ·λ >= 0 of P (zero right-hand side is valid for
// points in the normalization hyperplane Σλ = 1).
struct FacetVec {
    enum class Kind { PaperFacet, Positivity };

    Eigen::Vector4d mu;
    Kind kind = Kind::PaperFacet;
    std::string name;

    double margin(const LambdaVec& lambda) const { return mu.dot(lambda.as_vector()); }
};

// The five separable vertices; λ^(5) is the depolarization map.
std::vector<LambdaVec> vertices(int d);

// The three paper facets μ^(1..3) plus the positivity facets λ1,λ2,λ3 >= 0
// (λ4 >= 0 is implied by the others and is not a facet).
std::vector<FacetVec> facets(int d);

struct Membership {
    bool member;
    std::vector<double> margins;  // in facets(d) order
};

Membership is_member(const LambdaVec& lambda, int d, double tol = 1e-12);

struct Decomposition {
    bool feasible;
    std::vector<double> weights;      // over vertices(d), when feasible
    std::optional<FacetVec> violated; // certificate, when infeasible
};

// Convex weights over the five vertices reproducing λ, or the violated facet.
// Any feasible solution is acceptable.
Decomposition decompose(const LambdaVec& lambda, int d, double tol = 1e-10);

// Independent facet oracle: enumerates subsets of k affinely independent
// points (k = affine dimension of the vertex set), solves for the supporting
// hyperplane with zero right-hand side within the linear span of the
// vertices, and keeps the one-sided ones. Results are deduplicated up to
// positive scaling and normalized to unit max-abs entry.
std::vector<Eigen::Vector4d> derive_facets_bruteforce(
    const std::vector<Eigen::Vector4d>& points, double tol = 1e-9);

// Scales a facet direction so its largest-magnitude entry matches the
// reference's; used to compare oracle output against the closed forms.
Eigen::Vector4d canonicalize_facet(const Eigen::Vector4d& mu,
                                   const Eigen::Vector4d& reference);

}  // namespace wernermaps
