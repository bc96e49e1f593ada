// verify.hpp
// The full verification battery behind the CLI `verify` command: facet
// recovery, PPT/membership equivalence, witness positivity, the
// depolarization identity, the monotonicity theorem, the outside-P
// counterexample, and Monte-Carlo twirl convergence.

#pragma once

#include "wernermaps/tensor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wernermaps {

struct CheckResult {
    int criterion;       // 1..7, grouping for the acceptance report
    std::string name;
    bool pass;
    double margin;       // worst observed value (minimum, error, or slack)
    double tolerance;
};

struct VerifyOptions {
    std::vector<int> dims = {2, 3, 4};
    std::uint64_t seed = 12345;

    int grid_n = 50;                   // simplex grid subdivisions
    long ppt_random_samples = 10000;   // random points per dim
    long witness_samples = 100000;     // random product states per witness
    int witness_refinements = 50;      // multi-start local descents
    int refine_iterations = 2000;
    long monotonicity_samples = 100000;
    long crosscheck_samples = 1000;    // closed-form vs Choi-path cases
    int mc_samples = 10000;            // Monte-Carlo twirl sample count

    // Scales the stochastic sample counts relative to the defaults above.
    VerifyOptions scaled(long samples) const;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace wernermaps
