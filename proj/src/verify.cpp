#include "wernermaps/verify.hpp"

#include "wernermaps/choi.hpp"
#include "wernermaps/monotonicity.hpp"
#include "wernermaps/polytope.hpp"
#include "wernermaps/ppt.hpp"
#include "wernermaps/symmetric.hpp"
#include "wernermaps/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace wernermaps {

VerifyOptions VerifyOptions::scaled(long samples) const {
    VerifyOptions out = *this;
    const double factor = static_cast<double>(samples) / 10000.0;
    const auto scale = [&](long base) {
        return std::max<long>(100, static_cast<long>(base * factor));
    };
    out.ppt_random_samples = scale(ppt_random_samples);
    out.witness_samples = scale(witness_samples);
    out.monotonicity_samples = scale(monotonicity_samples);
    out.crosscheck_samples = scale(crosscheck_samples);
    out.mc_samples = static_cast<int>(scale(mc_samples));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

// ---- criterion 1: facet recovery --------------------------------------

CheckResult check_facet_recovery(int d) {
    std::vector<Eigen::Vector4d> points;
    for (const auto& v : vertices(d)) points.push_back(v.as_vector());
    const auto found = derive_facets_bruteforce(points);
    const auto expected = facets(d);

    double worst = 0.0;
    bool ok = found.size() == expected.size();
    for (const auto& f : expected) {
        double best = 1e300;
        for (const auto& g : found) {
            best = std::min(best,
                            (canonicalize_facet(g, f.mu) - f.mu).cwiseAbs().maxCoeff());
        }
        worst = std::max(worst, best);
    }
    ok = ok && worst <= 1e-12;
    return {1, "facet_recovery_d" + std::to_string(d), ok, worst, 1e-12};
}

// ---- criterion 2: PPT <=> membership ----------------------------------

CheckResult check_ppt_equivalence(int d, const VerifyOptions& opts, Rng& rng) {
    long disagreements = 0;
    long tested = 0;
    const int n = opts.grid_n;
    const auto test = [&](const LambdaVec& l) {
        ++tested;
        if (is_ppt(l, d) != is_member(l, d).member) ++disagreements;
    };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j)
            for (int k = 0; k <= n - i - j; ++k) {
                test(LambdaVec(i, j, k, n - i - j - k).normalized());
            }
    for (long s = 0; s < opts.ppt_random_samples; ++s) test(random_simplex_point(rng));
    return {2, "ppt_membership_equivalence_d" + std::to_string(d),
            disagreements == 0, static_cast<double>(disagreements), 0.0};
}

// ---- criterion 3: witness positivity ----------------------------------

CheckResult check_witness_positivity(int i, int d, const VerifyOptions& opts,
                                     Rng& rng) {
    auto best = random_product_min(i, d, static_cast<int>(opts.witness_samples), rng);
    double min_val = best.value;
    for (int r = 0; r < opts.witness_refinements; ++r) {
        const ProductVector start =
            (r == 0) ? best.argmin : random_product_vector(d, rng);
        const auto refined = refine_min(i, d, start, opts.refine_iterations, rng);
        min_val = std::min(min_val, refined.value);
    }
    return {3, "witness_positivity_w" + std::to_string(i) + "_d" + std::to_string(d), min_val >= -1e-9,
            min_val, 1e-9};
}

CheckResult check_witness_identities(int d, Rng& rng) {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const ProductVector p = random_product_vector(d, rng);
        for (int i = 1; i <= 3; ++i) {
            worst = std::max(worst, std::abs(product_expectation(i, p, d) -
                                             product_expectation_matrix(i, p, d)));
        }
    }
    return {3, "witness_identity_agreement_d" + std::to_string(d), worst <= 1e-10,
            worst, 1e-10};
}

// ---- criterion 4: depolarization identity -----------------------------

CheckResult check_depolarization_exact(int d) {
    const Vector chi = depolarization_product_input(d);
    const Matrix rho = chi * chi.adjoint();
    const LambdaVec lambda = double_twirl(rho, d);
    const LambdaVec v5 = vertices(d)[4];
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(lambda[i] - v5[i]));
    return {4, "depolarization_double_twirl_d" + std::to_string(d), worst <= 1e-12,
            worst, 1e-12};
}

CheckResult check_depolarization_mc(const VerifyOptions& opts, Rng& rng) {
    const int d = 2;
    const Vector chi = depolarization_product_input(d);
    const Matrix rho = chi * chi.adjoint();
    const Matrix target = symmetric_state(vertices(d)[4], d);

    const int batches = 20;
    const int per_batch = std::max(1, opts.mc_samples / batches);
    std::vector<Matrix> means;
    Matrix overall = Matrix::Zero(rho.rows(), rho.cols());
    for (int b = 0; b < batches; ++b) {
        means.push_back(double_twirl_mc(rho, d, per_batch, rng));
        overall += means.back();
    }
    overall /= static_cast<double>(batches);
    double var = 0.0;
    for (const auto& m : means) var += (m - overall).squaredNorm();
    const double sigma = std::sqrt(var / (batches * (batches - 1.0)));
    const double err = (overall - target).norm();
    return {4, "depolarization_double_twirl_mc_d2", err <= 5.0 * sigma,
            5.0 * sigma - err, 0.0};
}

CheckResult check_depolarization_fixed_point(int d) {
    const Matrix xi = choi_state(CovariantMap(d, vertices(d)[4]));
    double worst = 0.0;
    for (double nu : {0.0, 0.3, 0.5, 1.0}) {
        const Matrix in = werner_state(WernerParam(d, nu));
        const auto result = apply_via_choi(xi, in, d);
        worst = std::max(worst, max_abs(result.output - in));
    }
    return {4, "depolarization_fixed_point_d" + std::to_string(d), worst <= 1e-12,
            worst, 1e-12};
}

// ---- criterion 5: monotonicity theorem --------------------------------

CheckResult check_monotonicity(int d, const VerifyOptions& opts, Rng& rng) {
    const auto report = verify_monotonicity(d, opts.monotonicity_samples, rng);

    // Boundary grid: ν at the endpoints of the entangled range.
    long boundary_violations = 0;
    double worst = report.worst_margin;
    const int n = 20;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j)
            for (int k = 0; k <= n - i - j; ++k) {
                const LambdaVec l = LambdaVec(i, j, k, n - i - j - k).normalized();
                if (!is_member(l, d).member) continue;
                for (double nu : {0.5, 1.0}) {
                    double np;
                    try {
                        np = nu_prime(l, nu, d);
                    } catch (const std::domain_error&) {
                        continue;  // annihilating stochastic map for this input
                    }
                    worst = std::min(worst, nu - np);
                    if (np > nu + 1e-12) ++boundary_violations;
                }
            }
    const bool ok = report.violations == 0 && boundary_violations == 0 &&
                    report.inequality_chain_ok;
    return {5, "monotonicity_d" + std::to_string(d), ok, worst, 1e-12};
}

CheckResult check_nu_prime_crosscheck(int d, const VerifyOptions& opts, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    long done = 0;
    while (done < opts.crosscheck_samples) {
        const LambdaVec lambda = random_simplex_point(rng);
        const double nu = unif(rng);
        double np_closed, weight_closed;
        try {
            np_closed = nu_prime(lambda, nu, d);
            weight_closed = success_weight(lambda, nu, d);
        } catch (const std::domain_error&) {
            continue;
        }
        const Matrix xi = choi_state(CovariantMap(d, lambda));
        const auto applied = apply_via_choi(xi, werner_state(WernerParam(d, nu)), d);
        const double np_choi = twirl_exact(applied.output, d).nu;
        worst = std::max(worst, std::abs(np_closed - np_choi));
        worst = std::max(worst, std::abs(weight_closed - applied.weight));
        ++done;
    }
    return {5, "nu_prime_choi_agreement_d" + std::to_string(d), worst <= 1e-12,
            worst, 1e-12};
}

// ---- criterion 6: necessity outside P ---------------------------------

CheckResult check_violation_outside(int d) {
    const auto rec = find_violation_outside(d, 0.6);
    const bool ok = !rec.member && std::abs(rec.nu_prime - 1.0) <= 1e-12 &&
                    rec.margins[1] < 0.0;  // μ^(2) margin
    return {6, "violation_outside_d" + std::to_string(d), ok, rec.nu_prime - rec.nu,
            1e-12};
}

// ---- criterion 7: Monte-Carlo twirl convergence -----------------------

CheckResult check_mc_convergence(Rng& rng) {
    const int d = 2;
    Matrix rho = Matrix::Zero(4, 4);
    rho(1, 1) = 1.0;  // |01><01|
    const Matrix target = werner_state(WernerParam(d, 0.5));

    const int reps = 24;
    std::array<long, 3> counts = {100, 1000, 10000};
    std::array<double, 3> errs{};
    for (size_t k = 0; k < counts.size(); ++k) {
        double acc = 0.0;
        for (int r = 0; r < reps; ++r) {
            acc += (twirl_mc(rho, d, static_cast<int>(counts[k]), rng) - target).norm();
        }
        errs[k] = acc / reps;
    }
    const double root10 = std::sqrt(10.0);
    const double r1 = errs[0] / errs[1];
    const double r2 = errs[1] / errs[2];
    const bool ok = r1 >= root10 / 2 && r1 <= 2 * root10 && r2 >= root10 / 2 &&
                    r2 <= 2 * root10;
    const double slack = std::min({r1 - root10 / 2, 2 * root10 - r1,
                                   r2 - root10 / 2, 2 * root10 - r2});
    return {7, "mc_twirl_convergence_d2", ok, slack, 0.0};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    Rng rng(opts.seed);
    std::vector<CheckResult> results;

    for (int d : opts.dims) results.push_back(check_facet_recovery(d));
    for (int d : opts.dims) results.push_back(check_ppt_equivalence(d, opts, rng));
    for (int d : opts.dims) {
        if (d > 3) continue;  // witness scans are specified for d in {2,3}
        for (int i = 1; i <= 3; ++i) {
            results.push_back(check_witness_positivity(i, d, opts, rng));
        }
        results.push_back(check_witness_identities(d, rng));
    }
    for (int d : opts.dims) results.push_back(check_depolarization_exact(d));
    results.push_back(check_depolarization_mc(opts, rng));
    for (int d : opts.dims) results.push_back(check_depolarization_fixed_point(d));
    for (int d : opts.dims) results.push_back(check_monotonicity(d, opts, rng));
    for (int d : opts.dims) results.push_back(check_nu_prime_crosscheck(d, opts, rng));
    for (int d : opts.dims) results.push_back(check_violation_outside(d));
    results.push_back(check_mc_convergence(rng));
    return results;
}

}  // namespace wernermaps
