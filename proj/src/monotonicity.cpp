#include "wernermaps/monotonicity.hpp"

#include "wernermaps/polytope.hpp"

#include <stdexcept>

namespace wernermaps {

namespace {

// Weights of Â and Ŝ in the (unnormalized) output of λ acting on ω_ν.
struct OutputWeights {
    double antisym;
    double sym;
};

OutputWeights output_weights(const LambdaVec& lambda, double nu, int d) {
    require_normalized(lambda);
    if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("nu must be in [0,1]");
    const double ca = 2.0 * nu / (d * (d - 1.0));
    const double cs = 2.0 * (1.0 - nu) / (d * (d + 1.0));
    return {ca * lambda[0] + cs * lambda[2], ca * lambda[1] + cs * lambda[3]};
}

}  // namespace

double success_weight(const LambdaVec& lambda, double nu, int d) {
    const auto w = output_weights(lambda, nu, d);
    return w.antisym + w.sym;
}

double nu_prime(const LambdaVec& lambda, double nu, int d) {
    const auto w = output_weights(lambda, nu, d);
    const double total = w.antisym + w.sym;
    if (total <= 1e-15) {
        throw std::domain_error("nu_prime: map annihilates this input");
    }
    return w.antisym / total;
}

LambdaVec random_simplex_point(Rng& rng) {
    std::exponential_distribution<double> expo(1.0);
    LambdaVec l(expo(rng), expo(rng), expo(rng), expo(rng));
    return l.normalized();
}

MonotonicityReport verify_monotonicity(int d, long samples, Rng& rng, double tol) {
    if (samples < 1) throw std::invalid_argument("verify_monotonicity: samples must be >= 1");
    std::uniform_real_distribution<double> unif(0.5, 1.0);

    MonotonicityReport report;
    report.d = d;
    report.worst_margin = 1.0;
    long attempts = 0;
    for (long n = 0; n < samples; ++n) {
        LambdaVec lambda;
        for (;;) {
            ++attempts;
            lambda = random_simplex_point(rng);
            if (is_member(lambda, d).member) break;
        }
        const double nu = unif(rng);
        const double np = nu_prime(lambda, nu, d);
        const double margin = nu - np;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < -tol) ++report.violations;

        const double eta = (1.0 - nu) / nu;
        const double chain = (d - 1.0) * (eta * lambda[3] - eta * eta * lambda[2]) +
                             (d + 1.0) * (lambda[1] - eta * lambda[0]);
        if (chain < -tol) report.inequality_chain_ok = false;
    }
    report.samples = samples;
    report.acceptance_rate = static_cast<double>(samples) / static_cast<double>(attempts);
    return report;
}

MonotonicityRecord find_violation_outside(int d, double nu) {
    if (nu <= 0.0 || nu >= 1.0) {
        throw std::invalid_argument("find_violation_outside: need nu in (0,1)");
    }
    MonotonicityRecord rec;
    rec.lambda = LambdaVec(1.0, 0.0, 0.0, 0.0);
    rec.nu = nu;
    rec.nu_prime = nu_prime(rec.lambda, nu, d);
    rec.eta = (1.0 - nu) / nu;
    const auto membership = is_member(rec.lambda, d);
    rec.member = membership.member;
    rec.margins = membership.margins;
    return rec;
}

}  // namespace wernermaps
