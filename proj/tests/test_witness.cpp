#include "wernermaps/witness.hpp"
#include "wernermaps/choi.hpp"
#include "wernermaps/monotonicity.hpp"

#include <doctest.h>

using namespace wernermaps;

TEST_CASE("witness_operator") {
    SUBCASE("W1 = F kron F with trace d^2") {
        for (int d : {2, 3}) {
            const Matrix w1 = witness_operator(1, d);
            const Matrix f = flip(d);
            CHECK(max_abs(w1 - kron(f, f)) == 0.0);
            CHECK(w1.trace().real() == doctest::Approx(d * d));
        }
    }
    SUBCASE("projector form equals rescaled form exactly") {
        for (int d : {2, 3}) {
            const auto fs = facets(d);
            for (int i = 1; i <= 3; ++i) {
                CHECK(max_abs(witness_from_facet(fs[static_cast<size_t>(i - 1)], d) -
                              witness_operator(i, d)) < 1e-12);
            }
        }
    }
    SUBCASE("tr(xi W_mu) = mu . lambda") {
        Rng rng(41);
        for (int d : {2, 3}) {
            const auto fs = facets(d);
            for (int rep = 0; rep < 20; ++rep) {
                const LambdaVec l = random_simplex_point(rng);
                const Matrix xi = choi_state(CovariantMap(d, l));
                for (int i = 0; i < 3; ++i) {
                    const double traced =
                        (xi * witness_from_facet(fs[static_cast<size_t>(i)], d))
                            .trace()
                            .real();
                    CHECK(traced ==
                          doctest::Approx(fs[static_cast<size_t>(i)].margin(l))
                              .epsilon(1e-10));
                }
            }
        }
    }
    SUBCASE("linearity: W2 + W3") {
        const int d = 3;
        const Matrix f = flip(d);
        const Matrix id = Matrix::Identity(d * d, d * d);
        const Matrix expect =
            static_cast<double>(d) * (kron(id, f) + kron(f, id)) - 2.0 * kron(f, f);
        CHECK(max_abs(witness_operator(2, d) + witness_operator(3, d) - expect) <
              1e-12);
    }
    SUBCASE("invalid index throws") {
        CHECK_THROWS_AS(witness_operator(4, 2), std::invalid_argument);
    }
}

TEST_CASE("product_expectation") {
    SUBCASE("alpha = beta = I is the Cauchy-Schwarz equality case") {
        for (int d : {2, 3, 4}) {
            const ProductVector p(Matrix::Identity(d, d), Matrix::Identity(d, d));
            // Normalized: |tr αβ†|² = (d/d)² = 1, identities give zero for W2/W3.
            CHECK(product_expectation(1, p, d) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(product_expectation(2, p, d) == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(product_expectation(3, p, d) == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
    SUBCASE("identities agree with the full-matrix evaluation") {
        Rng rng(42);
        for (int d : {2, 3, 4}) {
            for (int rep = 0; rep < 100; ++rep) {
                const ProductVector p = random_product_vector(d, rng);
                for (int i = 1; i <= 3; ++i) {
                    CHECK(std::abs(product_expectation(i, p, d) -
                                   product_expectation_matrix(i, p, d)) < 1e-10);
                }
            }
        }
    }
    SUBCASE("Cauchy-Schwarz bound on gamma = alpha beta-dagger") {
        Rng rng(43);
        for (int rep = 0; rep < 100000; ++rep) {
            const ProductVector p = random_product_vector(2, rng);
            const Matrix gamma = p.alpha * p.beta.adjoint();
            const double bound =
                2.0 * (gamma.adjoint() * gamma).trace().real() - std::norm(gamma.trace());
            CHECK(bound >= -1e-12);
        }
    }
}

TEST_CASE("random_product_min") {
    SUBCASE("W1 minimum is nonnegative (a squared modulus)") {
        Rng rng(44);
        for (int d : {2, 3}) {
            CHECK(random_product_min(1, d, 1000, rng).value >= 0.0);
        }
    }
    SUBCASE("W2 at d=2 stays above the numerical floor") {
        Rng rng(45);
        CHECK(random_product_min(2, 2, 100000, rng).value >= -1e-10);
    }
    SUBCASE("fixed seed reproduces the minimum") {
        Rng a(46), b(46);
        CHECK(random_product_min(2, 2, 500, a).value ==
              random_product_min(2, 2, 500, b).value);
    }
}

TEST_CASE("refine_min") {
    SUBCASE("equality point stays at zero") {
        Rng rng(47);
        for (int d : {2, 3}) {
            const ProductVector start(Matrix::Identity(d, d), Matrix::Identity(d, d));
            const auto refined = refine_min(2, d, start, 2000, rng);
            CHECK(refined.value >= -1e-9);
            CHECK(refined.value <= 1e-9);
        }
    }
    SUBCASE("multi-start refinement certifies positivity") {
        Rng rng(48);
        for (int i : {2, 3}) {
            for (int d : {2, 3}) {
                for (int start = 0; start < 10; ++start) {
                    const auto refined =
                        refine_min(i, d, random_product_vector(d, rng), 1000, rng);
                    CHECK(refined.value >= -1e-9);
                }
            }
        }
    }
    SUBCASE("refinement never increases the value") {
        Rng rng(49);
        const ProductVector start = random_product_vector(2, rng);
        const double initial = product_expectation(2, start, 2);
        const auto refined = refine_min(2, 2, start, 500, rng);
        CHECK(refined.value <= initial);
    }
}

TEST_CASE("witness duality with membership margins") {
    Rng rng(50);
    for (int d : {2, 3}) {
        long outside_found = 0;
        for (int rep = 0; rep < 10000; ++rep) {
            const LambdaVec l = random_simplex_point(rng);
            const auto membership = is_member(l, d);
            if (membership.member) continue;
            ++outside_found;
            // Some paper facet must flag the state; tr(xi W) equals the margin.
            const double worst =
                std::min({membership.margins[0], membership.margins[1],
                          membership.margins[2]});
            CHECK(worst < 1e-10);
        }
        CHECK(outside_found > 0);
    }
}
