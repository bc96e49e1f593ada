#include "wernermaps/ppt.hpp"
#include "wernermaps/monotonicity.hpp"
#include "wernermaps/polytope.hpp"
#include "wernermaps/symmetric.hpp"

#include <doctest.h>

using namespace wernermaps;

TEST_CASE("ppt_spectrum analytic blocks") {
    SUBCASE("pure antisymmetric map: mixed-block eigenvalue -(d+1)/(d^2(d^2-1))") {
        for (int d : {2, 3}) {
            const auto spec = ppt_spectrum(LambdaVec(1, 0, 0, 0), d);
            const double expect = -(d + 1.0) / (d * d * (d * d - 1.0));
            CHECK(spec.blocks[2].eigenvalue == doctest::Approx(expect).epsilon(1e-14));
        }
        CHECK(ppt_spectrum(LambdaVec(1, 0, 0, 0), 2).blocks[2].eigenvalue ==
              doctest::Approx(-0.25).epsilon(1e-14));
    }
    SUBCASE("depolarization vertex sits on the PPT boundary") {
        for (int d : {2, 3, 4}) {
            const auto spec = ppt_spectrum(vertices(d)[4], d);
            CHECK(spec.blocks[1].eigenvalue == doctest::Approx(0.0).epsilon(1e-14));
            CHECK(spec.blocks[2].eigenvalue == doctest::Approx(0.0).epsilon(1e-14));
        }
    }
    SUBCASE("symmetric corner is PPT") {
        CHECK(ppt_spectrum(LambdaVec(0, 0, 0, 1), 3).min_eigenvalue() >= 0.0);
    }
    SUBCASE("multiplicities sum to d^4 and trace is preserved") {
        Rng rng(51);
        for (int d : {2, 3}) {
            for (int rep = 0; rep < 20; ++rep) {
                const auto spec = ppt_spectrum(random_simplex_point(rng), d);
                int total = 0;
                double trace = 0.0;
                for (const auto& b : spec.blocks) {
                    total += b.multiplicity;
                    trace += b.multiplicity * b.eigenvalue;
                }
                CHECK(total == d * d * d * d);
                CHECK(trace == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
    SUBCASE("block margins are scaled facet margins") {
        Rng rng(52);
        for (int d : {2, 3}) {
            const auto fs = facets(d);
            for (int rep = 0; rep < 20; ++rep) {
                const LambdaVec l = random_simplex_point(rng);
                const auto spec = ppt_spectrum(l, d);
                const double scale = d * d * (d * d - 1.0);
                CHECK(spec.blocks[0].eigenvalue * d * d ==
                      doctest::Approx(fs[0].margin(l)).epsilon(1e-12));
                CHECK(spec.blocks[1].eigenvalue * scale ==
                      doctest::Approx(fs[2].margin(l)).epsilon(1e-12));
                CHECK(spec.blocks[2].eigenvalue * scale ==
                      doctest::Approx(fs[1].margin(l)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("ppt_spectrum_numeric oracle") {
    SUBCASE("agrees with the analytic blocks") {
        Rng rng(53);
        for (int d : {2, 3}) {
            for (int rep = 0; rep < 100; ++rep) {
                const LambdaVec l = random_simplex_point(rng);
                const Eigen::VectorXd numeric = ppt_spectrum_numeric(l, d);
                const Eigen::VectorXd analytic = ppt_spectrum(l, d).expanded();
                REQUIRE(numeric.size() == analytic.size());
                CHECK((numeric - analytic).cwiseAbs().maxCoeff() < 1e-10);
            }
        }
    }
    SUBCASE("product of PPT Werner states is PPT") {
        CHECK(ppt_spectrum_numeric(vertices(2)[3], 2).minCoeff() >= -1e-12);
    }
    SUBCASE("transposing the A side gives the same spectrum") {
        Rng rng(54);
        for (int rep = 0; rep < 10; ++rep) {
            const LambdaVec l = random_simplex_point(rng);
            const Matrix xi = symmetric_state(l, 2);
            const Eigen::VectorXd b_side =
                spectral(partial_transpose(xi, shape_four(2), {1, 3}));
            const Eigen::VectorXd a_side =
                spectral(partial_transpose(xi, shape_four(2), {0, 2}));
            CHECK((b_side - a_side).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
    SUBCASE("partial transposition preserves trace and Hermiticity") {
        Rng rng(55);
        for (int rep = 0; rep < 10; ++rep) {
            const Matrix xi = symmetric_state(random_simplex_point(rng), 2);
            const Matrix gamma = partial_transpose(xi, shape_four(2), {1, 3});
            CHECK(std::abs(gamma.trace().real() - 1.0) < 1e-12);
            CHECK(is_hermitian(gamma, 1e-12));
        }
    }
}

TEST_CASE("is_ppt") {
    SUBCASE("all vertices are PPT") {
        for (int d : {2, 3, 4}) {
            for (const auto& v : vertices(d)) CHECK(is_ppt(v, d));
        }
    }
    SUBCASE("pure antisymmetric map is NPT") {
        CHECK_FALSE(is_ppt(LambdaVec(1, 0, 0, 0), 2));
    }
    SUBCASE("agrees with membership on random simplex points") {
        Rng rng(56);
        for (int d : {2, 3, 4}) {
            for (int rep = 0; rep < 10000; ++rep) {
                const LambdaVec l = random_simplex_point(rng);
                CHECK(is_ppt(l, d) == is_member(l, d).member);
            }
        }
    }
}
