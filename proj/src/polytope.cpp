#include "wernermaps/polytope.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace wernermaps {

std::vector<LambdaVec> vertices(int d) {
    if (d < 2) throw std::invalid_argument("vertices: d must be >= 2");
    const double e = 1.0 / (2.0 * d);
    return {
        {0.0, 0.0, 0.0, 1.0},
        {0.0, 0.5, 0.0, 0.5},
        {0.0, 0.0, 0.5, 0.5},
        {0.25, 0.25, 0.25, 0.25},
        {0.5 - e, 0.0, 0.0, 0.5 + e},
    };
}

std::vector<FacetVec> facets(int d) {
    if (d < 2) throw std::invalid_argument("facets: d must be >= 2");
    const double dd = d;
    std::vector<FacetVec> out;
    out.push_back({{1.0, -1.0, -1.0, 1.0}, FacetVec::Kind::PaperFacet, "mu1"});
    out.push_back({{-dd - 1, dd + 1, -dd + 1, dd - 1}, FacetVec::Kind::PaperFacet, "mu2"});
    out.push_back({{-dd - 1, -dd + 1, dd + 1, dd - 1}, FacetVec::Kind::PaperFacet, "mu3"});
    // Positivity constraints certified as facets by the brute-force oracle;
    // λ4 >= 0 holds on all of P but is not tight on any 2-face.
    out.push_back({{1.0, 0.0, 0.0, 0.0}, FacetVec::Kind::Positivity, "lambda1"});
    out.push_back({{0.0, 1.0, 0.0, 0.0}, FacetVec::Kind::Positivity, "lambda2"});
    out.push_back({{0.0, 0.0, 1.0, 0.0}, FacetVec::Kind::Positivity, "lambda3"});
    return out;
}

Membership is_member(const LambdaVec& lambda, int d, double tol) {
    require_normalized(lambda);
    Membership result{true, {}};
    for (const auto& f : facets(d)) {
        const double m = f.margin(lambda);
        result.margins.push_back(m);
        if (m < -tol) result.member = false;
    }
    return result;
}

Decomposition decompose(const LambdaVec& lambda, int d, double tol) {
    require_normalized(lambda);
    const auto verts = vertices(d);
    const int n = static_cast<int>(verts.size());
    const Eigen::Vector4d target = lambda.as_vector();

    // Small enough for exhaustive subset search: basic feasible solutions use
    // at most 4 of the 5 vertices, so scan subsets in ascending size.
    std::vector<std::vector<int>> subsets;
    for (int size = 1; size <= 4; ++size) {
        std::vector<int> idx(static_cast<size_t>(size));
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == size) {
                subsets.push_back(idx);
                return;
            }
            for (int i = start; i < n; ++i) {
                idx[static_cast<size_t>(depth)] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }

    for (const auto& sub : subsets) {
        Eigen::MatrixXd a(4, sub.size());
        for (size_t c = 0; c < sub.size(); ++c) a.col(static_cast<Eigen::Index>(c)) = verts[static_cast<size_t>(sub[c])].as_vector();
        Eigen::VectorXd w = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(target);
        if ((a * w - target).cwiseAbs().maxCoeff() > tol) continue;
        if (w.minCoeff() < -tol) continue;
        std::vector<double> weights(static_cast<size_t>(n), 0.0);
        double total = 0.0;
        for (size_t c = 0; c < sub.size(); ++c) {
            const double wc = std::max(0.0, w(static_cast<Eigen::Index>(c)));
            weights[static_cast<size_t>(sub[c])] = wc;
            total += wc;
        }
        for (double& wc : weights) wc /= total;
        return {true, std::move(weights), std::nullopt};
    }

    // Infeasible: report the most violated facet as certificate.
    const auto fs = facets(d);
    const FacetVec* worst = nullptr;
    double worst_margin = 0.0;
    for (const auto& f : fs) {
        const double m = f.margin(lambda);
        if (m < worst_margin) {
            worst_margin = m;
            worst = &f;
        }
    }
    if (worst == nullptr) {
        throw std::runtime_error("decompose: no feasible weights yet no violated facet");
    }
    return {false, {}, *worst};
}

namespace {

Eigen::MatrixXd stack_points(const std::vector<Eigen::Vector4d>& points) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), 4);
    for (size_t i = 0; i < points.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
    return m;
}

// Rows spanning the orthogonal complement of the linear span of the points.
Eigen::MatrixXd span_complement(const Eigen::MatrixXd& pts, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(pts, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return svd.matrixV().rightCols(4 - rank).transpose();
}

int affine_dimension(const std::vector<Eigen::Vector4d>& points, double tol) {
    Eigen::Vector4d centroid = Eigen::Vector4d::Zero();
    for (const auto& p : points) centroid += p;
    centroid /= static_cast<double>(points.size());
    Eigen::MatrixXd diffs(static_cast<Eigen::Index>(points.size()), 4);
    for (size_t i = 0; i < points.size(); ++i) {
        diffs.row(static_cast<Eigen::Index>(i)) = (points[i] - centroid).transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
    const auto& sv = svd.singularValues();
    if (sv(0) < tol) return 0;
    int dim = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++dim;
    return dim;
}

void k_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(idx);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<Eigen::Vector4d> derive_facets_bruteforce(
    const std::vector<Eigen::Vector4d>& points, double tol) {
    const int n = static_cast<int>(points.size());
    const int k = affine_dimension(points, tol);
    if (k < 1 || n < k + 1) {
        throw std::invalid_argument("derive_facets_bruteforce: degenerate vertex set");
    }

    const Eigen::MatrixXd pts = stack_points(points);
    const Eigen::MatrixXd complement = span_complement(pts, tol);

    std::vector<std::vector<int>> subsets;
    k_subsets(n, k, subsets);

    std::vector<Eigen::Vector4d> found;
    for (const auto& sub : subsets) {
        // Hyperplane μ·λ = 0 through the subset, restricted to the linear
        // span of the vertex set (kills the gauge freedom of adding vectors
        // orthogonal to every point).
        Eigen::MatrixXd m(static_cast<Eigen::Index>(sub.size()) + complement.rows(), 4);
        for (size_t r = 0; r < sub.size(); ++r) {
            m.row(static_cast<Eigen::Index>(r)) = points[static_cast<size_t>(sub[r])].transpose();
        }
        m.bottomRows(complement.rows()) = complement;

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        int rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > tol * std::max(sv(0), 1.0)) ++rank;
        if (rank != 3) continue;  // nullspace not one-dimensional

        Eigen::Vector4d mu = svd.matrixV().col(3);

        double lo = 0.0, hi = 0.0;
        for (const auto& p : points) {
            const double margin = mu.dot(p);
            lo = std::min(lo, margin);
            hi = std::max(hi, margin);
        }
        if (lo < -tol && hi > tol) continue;  // vertices on both sides
        if (hi <= tol && lo >= -tol) continue; // whole hull in the plane
        if (hi <= tol) mu = -mu;               // orient nonnegative side inward

        mu /= mu.cwiseAbs().maxCoeff();
        bool duplicate = false;
        for (const auto& f : found) {
            if ((f - mu).cwiseAbs().maxCoeff() < 1e-6) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) found.push_back(mu);
    }
    return found;
}

Eigen::Vector4d canonicalize_facet(const Eigen::Vector4d& mu,
                                   const Eigen::Vector4d& reference) {
    return mu * (reference.cwiseAbs().maxCoeff() / mu.cwiseAbs().maxCoeff());
}

}  // namespace wernermaps
