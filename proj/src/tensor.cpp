#include "wernermaps/tensor.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wernermaps {

SubsystemShape::SubsystemShape(std::vector<int> d, std::vector<std::string> l)
    : dims(std::move(d)), labels(std::move(l)) {
    for (int dim : dims) {
        if (dim < 1) throw std::invalid_argument("subsystem dimension must be positive");
    }
    if (!labels.empty() && labels.size() != dims.size()) {
        throw std::invalid_argument("labels/dims length mismatch");
    }
}

int SubsystemShape::total_dim() const {
    int n = 1;
    for (int d : dims) n *= d;
    return n;
}

SubsystemShape shape_pair(int d) { return SubsystemShape({d, d}, {"A", "B"}); }

SubsystemShape shape_four(int d) {
    return SubsystemShape({d, d, d, d}, {"A", "B", "A'", "B'"});
}

Matrix kron(const Matrix& x, const Matrix& y) {
    if (x.rows() != x.cols() || y.rows() != y.cols()) {
        throw std::invalid_argument("kron expects square operators");
    }
    return Eigen::kroneckerProduct(x, y);
}

namespace {

void check_shape(const Matrix& m, const SubsystemShape& shape) {
    if (m.rows() != m.cols()) throw std::invalid_argument("operator must be square");
    if (m.rows() != shape.total_dim()) {
        throw std::invalid_argument("shape does not match matrix dimension");
    }
}

// Decomposes a flat index into per-factor digits (big-endian: factor 0 is
// the most significant, matching kron ordering).
void unflatten(int idx, const std::vector<int>& dims, std::vector<int>& out) {
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
}

int flatten(const std::vector<int>& digits, const std::vector<int>& dims) {
    int idx = 0;
    for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
    return idx;
}

std::vector<int> permuted_index_map(const SubsystemShape& shape,
                                    const std::vector<int>& perm) {
    const int n = shape.num_factors();
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation length mismatch");
    }
    std::vector<int> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]++) {
            throw std::invalid_argument("not a permutation of subsystem indices");
        }
    }
    std::vector<int> new_dims(n);
    for (int k = 0; k < n; ++k) new_dims[k] = shape.dims[perm[k]];

    const int dim = shape.total_dim();
    std::vector<int> map(dim);
    std::vector<int> digits(n), nd(n);
    for (int i = 0; i < dim; ++i) {
        unflatten(i, shape.dims, digits);
        for (int k = 0; k < n; ++k) nd[k] = digits[perm[k]];
        map[i] = flatten(nd, new_dims);
    }
    return map;
}

}  // namespace

Matrix permute_subsystems(const Matrix& m, const SubsystemShape& shape,
                          const std::vector<int>& perm) {
    check_shape(m, shape);
    const auto map = permuted_index_map(shape, perm);
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(map[i], map[j]) = m(i, j);
    return out;
}

Vector permute_subsystems(const Vector& v, const SubsystemShape& shape,
                          const std::vector<int>& perm) {
    if (v.size() != shape.total_dim()) {
        throw std::invalid_argument("shape does not match vector dimension");
    }
    const auto map = permuted_index_map(shape, perm);
    Vector out(v.size());
    for (int i = 0; i < v.size(); ++i) out(map[i]) = v(i);
    return out;
}

Matrix partial_trace(const Matrix& m, const SubsystemShape& shape,
                     const std::vector<int>& keep) {
    check_shape(m, shape);
    const int n = shape.num_factors();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: empty keep set; use trace()");
    }
    for (int k : keep) {
        if (k < 0 || k >= n) throw std::invalid_argument("keep index out of range");
    }
    std::vector<int> traced;
    for (int k = 0; k < n; ++k) {
        if (std::find(keep.begin(), keep.end(), k) == keep.end()) traced.push_back(k);
    }

    std::vector<int> keep_dims, traced_dims;
    for (int k : keep) keep_dims.push_back(shape.dims[k]);
    for (int k : traced) traced_dims.push_back(shape.dims[k]);
    const int dk = std::accumulate(keep_dims.begin(), keep_dims.end(), 1, std::multiplies<>());
    const int dt = std::accumulate(traced_dims.begin(), traced_dims.end(), 1, std::multiplies<>());

    Matrix out = Matrix::Zero(dk, dk);
    std::vector<int> ki(keep.size()), kj(keep.size()), t(traced.size());
    std::vector<int> row(n), col(n);
    for (int a = 0; a < dk; ++a) {
        unflatten(a, keep_dims, ki);
        for (int b = 0; b < dk; ++b) {
            unflatten(b, keep_dims, kj);
            Complex acc = 0.0;
            for (int c = 0; c < dt; ++c) {
                unflatten(c, traced_dims, t);
                for (size_t q = 0; q < keep.size(); ++q) {
                    row[keep[q]] = ki[q];
                    col[keep[q]] = kj[q];
                }
                for (size_t q = 0; q < traced.size(); ++q) {
                    row[traced[q]] = t[q];
                    col[traced[q]] = t[q];
                }
                acc += m(flatten(row, shape.dims), flatten(col, shape.dims));
            }
            out(a, b) = acc;
        }
    }
    return out;
}

Matrix partial_transpose(const Matrix& m, const SubsystemShape& shape,
                         const std::vector<int>& subsystems) {
    check_shape(m, shape);
    const int n = shape.num_factors();
    std::vector<char> flip(n, 0);
    for (int k : subsystems) {
        if (k < 0 || k >= n) throw std::invalid_argument("transpose index out of range");
        flip[k] = 1;
    }
    const int dim = shape.total_dim();
    Matrix out(dim, dim);
    std::vector<int> ri(n), ci(n), ro(n), co(n);
    for (int i = 0; i < dim; ++i) {
        unflatten(i, shape.dims, ri);
        for (int j = 0; j < dim; ++j) {
            unflatten(j, shape.dims, ci);
            for (int k = 0; k < n; ++k) {
                ro[k] = flip[k] ? ci[k] : ri[k];
                co[k] = flip[k] ? ri[k] : ci[k];
            }
            out(flatten(ro, shape.dims), flatten(co, shape.dims)) = m(i, j);
        }
    }
    return out;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& m, double tol) {
    return max_abs(m - m.adjoint()) <= tol;
}

Eigen::VectorXd spectral(const Matrix& m, double herm_tol) {
    if (!is_hermitian(m, herm_tol)) {
        throw std::invalid_argument("spectral: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectral: eigensolver failed");
    }
    return solver.eigenvalues();
}

double min_eigenvalue(const Matrix& m, double herm_tol) {
    return spectral(m, herm_tol)(0);
}

bool is_psd(const Matrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

Matrix haar_unitary(int d, Rng& rng) {
    if (d < 2) throw std::invalid_argument("haar_unitary: d must be >= 2");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));

    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        Complex rjj = r(j, j);
        q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

}  // namespace wernermaps
