// tensor.hpp
// Dense complex linear algebra with tensor-factor bookkeeping: Kronecker
// products, factor permutations, partial traces/transposes, Hermitian
// spectra, Haar-random unitaries.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace wernermaps {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Rng = std::mt19937_64;

// Default tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-10;

// Ordered list of local dimensions naming the tensor factors of a matrix.
// Factor ordering is always explicit; higher layers state their convention.
struct SubsystemShape {
    std::vector<int> dims;
    std::vector<std::string> labels;  // optional, same length as dims when set

    SubsystemShape() = default;
    explicit SubsystemShape(std::vector<int> d, std::vector<std::string> l = {});

    int total_dim() const;
    int num_factors() const { return static_cast<int>(dims.size()); }
};

// Four d-dimensional factors ordered (A, B, A', B'); (A,B) is the input pair.
SubsystemShape shape_pair(int d);   // (A, B)
SubsystemShape shape_four(int d);   // (A, B, A', B')

Matrix kron(const Matrix& x, const Matrix& y);

// Reorders tensor factors: factor k of the result is factor perm[k] of the
// input. Conjugation by a permutation unitary, so trace is preserved.
Matrix permute_subsystems(const Matrix& m, const SubsystemShape& shape,
                          const std::vector<int>& perm);

// Same reordering applied to a state vector.
Vector permute_subsystems(const Vector& v, const SubsystemShape& shape,
                          const std::vector<int>& perm);

// Traces out every factor not in `keep`; `keep` must be non-empty.
Matrix partial_trace(const Matrix& m, const SubsystemShape& shape,
                     const std::vector<int>& keep);

// Transposes the indices of the named factors.
Matrix partial_transpose(const Matrix& m, const SubsystemShape& shape,
                         const std::vector<int>& subsystems);

// Ascending real eigenvalues of a Hermitian matrix. Throws if the input
// deviates from Hermiticity by more than `herm_tol` in max-entry norm.
Eigen::VectorXd spectral(const Matrix& m, double herm_tol = kAlgebraTol);

double min_eigenvalue(const Matrix& m, double herm_tol = kAlgebraTol);
bool is_psd(const Matrix& m, double tol = kAlgebraTol);

// Haar-distributed d x d unitary: complex Ginibre sample, QR, column phases
// fixed by the signs of diag(R).
Matrix haar_unitary(int d, Rng& rng);

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = 1e-12);

}  // namespace wernermaps
