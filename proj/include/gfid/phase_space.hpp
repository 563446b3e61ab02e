#pragma once

#include <Eigen/Dense>
#include <complex>

namespace gfid {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Layout of the 2n quadratures in vectors and matrices.
///   interleaved: (x1, p1, ..., xn, pn)   (canonical internal layout)
///   block:       (x1, ..., xn, p1, ..., pn)
enum class QuadratureOrdering { interleaved, block };

/// Tolerance for symmetry checks (max elementwise deviation).
inline constexpr double kSymmetryTol = 1e-10;

/// Relative tolerance for positive-semidefiniteness: a matrix is PSD when its
/// smallest eigenvalue is >= -kPsdTol * max(1, spectral norm).
inline constexpr double kPsdTol = 1e-9;

/// Interleaved symplectic form: direct sum of n copies of [[0, 1], [-1, 0]].
Matrix symplectic_form(int n);

/// Similarity transform by the permutation taking `from` layout to `to`.
Matrix reorder(const Matrix& m, QuadratureOrdering from, QuadratureOrdering to);
Vector reorder(const Vector& v, QuadratureOrdering from, QuadratureOrdering to);

/// Smallest eigenvalue of a Hermitian matrix. Throws InvalidArgument if the
/// input deviates from Hermitian by more than kSymmetryTol.
double min_eig_hermitian(const ComplexMatrix& h);

/// Smallest eigenvalue of a real symmetric matrix.
double min_eig_symmetric(const Matrix& m);

double spectral_norm_symmetric(const Matrix& m);

bool is_symmetric(const Matrix& m, double tol = kSymmetryTol);

/// Symmetric and min eigenvalue >= -kPsdTol * max(1, ||m||).
bool is_psd(const Matrix& m);

/// Solves m w = v for symmetric positive definite m via Cholesky.
/// Throws SingularMatrix when m is not SPD, i.e. when its smallest eigenvalue
/// is not above 1e-12 times its spectral norm.
Vector spd_solve(const Matrix& m, const Vector& v);

/// sqrt(det m) for SPD m, taken as the product of the Cholesky diagonal.
double sqrt_det(const Matrix& m);

/// Ratio of largest to smallest eigenvalue of a symmetric matrix.
double condition_number(const Matrix& m);

}  // namespace gfid
