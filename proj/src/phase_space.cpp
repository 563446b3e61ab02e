#include "gfid/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gfid/errors.hpp"

namespace gfid {
namespace {

void require_even_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) {
    throw InvalidArgument(std::string(what) + ": expected a square matrix of even dimension, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// perm[k] is the interleaved index of block-ordered position k.
std::vector<Eigen::Index> block_to_interleaved(Eigen::Index dim) {
  const Eigen::Index n = dim / 2;
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < n; ++i) {
    perm[static_cast<std::size_t>(i)] = 2 * i;
    perm[static_cast<std::size_t>(n + i)] = 2 * i + 1;
  }
  return perm;
}

// Source index for each destination index when converting between layouts.
std::vector<Eigen::Index> source_indices(Eigen::Index dim, QuadratureOrdering from, QuadratureOrdering to) {
  std::vector<Eigen::Index> src(static_cast<std::size_t>(dim));
  if (from == to) {
    for (Eigen::Index k = 0; k < dim; ++k) src[static_cast<std::size_t>(k)] = k;
    return src;
  }
  const auto perm = block_to_interleaved(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (to == QuadratureOrdering::block) {
      src[static_cast<std::size_t>(k)] = perm[static_cast<std::size_t>(k)];
    } else {
      src[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
    }
  }
  return src;
}

}  // namespace

Matrix symplectic_form(int n) {
  if (n < 1) throw InvalidArgument("symplectic_form: mode count must be >= 1");
  Matrix omega = Matrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    omega(2 * i, 2 * i + 1) = 1.0;
    omega(2 * i + 1, 2 * i) = -1.0;
  }
  return omega;
}

Matrix reorder(const Matrix& m, QuadratureOrdering from, QuadratureOrdering to) {
  require_even_square(m, "reorder");
  const auto src = source_indices(m.rows(), from, to);
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = m(src[static_cast<std::size_t>(i)], src[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

Vector reorder(const Vector& v, QuadratureOrdering from, QuadratureOrdering to) {
  if (v.size() % 2 != 0) throw InvalidArgument("reorder: vector length must be even");
  const auto src = source_indices(v.size(), from, to);
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(src[static_cast<std::size_t>(i)]);
  return out;
}

double min_eig_hermitian(const ComplexMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw InvalidArgument("min_eig_hermitian: expected a non-empty square matrix");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw InvalidArgument("min_eig_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double min_eig_symmetric(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double spectral_norm_symmetric(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

bool is_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const Matrix& m) {
  if (!is_symmetric(m)) return false;
  if (m.size() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  return ev.minCoeff() >= -kPsdTol * scale;
}

namespace {

Eigen::LLT<Matrix> checked_cholesky(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": expected a non-empty square matrix");
  }
  if (!is_symmetric(m)) throw SingularMatrix(std::string(what) + ": matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double norm = ev.cwiseAbs().maxCoeff();
  if (!(ev.minCoeff() > 1e-12 * norm) || norm == 0.0) {
    throw SingularMatrix(std::string(what) + ": matrix is not positive definite (min eigenvalue " +
                         std::to_string(ev.minCoeff()) + ")");
  }
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) throw SingularMatrix(std::string(what) + ": Cholesky factorization failed");
  return llt;
}

}  // namespace

Vector spd_solve(const Matrix& m, const Vector& v) {
  if (v.size() != m.rows()) throw InvalidArgument("spd_solve: dimension mismatch");
  return checked_cholesky(m, "spd_solve").solve(v);
}

double sqrt_det(const Matrix& m) {
  const auto llt = checked_cholesky(m, "sqrt_det");
  // det m = prod(L_ii)^2
  return llt.matrixLLT().diagonal().prod();
}

double condition_number(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const auto ev = solver.eigenvalues().cwiseAbs();
  return ev.maxCoeff() / ev.minCoeff();
}

}  // namespace gfid
