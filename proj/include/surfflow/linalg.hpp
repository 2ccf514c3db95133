#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "surfflow/errors.hpp"

namespace surfflow::linalg {

// Compressed-row sparse storage. Boundary operators (entries +-1) share this
// container with real-valued operators.
template <typename Scalar>
using SparseMatrixT = Eigen::SparseMatrix<Scalar, Eigen::RowMajor, int>;
template <typename Scalar>
using VectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using SparseMatrix = SparseMatrixT<double>;
using Vector = VectorT<double>;
using Triplet = Eigen::Triplet<double, int>;

// Builds a matrix from triplets, summing duplicates and purging explicit zeros.
template <typename Scalar>
SparseMatrixT<Scalar> from_triplets(Eigen::Index rows, Eigen::Index cols,
                                    const std::vector<Eigen::Triplet<Scalar, int>>& triplets) {
  SparseMatrixT<Scalar> m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.prune(Scalar(0));
  m.makeCompressed();
  return m;
}

template <typename Scalar>
VectorT<Scalar> spmv(const SparseMatrixT<Scalar>& a, const VectorT<Scalar>& x) {
  if (a.cols() != x.size()) {
    throw DimensionMismatch("spmv: matrix has " + std::to_string(a.cols()) +
                            " columns, vector has " + std::to_string(x.size()) + " entries");
  }
  return a * x;
}

template <typename Scalar>
SparseMatrixT<Scalar> transpose(const SparseMatrixT<Scalar>& a) {
  SparseMatrixT<Scalar> t = a.transpose();
  t.makeCompressed();
  return t;
}

template <typename Scalar>
SparseMatrixT<Scalar> multiply(const SparseMatrixT<Scalar>& a, const SparseMatrixT<Scalar>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + " differ");
  }
  SparseMatrixT<Scalar> c = a * b;
  c.makeCompressed();
  return c;
}

// Places the mixed saddle-point operator
//   [ -H  D^T ]
//   [  D   0  ]
// with H square (n x n) and D (m x n).
SparseMatrix block_assemble(const SparseMatrix& hodge, const SparseMatrix& coboundary);

// Largest |a_ij - a_ji|, for symmetry checks.
double asymmetry(const SparseMatrix& a);
double max_abs(const SparseMatrix& a);

enum class SolveMethod { direct, minres, automatic };

const char* to_string(SolveMethod m);

struct SolveStats {
  SolveMethod method = SolveMethod::direct;  // path that produced the answer
  int iterations = 0;                        // Krylov iterations or refinement steps
  Eigen::Index factor_nonzeros = 0;          // nnz(L) + nnz(U) for the direct path
  bool fell_back = false;
};

struct SolveResult {
  Vector x;
  double relative_residual = 0.0;  // ||Ax - b|| / ||b||, or ||Ax|| when b = 0
  SolveStats stats;
};

// Solves A x = b for symmetric, possibly indefinite, nonsingular A.
//   direct    -> sparse LU with iterative refinement
//   minres    -> preconditioned MINRES
//   automatic -> direct, then MINRES if the factorization fails or misses tol
// Throws SingularSystem or SolverDivergence.
SolveResult solve_symmetric_indefinite(const SparseMatrix& a, const Vector& b, double tol = 1e-10,
                                       SolveMethod method = SolveMethod::automatic,
                                       int max_iterations = 0);

// Positive diagonal suitable as a MINRES preconditioner for saddle-point
// matrices: |a_ii| where nonzero, else sum_j a_ij^2 / |a_jj| (a Schur
// complement estimate), else 1.
Vector saddle_diagonal_preconditioner(const SparseMatrix& a);

struct MinresResult {
  Vector x;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

// Preconditioned MINRES (Paige-Saunders) with a positive diagonal
// preconditioner. Convergence is declared on the true residual, not the
// recurrence estimate.
template <typename Scalar>
MinresResult minres(const SparseMatrixT<Scalar>& a, const VectorT<Scalar>& b,
                    const VectorT<Scalar>& precond_diag, Scalar tol, int max_iterations) {
  using Vec = VectorT<Scalar>;
  const Eigen::Index n = b.size();
  if (a.rows() != n || a.cols() != n || precond_diag.size() != n) {
    throw DimensionMismatch("minres: operator, rhs and preconditioner sizes differ");
  }
  MinresResult out;
  out.x = Vec::Zero(n);
  const Scalar bnorm = b.norm();
  if (bnorm == Scalar(0)) {
    out.converged = true;
    return out;
  }
  const Vec inv_m = precond_diag.cwiseInverse();

  Vec x = Vec::Zero(n);
  Vec r1 = b;
  Vec y = inv_m.cwiseProduct(r1);
  Scalar beta1 = r1.dot(y);
  if (beta1 <= Scalar(0)) throw SolverDivergence("minres: preconditioner is not positive definite");
  beta1 = std::sqrt(beta1);

  Scalar oldb = 0, beta = beta1, dbar = 0, epsln = 0, phibar = beta1;
  Scalar cs = -1, sn = 0;
  Vec w = Vec::Zero(n), w1(n), w2 = Vec::Zero(n), r2 = r1, v(n);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();

  for (int itn = 1; itn <= max_iterations; ++itn) {
    v = y / beta;
    y = a * v;
    if (itn >= 2) y -= (beta / oldb) * r1;
    const Scalar alfa = v.dot(y);
    y -= (alfa / beta) * r2;
    r1 = r2;
    r2 = y;
    y = inv_m.cwiseProduct(r2);
    oldb = beta;
    beta = r2.dot(y);
    if (beta < Scalar(0)) throw SolverDivergence("minres: preconditioner is not positive definite");
    beta = std::sqrt(beta);

    const Scalar oldeps = epsln;
    const Scalar delta = cs * dbar + sn * alfa;
    const Scalar gbar = sn * dbar - cs * alfa;
    epsln = sn * beta;
    dbar = -cs * beta;
    Scalar gamma = std::hypot(gbar, beta);
    gamma = std::max(gamma, eps);
    cs = gbar / gamma;
    sn = beta / gamma;
    const Scalar phi = cs * phibar;
    phibar = sn * phibar;

    w1 = w2;
    w2 = w;
    w = (v - oldeps * w1 - delta * w2) / gamma;
    x += phi * w;
    out.iterations = itn;

    // Cheap estimate first; confirm with the true residual.
    if (phibar <= tol * beta1 || beta == Scalar(0)) {
      const Scalar rel = (b - a * x).norm() / bnorm;
      if (rel <= tol) {
        out.x = x;
        out.relative_residual = static_cast<double>(rel);
        out.converged = true;
        return out;
      }
      if (beta == Scalar(0)) break;
    }
  }
  out.x = x;
  out.relative_residual = static_cast<double>((b - a * x).norm() / bnorm);
  out.converged = out.relative_residual <= static_cast<double>(tol);
  return out;
}

}  // namespace surfflow::linalg
