#include "surfflow/linalg.hpp"

#include <Eigen/SparseLU>

#include <algorithm>
#include <cstdio>

namespace surfflow::linalg {

SparseMatrix block_assemble(const SparseMatrix& hodge, const SparseMatrix& coboundary) {
  const Eigen::Index n = hodge.rows();
  const Eigen::Index m = coboundary.rows();
  if (hodge.cols() != n || coboundary.cols() != n) {
    throw DimensionMismatch("block_assemble: hodge is " + std::to_string(hodge.rows()) + "x" +
                            std::to_string(hodge.cols()) + ", coboundary is " +
                            std::to_string(coboundary.rows()) + "x" +
                            std::to_string(coboundary.cols()));
  }
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(hodge.nonZeros() + 2 * coboundary.nonZeros()));
  for (Eigen::Index r = 0; r < hodge.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(hodge, r); it; ++it) {
      t.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), -it.value());
    }
  }
  for (Eigen::Index r = 0; r < coboundary.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(coboundary, r); it; ++it) {
      const int row = static_cast<int>(n + it.row());
      const int col = static_cast<int>(it.col());
      t.emplace_back(row, col, it.value());
      t.emplace_back(col, row, it.value());
    }
  }
  return from_triplets<double>(n + m, n + m, t);
}

double asymmetry(const SparseMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("asymmetry: matrix is not square");
  const SparseMatrix diff = a - SparseMatrix(a.transpose());
  double worst = 0.0;
  for (Eigen::Index r = 0; r < diff.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(diff, r); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

double max_abs(const SparseMatrix& a) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < a.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(a, r); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::direct: return "direct";
    case SolveMethod::minres: return "minres";
    case SolveMethod::automatic: return "automatic";
  }
  return "unknown";
}

Vector saddle_diagonal_preconditioner(const SparseMatrix& a) {
  const Eigen::Index n = a.rows();
  Vector diag = a.diagonal().cwiseAbs();
  const double scale = diag.size() > 0 ? diag.maxCoeff() : 0.0;
  const double floor = scale * 1e-14;
  Vector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (diag[i] > floor) {
      out[i] = diag[i];
      continue;
    }
    double schur = 0.0;
    for (SparseMatrix::InnerIterator it(a, i); it; ++it) {
      const Eigen::Index j = it.col();
      if (j != i && diag[j] > floor) schur += it.value() * it.value() / diag[j];
    }
    out[i] = schur > 0.0 ? schur : 1.0;
  }
  return out;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double relative_residual(const SparseMatrix& a, const Vector& x, const Vector& b) {
  const double bnorm = b.norm();
  const double rnorm = (b - a * x).norm();
  return bnorm > 0.0 ? rnorm / bnorm : rnorm;
}

SolveResult solve_direct(const SparseMatrix& a, const Vector& b, double tol) {
  using ColMajor = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
  ColMajor a_col = a;
  a_col.makeCompressed();
  Eigen::SparseLU<ColMajor, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(a_col);
  lu.factorize(a_col);
  if (lu.info() != Eigen::Success) {
    throw SingularSystem("sparse LU factorization failed: " + lu.lastErrorMessage());
  }
  SolveResult out;
  out.stats.method = SolveMethod::direct;
  out.stats.factor_nonzeros = lu.nnzL() + lu.nnzU();
  out.x = lu.solve(b);
  if (!out.x.allFinite()) throw SingularSystem("sparse LU produced non-finite values");
  out.relative_residual = relative_residual(a, out.x, b);
  // A few steps of iterative refinement recover digits lost to pivot growth.
  for (int step = 0; step < 3 && out.relative_residual > tol; ++step) {
    const Vector r = b - a * out.x;
    out.x += lu.solve(r);
    out.relative_residual = relative_residual(a, out.x, b);
    out.stats.iterations = step + 1;
  }
  return out;
}

SolveResult solve_minres(const SparseMatrix& a, const Vector& b, double tol, int max_iterations) {
  const int limit = max_iterations > 0 ? max_iterations : std::max<int>(1000, 20 * static_cast<int>(b.size()));
  MinresResult m = minres<double>(a, b, saddle_diagonal_preconditioner(a), tol, limit);
  if (!m.converged) {
    throw SolverDivergence("minres did not reach relative residual " + sci(tol) +
                           " in " + std::to_string(m.iterations) + " iterations (reached " +
                           sci(m.relative_residual) + ")");
  }
  SolveResult out;
  out.x = std::move(m.x);
  out.relative_residual = m.relative_residual;
  out.stats.method = SolveMethod::minres;
  out.stats.iterations = m.iterations;
  return out;
}

}  // namespace

SolveResult solve_symmetric_indefinite(const SparseMatrix& a, const Vector& b, double tol,
                                       SolveMethod method, int max_iterations) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw DimensionMismatch("solve: matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", rhs has " + std::to_string(b.size()) +
                            " entries");
  }
  if (b.size() == 0) return SolveResult{Vector(0), 0.0, {}};

  switch (method) {
    case SolveMethod::direct: {
      SolveResult r = solve_direct(a, b, tol);
      if (r.relative_residual > tol) {
        throw SingularSystem("direct solve residual " + std::to_string(r.relative_residual) +
                             " exceeds tolerance; matrix is numerically singular");
      }
      return r;
    }
    case SolveMethod::minres:
      return solve_minres(a, b, tol, max_iterations);
    case SolveMethod::automatic: {
      try {
        SolveResult r = solve_direct(a, b, tol);
        if (r.relative_residual <= tol) return r;
      } catch (const SingularSystem&) {
      }
      SolveResult r = solve_minres(a, b, tol, max_iterations);
      r.stats.fell_back = true;
      return r;
    }
  }
  throw SolverError("unknown solve method");
}

}  // namespace surfflow::linalg
