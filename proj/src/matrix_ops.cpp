#include "gme/matrix_ops.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gme {

namespace {

// Tight relative tolerance used only to pick the eigenvalue route; loose
// enough to absorb representation roundoff, far below tol::hermiticity.
constexpr double kHermitianDispatchTol = 1e-12;

void require_finite(const Matrix& m, const char* where) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(where) + ": matrix has non-finite entries");
  }
}

}  // namespace

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

double trace_norm_via_svd(const Matrix& m) {
  require_finite(m, "trace_norm");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double trace_norm_via_eigs(const Matrix& m) {
  require_finite(m, "trace_norm");
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("trace_norm: eigenvalue route requires a square matrix");
  }
  Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double trace_norm(const Matrix& m) {
  require_finite(m, "trace_norm");
  if (m.rows() == m.cols()) {
    const double scale = m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0;
    if (is_hermitian(m, kHermitianDispatchTol * (1.0 + scale))) {
      return trace_norm_via_eigs(m);
    }
  }
  return trace_norm_via_svd(m);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_finite(a, "kron");
  require_finite(b, "kron");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace gme
