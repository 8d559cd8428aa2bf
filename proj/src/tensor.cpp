#include "gme/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gme {

namespace {

void check_subsystem(int subsystem, const char* where) {
  if (subsystem < 1 || subsystem > 3) {
    throw std::invalid_argument(std::string(where) + ": subsystem must be 1, 2, or 3");
  }
}

void check_dims(const TripartiteDims& dims, const char* where) {
  if (dims.d1 < 1 || dims.d2 < 1 || dims.d3 < 1) {
    throw std::invalid_argument(std::string(where) + ": subsystem dimensions must be positive");
  }
}

// Factor order placing `subsystem` first, complementary pair ascending.
std::array<int, 3> front_order(int subsystem) {
  switch (subsystem) {
    case 1: return {1, 2, 3};
    case 2: return {2, 1, 3};
    default: return {3, 1, 2};
  }
}

// Maps a composite index in canonical (1,2,3) order to the index in the
// basis ordered by `order`.
std::vector<Index> permutation_map(const TripartiteDims& dims, const std::array<int, 3>& order) {
  const std::array<Index, 3> d = {dims.d1, dims.d2, dims.d3};
  const Index stride1 = d[order[1] - 1] * d[order[2] - 1];
  const Index stride2 = d[order[2] - 1];
  std::vector<Index> map(static_cast<size_t>(dims.total()));
  std::array<Index, 3> idx{};
  Index src = 0;
  for (idx[0] = 0; idx[0] < d[0]; ++idx[0]) {
    for (idx[1] = 0; idx[1] < d[1]; ++idx[1]) {
      for (idx[2] = 0; idx[2] < d[2]; ++idx[2], ++src) {
        map[static_cast<size_t>(src)] =
            idx[order[0] - 1] * stride1 + idx[order[1] - 1] * stride2 + idx[order[2] - 1];
      }
    }
  }
  return map;
}

}  // namespace

Index TripartiteDims::dim(int subsystem) const {
  check_subsystem(subsystem, "TripartiteDims::dim");
  return subsystem == 1 ? d1 : (subsystem == 2 ? d2 : d3);
}

void validate_state(const TripartiteState& rho) {
  check_dims(rho.dims, "validate_state");
  const Index n = rho.dims.total();
  if (rho.mat.rows() != n || rho.mat.cols() != n) {
    std::ostringstream msg;
    msg << "validate_state: matrix is " << rho.mat.rows() << "x" << rho.mat.cols()
        << " but dims give " << n;
    throw std::invalid_argument(msg.str());
  }
  if (!rho.mat.allFinite()) {
    throw std::invalid_argument("validate_state: finiteness invariant violated (non-finite entries)");
  }
  const double herm_dev = (rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::hermiticity) {
    std::ostringstream msg;
    msg << "validate_state: hermiticity invariant violated (max |rho - rho^dagger| = " << herm_dev << ")";
    throw std::invalid_argument(msg.str());
  }
  const Complex tr = rho.mat.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::trace) {
    std::ostringstream msg;
    msg << "validate_state: trace invariant violated (tr = " << tr.real();
    if (tr.imag() != 0.0) msg << (tr.imag() < 0 ? "" : "+") << tr.imag() << "i";
    msg << ")";
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho.mat + rho.mat.adjoint()),
                                           Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::psd) {
    std::ostringstream msg;
    msg << "validate_state: positivity invariant violated (min eigenvalue = " << min_eig << ")";
    throw std::invalid_argument(msg.str());
  }
}

void validate_normalized(const Vector& amps) {
  if (!amps.allFinite()) {
    throw std::invalid_argument("validate_normalized: non-finite amplitudes");
  }
  const double n = amps.norm();
  if (std::abs(n - 1.0) > tol::norm) {
    std::ostringstream msg;
    msg << "validate_normalized: norm invariant violated (|v| = " << n << ")";
    throw std::invalid_argument(msg.str());
  }
}

double SchmidtSpectrum::sum() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), 0.0);
}

SchmidtSpectrum schmidt_spectrum(const Vector& amps, Index m, Index n) {
  if (m < 1 || n < 1 || amps.size() != m * n) {
    std::ostringstream msg;
    msg << "schmidt_spectrum: vector length " << amps.size() << " does not match " << m << "x" << n;
    throw std::invalid_argument(msg.str());
  }
  validate_normalized(amps);
  // Row-major reshape: Psi(a, b) = amps[a*n + b].
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      psi(amps.data(), m, n);
  Eigen::JacobiSVD<Matrix> svd(psi);
  SchmidtSpectrum out;
  out.coefficients.resize(static_cast<size_t>(svd.singularValues().size()));
  for (Index i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    out.coefficients[static_cast<size_t>(i)] = s * s;
  }
  std::sort(out.coefficients.begin(), out.coefficients.end(), std::greater<>());
  return out;
}

Matrix reduced_state(const TripartiteState& rho, int subsystem) {
  check_subsystem(subsystem, "reduced_state");
  check_dims(rho.dims, "reduced_state");
  const BipartiteSplit split = permute_to_front(rho, subsystem);
  Matrix out = Matrix::Zero(split.dim_head, split.dim_head);
  for (Index i = 0; i < split.dim_head; ++i) {
    for (Index j = 0; j < split.dim_head; ++j) {
      Complex acc(0.0, 0.0);
      for (Index k = 0; k < split.dim_tail; ++k) {
        acc += split.mat(i * split.dim_tail + k, j * split.dim_tail + k);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

BipartiteSplit permute_to_front(const TripartiteState& rho, int subsystem) {
  check_subsystem(subsystem, "permute_to_front");
  check_dims(rho.dims, "permute_to_front");
  const Index n = rho.dims.total();
  if (rho.mat.rows() != n || rho.mat.cols() != n) {
    throw std::invalid_argument("permute_to_front: matrix size does not match dims");
  }
  BipartiteSplit out;
  out.dim_head = rho.dims.dim(subsystem);
  out.dim_tail = n / out.dim_head;
  if (subsystem == 1) {
    out.mat = rho.mat;
    return out;
  }
  const std::vector<Index> map = permutation_map(rho.dims, front_order(subsystem));
  out.mat.resize(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      out.mat(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]) = rho.mat(r, c);
    }
  }
  return out;
}

Matrix permute_from_front(const Matrix& m, const TripartiteDims& dims, int subsystem) {
  check_subsystem(subsystem, "permute_from_front");
  check_dims(dims, "permute_from_front");
  const Index n = dims.total();
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("permute_from_front: matrix size does not match dims");
  }
  if (subsystem == 1) return m;
  const std::vector<Index> map = permutation_map(dims, front_order(subsystem));
  Matrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      out(r, c) = m(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]);
    }
  }
  return out;
}

Vector permute_amps_to_front(const Vector& amps, const TripartiteDims& dims, int subsystem) {
  check_subsystem(subsystem, "permute_amps_to_front");
  check_dims(dims, "permute_amps_to_front");
  if (amps.size() != dims.total()) {
    throw std::invalid_argument("permute_amps_to_front: vector length does not match dims");
  }
  if (subsystem == 1) return amps;
  const std::vector<Index> map = permutation_map(dims, front_order(subsystem));
  Vector out(amps.size());
  for (Index i = 0; i < amps.size(); ++i) {
    out(map[static_cast<size_t>(i)]) = amps(i);
  }
  return out;
}

Vector permute_amps_from_front(const Vector& amps, const TripartiteDims& dims, int subsystem) {
  check_subsystem(subsystem, "permute_amps_from_front");
  check_dims(dims, "permute_amps_from_front");
  if (amps.size() != dims.total()) {
    throw std::invalid_argument("permute_amps_from_front: vector length does not match dims");
  }
  if (subsystem == 1) return amps;
  const std::vector<Index> map = permutation_map(dims, front_order(subsystem));
  Vector out(amps.size());
  for (Index i = 0; i < amps.size(); ++i) {
    out(i) = amps(map[static_cast<size_t>(i)]);
  }
  return out;
}

}  // namespace gme
