#ifndef GME_MATRIX_OPS_HPP
#define GME_MATRIX_OPS_HPP

#include <complex>

#include <Eigen/Dense>

namespace gme {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Validation tolerances. The criteria are exact-arithmetic statements;
// these absorb floating-point SVD/eigensolver error.
namespace tol {
inline constexpr double hermiticity = 1e-9;
inline constexpr double trace = 1e-9;
inline constexpr double norm = 1e-9;
inline constexpr double psd = 1e-8;
}  // namespace tol

bool is_hermitian(const Matrix& m, double tolerance);

// Trace norm (sum of singular values). Square matrices that are Hermitian
// within roundoff go through the eigenvalue route, everything else through
// an SVD. The two routes agree within 1e-9 on Hermitian inputs.
double trace_norm(const Matrix& m);
double trace_norm_via_svd(const Matrix& m);
double trace_norm_via_eigs(const Matrix& m);

// Kronecker product, first factor most significant:
// (a (x) b)(i_a*rb + i_b, j_a*cb + j_b) = a(i_a, j_a) * b(i_b, j_b).
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace gme

#endif  // GME_MATRIX_OPS_HPP
