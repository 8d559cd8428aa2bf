#ifndef GME_TENSOR_HPP
#define GME_TENSOR_HPP

#include <array>
#include <vector>

#include "gme/matrix_ops.hpp"

namespace gme {

// Subsystem dimensions of a 1(x)2(x)3 product basis. The composite basis
// index is i1*d2*d3 + i2*d3 + i3 (subsystem 1 most significant), matching
// the kron convention.
struct TripartiteDims {
  Index d1 = 0;
  Index d2 = 0;
  Index d3 = 0;

  Index total() const { return d1 * d2 * d3; }
  bool uniform() const { return d1 == d2 && d2 == d3; }
  Index dim(int subsystem) const;
  bool operator==(const TripartiteDims&) const = default;
};

// Density matrix on the tripartite product space. Valid states are
// Hermitian, unit trace, and PSD within the tolerances in gme::tol.
struct TripartiteState {
  TripartiteDims dims;
  Matrix mat;
};

// Throws std::invalid_argument naming the violated invariant.
void validate_state(const TripartiteState& rho);

struct PureStateVector {
  TripartiteDims dims;
  Vector amps;
};

void validate_normalized(const Vector& amps);

// Squared Schmidt coefficients, descending, summing to 1.
struct SchmidtSpectrum {
  std::vector<double> coefficients;
  double sum() const;
};

SchmidtSpectrum schmidt_spectrum(const Vector& amps, Index m, Index n);

// Partial trace over the two complementary subsystems; d_i x d_i.
Matrix reduced_state(const TripartiteState& rho, int subsystem);

// State reshaped as a bipartite operator with the chosen subsystem first.
struct BipartiteSplit {
  Matrix mat;
  Index dim_head = 0;  // d_i
  Index dim_tail = 0;  // product of the other two
};

// Reorders tensor factors so `subsystem` is the first factor; the
// complementary pair keeps ascending original order (2 -> order 2,1,3).
BipartiteSplit permute_to_front(const TripartiteState& rho, int subsystem);
Matrix permute_from_front(const Matrix& m, const TripartiteDims& dims, int subsystem);

Vector permute_amps_to_front(const Vector& amps, const TripartiteDims& dims, int subsystem);
Vector permute_amps_from_front(const Vector& amps, const TripartiteDims& dims, int subsystem);

}  // namespace gme

#endif  // GME_TENSOR_HPP
