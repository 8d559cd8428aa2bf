#include "gme/transforms.hpp"

#include <sstream>
#include <stdexcept>

namespace gme {

namespace {

void check_bipartite_dims(const Matrix& m, Index dim_a, Index dim_b, const char* where) {
  if (dim_a < 1 || dim_b < 1) {
    throw std::invalid_argument(std::string(where) + ": dimensions must be positive");
  }
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    std::ostringstream msg;
    msg << where << ": matrix is " << m.rows() << "x" << m.cols() << " but dims give "
        << dim_a * dim_b;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Bipartition::Bipartition(int h) : head(h) {
  if (h < 1 || h > 3) {
    throw std::invalid_argument("Bipartition: head must be 1, 2, or 3");
  }
}

std::array<int, 2> Bipartition::tail() const {
  switch (head) {
    case 1: return {2, 3};
    case 2: return {1, 3};
    default: return {1, 2};
  }
}

std::array<Bipartition, 3> Bipartition::all() {
  return {Bipartition(1), Bipartition(2), Bipartition(3)};
}

Matrix partial_transpose_bipartite(const Matrix& m, Index dim_a, Index dim_b) {
  check_bipartite_dims(m, dim_a, dim_b, "partial_transpose_bipartite");
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < dim_a; ++i) {
    for (Index k = 0; k < dim_a; ++k) {
      for (Index j = 0; j < dim_b; ++j) {
        for (Index l = 0; l < dim_b; ++l) {
          out(i * dim_b + j, k * dim_b + l) = m(i * dim_b + l, k * dim_b + j);
        }
      }
    }
  }
  return out;
}

Matrix partial_transpose(const TripartiteState& rho, int subsystem) {
  const BipartiteSplit split = permute_to_front(rho, subsystem);
  // Transpose-on-A = B-side map of the full transpose.
  Matrix pt = partial_transpose_bipartite(split.mat.transpose(), split.dim_head, split.dim_tail);
  return permute_from_front(pt, rho.dims, subsystem);
}

Matrix realign_bipartite(const Matrix& m, Index dim_a, Index dim_b) {
  check_bipartite_dims(m, dim_a, dim_b, "realign_bipartite");
  Matrix out(dim_a * dim_a, dim_b * dim_b);
  for (Index i = 0; i < dim_a; ++i) {
    for (Index j = 0; j < dim_a; ++j) {
      for (Index k = 0; k < dim_b; ++k) {
        for (Index l = 0; l < dim_b; ++l) {
          out(i * dim_a + j, k * dim_b + l) = m(i * dim_b + k, j * dim_b + l);
        }
      }
    }
  }
  return out;
}

Matrix realign(const TripartiteState& rho, Bipartition cut) {
  const BipartiteSplit split = permute_to_front(rho, cut.head);
  return realign_bipartite(split.mat, split.dim_head, split.dim_tail);
}

}  // namespace gme
