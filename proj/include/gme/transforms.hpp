#ifndef GME_TRANSFORMS_HPP
#define GME_TRANSFORMS_HPP

#include <array>

#include "gme/tensor.hpp"

namespace gme {

// One of the three cuts i|jk. The single-party side is `head`; the
// complementary pair is kept in ascending original order.
struct Bipartition {
  int head = 1;

  explicit Bipartition(int h);
  std::array<int, 2> tail() const;
  static std::array<Bipartition, 3> all();
};

// Partial transposition on the second factor:
// out_{(i,j),(k,l)} = in_{(i,l),(k,j)} with i,k indexing A and j,l indexing B.
Matrix partial_transpose_bipartite(const Matrix& m, Index dim_a, Index dim_b);

// Transposes the chosen subsystem: permute it to the front, transpose the
// front factor (full transpose composed with the B-side map above), permute
// back. Pure index moves, so the double application is bit-exact identity.
Matrix partial_transpose(const TripartiteState& rho, int subsystem);

// Realignment, out is dim_a^2 x dim_b^2:
// out_{(i,j),(k,l)} = in_{(i,k),(j,l)} with i,j indexing A and k,l indexing B.
Matrix realign_bipartite(const Matrix& m, Index dim_a, Index dim_b);

// Bipartite realignment across the cut head|tail of a tripartite state;
// output is d_head^2 x (d_j*d_k)^2.
Matrix realign(const TripartiteState& rho, Bipartition cut);

}  // namespace gme

#endif  // GME_TRANSFORMS_HPP
