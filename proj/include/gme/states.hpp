#ifndef GME_STATES_HPP
#define GME_STATES_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "gme/rng.hpp"
#include "gme/tensor.hpp"

namespace gme {

enum class Family {
  ghz_qutrit_isotropic,  // (1-x)/27 I + x |GHZ_3><GHZ_3|, d = 3
  ghz_w_qubit_mixture,   // (1-x-y)/8 I + x |GHZ><GHZ| + y |W><W|, d = 2
  ghz_pure,
  w_pure,
  product_pure,
  maximally_mixed,
  haar_pure,
  random_biseparable,
};

struct FamilyParams {
  Family family = Family::maximally_mixed;
  double x = 0.0;
  double y = 0.0;
  Index d = 0;  // 0 = family default (3 for ghz_qutrit_isotropic, else 2)
  std::uint64_t seed = 0;
};

const char* family_name(Family f);
Family parse_family(std::string_view name);
std::string family_list();

// |GHZ_d> = (|00...0> + ... + |d-1 d-1 d-1>)/sqrt(d), tripartite.
Vector ghz_vector(Index d);
// |W> = (|001> + |010> + |100>)/sqrt(3), three qubits.
Vector w_vector();

TripartiteState pure_to_state(const PureStateVector& psi);
TripartiteState maximally_mixed_state(Index d);

// rho = (1-x)/27 I + x |GHZ_3><GHZ_3| on 3x3x3, 0 <= x <= 1.
TripartiteState make_example1(double x);

// rho = (1-x-y)/8 I + x |GHZ><GHZ| + y |W><W| on 2x2x2,
// x, y >= 0 and x + y <= 1.
TripartiteState make_example2(double x, double y);

// max{M, N} of make_example1(x) in closed form: (8 + 10x + |10x - 1|)/9.
double example1_score_closed_form(double x);

// The published closed form g(x, y) for the concurrence lower bound of
// make_example2, transcribed as printed. Negative radicands arising from
// roundoff at exact zeros are clamped to 0.
double example2_bound_closed_form(double x, double y);

PureStateVector haar_random_pure(const TripartiteDims& dims, std::uint64_t seed);
Vector haar_random_vector(Index n, Rng& rng);

// |head> (x) |tail> across the cut head_subsystem|rest, re-expressed in the
// canonical factor order. head has length d_i, tail the complementary product.
Vector biseparable_product_vector(const Vector& head, const Vector& tail,
                                  const TripartiteDims& dims, int head_subsystem);

// Convex mixture of `components` pure product states across independently
// drawn cuts, flat Dirichlet weights. Satisfies the biseparability
// hypothesis of the detection criterion by construction.
TripartiteState random_biseparable(Index d, int components, std::uint64_t seed);

TripartiteState make_family(const FamilyParams& params);

}  // namespace gme

#endif  // GME_STATES_HPP
