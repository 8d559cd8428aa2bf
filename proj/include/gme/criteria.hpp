#ifndef GME_CRITERIA_HPP
#define GME_CRITERIA_HPP

#include <array>

#include "gme/tensor.hpp"

namespace gme {

// Everything the detection pipeline computes for one state. A true verdict
// certifies genuine tripartite entanglement; a false verdict is inconclusive
// (the criterion is sufficient, not necessary).
struct DetectionReport {
  std::array<double, 3> ppt_norms{};   // ||rho^{T_i}||, i = 1..3
  std::array<double, 3> ccnr_norms{};  // ||R_{i|jk}(rho)||, i = 1..3
  double M = 0.0;                      // mean of ppt_norms
  double N = 0.0;                      // mean of ccnr_norms
  double score = 0.0;                  // max{M, N}
  double threshold = 0.0;              // (1 + 2d)/3
  bool is_gme = false;                 // score > threshold, strict
  double concurrence_lower_bound = 0.0;          // (score - threshold)/sqrt(d(d-1))
  double concurrence_lower_bound_clamped = 0.0;  // max(0, raw)
};

// Mean of the three partial-transpose trace norms. Requires d1 = d2 = d3.
double compute_M(const TripartiteState& rho);

// Mean of the three realignment trace norms. Requires d1 = d2 = d3.
double compute_N(const TripartiteState& rho);

// Full pipeline: validates the state, computes all six norms and the
// verdict. Requires equal dims with d >= 2.
DetectionReport detect_gme(const TripartiteState& rho);

// Raw lower bound on the GME concurrence; may be negative. d >= 2.
double gme_concurrence_lower_bound(const TripartiteState& rho);

// (||rho^{T_i}|| - 1)/sqrt(d(d-1)) for i = 1..3: per-cut lower bounds on
// sqrt(1 - tr rho_i^2), valid for pure rho.
std::array<double, 3> purity_deficit_bounds(const TripartiteState& rho);

// Exact GME concurrence of a pure state via reduced-state purities.
double pure_gme_concurrence(const PureStateVector& psi);

}  // namespace gme

#endif  // GME_CRITERIA_HPP
