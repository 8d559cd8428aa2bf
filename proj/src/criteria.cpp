#include "gme/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gme/transforms.hpp"

namespace gme {

namespace {

Index require_uniform_dims(const TripartiteState& rho, const char* where) {
  if (!rho.dims.uniform()) {
    std::ostringstream msg;
    msg << where << ": criteria require equal subsystem dimensions, got " << rho.dims.d1 << "x"
        << rho.dims.d2 << "x" << rho.dims.d3;
    throw std::invalid_argument(msg.str());
  }
  return rho.dims.d1;
}

Index require_uniform_dims_ge2(const TripartiteState& rho, const char* where) {
  const Index d = require_uniform_dims(rho, where);
  if (d < 2) {
    throw std::invalid_argument(std::string(where) +
                                ": degenerate dimension d = 1 (sqrt(d(d-1)) vanishes)");
  }
  return d;
}

std::array<double, 3> ppt_norms_of(const TripartiteState& rho) {
  std::array<double, 3> out{};
  for (int i = 1; i <= 3; ++i) {
    out[static_cast<size_t>(i - 1)] = trace_norm(partial_transpose(rho, i));
  }
  return out;
}

std::array<double, 3> ccnr_norms_of(const TripartiteState& rho) {
  std::array<double, 3> out{};
  for (const Bipartition cut : Bipartition::all()) {
    out[static_cast<size_t>(cut.head - 1)] = trace_norm(realign(rho, cut));
  }
  return out;
}

double mean3(const std::array<double, 3>& v) { return (v[0] + v[1] + v[2]) / 3.0; }

}  // namespace

double compute_M(const TripartiteState& rho) {
  require_uniform_dims(rho, "compute_M");
  return mean3(ppt_norms_of(rho));
}

double compute_N(const TripartiteState& rho) {
  require_uniform_dims(rho, "compute_N");
  return mean3(ccnr_norms_of(rho));
}

DetectionReport detect_gme(const TripartiteState& rho) {
  const Index d = require_uniform_dims_ge2(rho, "detect_gme");
  validate_state(rho);
  DetectionReport rep;
  rep.ppt_norms = ppt_norms_of(rho);
  rep.ccnr_norms = ccnr_norms_of(rho);
  rep.M = mean3(rep.ppt_norms);
  rep.N = mean3(rep.ccnr_norms);
  rep.score = std::max(rep.M, rep.N);
  rep.threshold = (1.0 + 2.0 * static_cast<double>(d)) / 3.0;
  rep.is_gme = rep.score > rep.threshold;
  rep.concurrence_lower_bound =
      (rep.score - rep.threshold) / std::sqrt(static_cast<double>(d * (d - 1)));
  rep.concurrence_lower_bound_clamped = std::max(0.0, rep.concurrence_lower_bound);
  return rep;
}

double gme_concurrence_lower_bound(const TripartiteState& rho) {
  const Index d = require_uniform_dims_ge2(rho, "gme_concurrence_lower_bound");
  const double score = std::max(compute_M(rho), compute_N(rho));
  const double threshold = (1.0 + 2.0 * static_cast<double>(d)) / 3.0;
  return (score - threshold) / std::sqrt(static_cast<double>(d * (d - 1)));
}

std::array<double, 3> purity_deficit_bounds(const TripartiteState& rho) {
  const Index d = require_uniform_dims_ge2(rho, "purity_deficit_bounds");
  const double denom = std::sqrt(static_cast<double>(d * (d - 1)));
  std::array<double, 3> out = ppt_norms_of(rho);
  for (double& v : out) v = (v - 1.0) / denom;
  return out;
}

double pure_gme_concurrence(const PureStateVector& psi) {
  if (psi.amps.size() != psi.dims.total()) {
    throw std::invalid_argument("pure_gme_concurrence: amplitude length does not match dims");
  }
  validate_normalized(psi.amps);
  double min_deficit = 1.0;
  for (int i = 1; i <= 3; ++i) {
    const Vector front = permute_amps_to_front(psi.amps, psi.dims, i);
    const Index m = psi.dims.dim(i);
    const SchmidtSpectrum u = schmidt_spectrum(front, m, psi.amps.size() / m);
    double purity = 0.0;
    for (double c : u.coefficients) purity += c * c;
    min_deficit = std::min(min_deficit, 1.0 - purity);
  }
  return std::sqrt(std::max(0.0, min_deficit));
}

}  // namespace gme
