#ifndef GME_SWEEP_HPP
#define GME_SWEEP_HPP

#include <optional>
#include <ostream>
#include <string>

#include "gme/states.hpp"

namespace gme {

struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;  // must be positive, start <= stop
};

// Parameter grid over one or both of the family's axes. Fixed axes take
// their value from `base`. Rows are emitted x-major.
struct SweepGrid {
  FamilyParams base;
  std::optional<AxisRange> x;
  std::optional<AxisRange> y;
};

// CSV columns: x,y,M,N,score,threshold,is_gme,bound_raw,bound_clamped,valid.
// Grid points whose parameters are rejected (outside the family's domain)
// are emitted with valid=0 and nan numeric fields instead of being dropped.
void run_sweep(const SweepGrid& grid, std::ostream& out);
void run_sweep_to_file(const SweepGrid& grid, const std::string& path);

struct ThresholdQuery {
  FamilyParams base;
  char axis = 'x';  // 'x' or 'y'
  double lo = 0.0;
  double hi = 0.0;
  double tol = 1e-6;
};

// Bisects the strict predicate score > threshold along the chosen axis.
// The endpoints must have different verdicts.
double bisect_threshold(const ThresholdQuery& query);

}  // namespace gme

#endif  // GME_SWEEP_HPP
