#include "gme/sweep.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gme/criteria.hpp"
#include "gme/io.hpp"

namespace gme {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void check_parametric(Family family, bool wants_y, const char* where) {
  if (family == Family::ghz_qutrit_isotropic) {
    if (wants_y) {
      throw std::invalid_argument(std::string(where) +
                                  ": family ghz_qutrit_isotropic has only the x axis");
    }
    return;
  }
  if (family == Family::ghz_w_qubit_mixture) return;
  throw std::invalid_argument(std::string(where) + ": family " + family_name(family) +
                              " has no parameter axes");
}

Index family_threshold_dim(Family family) {
  return family == Family::ghz_qutrit_isotropic ? 3 : 2;
}

Index axis_point_count(const AxisRange& r, const char* where) {
  if (!(r.step > 0.0)) {
    throw std::invalid_argument(std::string(where) + ": step must be positive");
  }
  if (!(r.start <= r.stop)) {
    throw std::invalid_argument(std::string(where) + ": range start must not exceed stop");
  }
  // Grid tolerance keeps the stop point when (stop-start)/step rounds just
  // under an integer.
  return static_cast<Index>(std::floor((r.stop - r.start) / r.step + 1e-6)) + 1;
}

struct Row {
  double x = 0.0;
  double y = 0.0;
  double M = kNan;
  double N = kNan;
  double score = kNan;
  double threshold = kNan;
  bool is_gme = false;
  double bound_raw = kNan;
  double bound_clamped = kNan;
  bool valid = false;
};

void emit_row(std::ostream& out, const Row& row) {
  out << format_double(row.x) << ',' << format_double(row.y) << ',' << format_double(row.M) << ','
      << format_double(row.N) << ',' << format_double(row.score) << ','
      << format_double(row.threshold) << ',' << (row.is_gme ? '1' : '0') << ','
      << format_double(row.bound_raw) << ',' << format_double(row.bound_clamped) << ','
      << (row.valid ? '1' : '0') << '\n';
}

Row evaluate_point(const FamilyParams& params, double x, double y) {
  Row row;
  row.x = x;
  row.y = y;
  const Index d = family_threshold_dim(params.family);
  row.threshold = (1.0 + 2.0 * static_cast<double>(d)) / 3.0;
  try {
    FamilyParams p = params;
    p.x = x;
    p.y = y;
    const DetectionReport rep = detect_gme(make_family(p));
    row.M = rep.M;
    row.N = rep.N;
    row.score = rep.score;
    row.threshold = rep.threshold;
    row.is_gme = rep.is_gme;
    row.bound_raw = rep.concurrence_lower_bound;
    row.bound_clamped = rep.concurrence_lower_bound_clamped;
    row.valid = true;
  } catch (const std::invalid_argument&) {
    // Point outside the family's parameter domain: flagged, not dropped.
  }
  return row;
}

}  // namespace

void run_sweep(const SweepGrid& grid, std::ostream& out) {
  if (!grid.x && !grid.y) {
    throw std::invalid_argument("run_sweep: at least one axis range is required");
  }
  check_parametric(grid.base.family, grid.y.has_value() || grid.base.y != 0.0, "run_sweep");
  const Index nx = grid.x ? axis_point_count(*grid.x, "run_sweep") : 1;
  const Index ny = grid.y ? axis_point_count(*grid.y, "run_sweep") : 1;
  out << "x,y,M,N,score,threshold,is_gme,bound_raw,bound_clamped,valid\n";
  for (Index i = 0; i < nx; ++i) {
    const double x = grid.x ? grid.x->start + static_cast<double>(i) * grid.x->step : grid.base.x;
    for (Index j = 0; j < ny; ++j) {
      const double y = grid.y ? grid.y->start + static_cast<double>(j) * grid.y->step : grid.base.y;
      emit_row(out, evaluate_point(grid.base, x, y));
    }
  }
  out.flush();
}

void run_sweep_to_file(const SweepGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  run_sweep(grid, out);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

double bisect_threshold(const ThresholdQuery& query) {
  if (query.axis != 'x' && query.axis != 'y') {
    throw std::invalid_argument("bisect_threshold: axis must be 'x' or 'y'");
  }
  check_parametric(query.base.family, query.axis == 'y', "bisect_threshold");
  if (!(query.lo < query.hi)) {
    throw std::invalid_argument("bisect_threshold: lo must be less than hi");
  }
  if (!(query.tol > 0.0)) {
    throw std::invalid_argument("bisect_threshold: tol must be positive");
  }
  const auto verdict = [&query](double v) {
    FamilyParams p = query.base;
    (query.axis == 'x' ? p.x : p.y) = v;
    return detect_gme(make_family(p)).is_gme;
  };
  double lo = query.lo;
  double hi = query.hi;
  const bool verdict_lo = verdict(lo);
  const bool verdict_hi = verdict(hi);
  if (verdict_lo == verdict_hi) {
    std::ostringstream msg;
    msg << "bisect_threshold: no crossing, both endpoints are "
        << (verdict_lo ? "detected" : "not detected");
    throw std::invalid_argument(msg.str());
  }
  for (int iter = 0; iter < 200 && hi - lo > query.tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (verdict(mid) == verdict_hi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gme
