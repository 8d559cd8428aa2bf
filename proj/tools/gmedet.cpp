// gmedet: detect genuine tripartite entanglement from the command line.
//
//   gmedet detect    --family ghz_qutrit_isotropic --x 0.8 [--json]
//   gmedet detect    --input state.json
//   gmedet sweep     --family ghz_w_qubit_mixture --x 0:1 --y 0:1 --step 0.05 --output grid.csv
//   gmedet threshold --family ghz_qutrit_isotropic --x 0:1 --tol 1e-6
//
// Exit codes: 0 = GME detected / success, 1 = not detected, 2 = error.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "gme/criteria.hpp"
#include "gme/io.hpp"
#include "gme/states.hpp"
#include "gme/sweep.hpp"
#include "gme/tensor.hpp"

namespace {

struct AxisArg {
  bool present = false;
  bool is_range = false;
  double value = 0.0;  // scalar form
  double lo = 0.0;     // range form "lo:hi"
  double hi = 0.0;
};

double parse_number(const std::string& text) {
  std::size_t pos = 0;
  const double v = std::stod(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters");
  return v;
}

AxisArg parse_axis(const std::string& text, const std::string& flag) {
  AxisArg arg;
  arg.present = true;
  try {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
      arg.value = parse_number(text);
    } else {
      arg.is_range = true;
      arg.lo = parse_number(text.substr(0, colon));
      arg.hi = parse_number(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument(flag + ": expected a number or a lo:hi range, got '" + text + "'");
  }
  return arg;
}

void check_axis_flags(gme::Family family, bool has_x, bool has_y) {
  const bool takes_x = family == gme::Family::ghz_qutrit_isotropic ||
                       family == gme::Family::ghz_w_qubit_mixture;
  const bool takes_y = family == gme::Family::ghz_w_qubit_mixture;
  if (has_x && !takes_x) {
    throw std::invalid_argument(std::string("--x does not apply to family ") +
                                gme::family_name(family));
  }
  if (has_y && !takes_y) {
    throw std::invalid_argument(std::string("--y does not apply to family ") +
                                gme::family_name(family));
  }
}

struct DetectArgs {
  std::string input;
  std::string family;
  double x = 0.0;
  double y = 0.0;
  std::int64_t d = 0;
  std::uint64_t seed = 0;
  bool json = false;
  bool has_x = false;
  bool has_y = false;
};

int run_detect(const DetectArgs& args) {
  if (!args.input.empty() && !args.family.empty()) {
    throw std::invalid_argument("choose either --input or --family, not both");
  }
  gme::TripartiteState rho;
  if (!args.input.empty()) {
    rho = gme::read_state_file(args.input);
  } else if (!args.family.empty()) {
    gme::FamilyParams params;
    params.family = gme::parse_family(args.family);
    check_axis_flags(params.family, args.has_x, args.has_y);
    params.x = args.x;
    params.y = args.y;
    params.d = static_cast<gme::Index>(args.d);
    params.seed = args.seed;
    rho = gme::make_family(params);
  } else {
    throw std::invalid_argument("one of --input or --family is required (families: " +
                                gme::family_list() + ")");
  }
  const gme::DetectionReport rep = gme::detect_gme(rho);
  std::cout << (args.json ? gme::render_report_json(rep) : gme::render_report_text(rep));
  return rep.is_gme ? 0 : 1;
}

struct GridArgs {
  std::string family;
  std::string x_text;
  std::string y_text;
  double step = 0.0;
  double tol = 1e-6;
  std::string output;
  bool has_step = false;
};

int run_sweep_cmd(const GridArgs& args) {
  gme::SweepGrid grid;
  grid.base.family = gme::parse_family(args.family);
  const AxisArg ax = args.x_text.empty() ? AxisArg{} : parse_axis(args.x_text, "--x");
  const AxisArg ay = args.y_text.empty() ? AxisArg{} : parse_axis(args.y_text, "--y");
  check_axis_flags(grid.base.family, ax.present, ay.present);
  if (!ax.is_range && !ay.is_range) {
    throw std::invalid_argument("sweep requires a lo:hi range on --x or --y");
  }
  if (!args.has_step) {
    throw std::invalid_argument("sweep requires --step");
  }
  if (ax.is_range) {
    grid.x = gme::AxisRange{ax.lo, ax.hi, args.step};
  } else if (ax.present) {
    grid.base.x = ax.value;
  }
  if (ay.is_range) {
    grid.y = gme::AxisRange{ay.lo, ay.hi, args.step};
  } else if (ay.present) {
    grid.base.y = ay.value;
  }
  if (args.output.empty()) {
    gme::run_sweep(grid, std::cout);
  } else {
    gme::run_sweep_to_file(grid, args.output);
  }
  return 0;
}

int run_threshold_cmd(const GridArgs& args) {
  gme::ThresholdQuery query;
  query.base.family = gme::parse_family(args.family);
  const AxisArg ax = args.x_text.empty() ? AxisArg{} : parse_axis(args.x_text, "--x");
  const AxisArg ay = args.y_text.empty() ? AxisArg{} : parse_axis(args.y_text, "--y");
  check_axis_flags(query.base.family, ax.present, ay.present);
  if (ax.is_range == ay.is_range) {
    throw std::invalid_argument("threshold requires a lo:hi range on exactly one of --x, --y");
  }
  const AxisArg& swept = ax.is_range ? ax : ay;
  query.axis = ax.is_range ? 'x' : 'y';
  query.lo = swept.lo;
  query.hi = swept.hi;
  query.tol = args.tol;
  if (ax.present && !ax.is_range) query.base.x = ax.value;
  if (ay.present && !ay.is_range) query.base.y = ay.value;
  const double crossing = gme::bisect_threshold(query);
  std::cout << query.axis << " = " << gme::format_double(crossing) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genuine tripartite entanglement detector (averaged PT/realignment trace norms)"};
  app.require_subcommand(1);

  DetectArgs det;
  auto* detect = app.add_subcommand("detect", "Analyze one state and print a detection report");
  detect->add_option("--input", det.input, "State file to analyze");
  detect->add_option("--family", det.family, "Named state family (" + gme::family_list() + ")");
  auto* det_x = detect->add_option("--x", det.x, "Family parameter x");
  auto* det_y = detect->add_option("--y", det.y, "Family parameter y");
  detect->add_option("--d", det.d, "Local dimension (0 = family default)");
  detect->add_option("--seed", det.seed, "Seed for the random families");
  detect->add_flag("--json", det.json, "Emit the report as JSON");

  GridArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid and emit CSV");
  sweep->add_option("--family", sweep_args.family, "Parametric state family")->required();
  sweep->add_option("--x", sweep_args.x_text, "x value, or lo:hi to sweep x");
  sweep->add_option("--y", sweep_args.y_text, "y value, or lo:hi to sweep y");
  auto* step_opt = sweep->add_option("--step", sweep_args.step, "Grid step for swept axes");
  sweep->add_option("--output", sweep_args.output, "CSV output path (default: stdout)");

  GridArgs thr_args;
  auto* threshold =
      app.add_subcommand("threshold", "Bisect the detection boundary along one axis");
  threshold->add_option("--family", thr_args.family, "Parametric state family")->required();
  threshold->add_option("--x", thr_args.x_text, "x value, or lo:hi to bisect over x");
  threshold->add_option("--y", thr_args.y_text, "y value, or lo:hi to bisect over y");
  threshold->add_option("--tol", thr_args.tol, "Absolute tolerance on the crossing parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    det.has_x = det_x->count() > 0;
    det.has_y = det_y->count() > 0;
    sweep_args.has_step = step_opt->count() > 0;
    if (detect->parsed()) return run_detect(det);
    if (sweep->parsed()) return run_sweep_cmd(sweep_args);
    return run_threshold_cmd(thr_args);
  } catch (const std::exception& e) {
    std::cerr << "gmedet: " << e.what() << '\n';
    return 2;
  }
}
