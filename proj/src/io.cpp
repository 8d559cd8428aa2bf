#include "gme/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gme {

namespace {

// 17 significant digits: enough for exact double round trips.
std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void bad_file(const std::string& what) {
  throw std::invalid_argument("state file: " + what);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string state_to_text(const TripartiteState& rho) {
  const Index n = rho.dims.total();
  if (rho.mat.rows() != n || rho.mat.cols() != n) {
    throw std::invalid_argument("state_to_text: matrix size does not match dims");
  }
  if (!rho.mat.allFinite()) {
    throw std::invalid_argument("state_to_text: matrix has non-finite entries");
  }
  std::string out;
  out.reserve(static_cast<size_t>(n) * static_cast<size_t>(n) * 24 + 64);
  out += "{\n  \"dims\": [";
  out += std::to_string(rho.dims.d1);
  out += ", ";
  out += std::to_string(rho.dims.d2);
  out += ", ";
  out += std::to_string(rho.dims.d3);
  out += "],\n  \"matrix\": [\n";
  for (Index r = 0; r < n; ++r) {
    out += "    [";
    for (Index c = 0; c < n; ++c) {
      const Complex z = rho.mat(r, c);
      out += '[';
      out += full_precision(z.real());
      out += ", ";
      out += full_precision(z.imag());
      out += ']';
      if (c + 1 < n) out += ", ";
    }
    out += (r + 1 < n) ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

TripartiteState state_from_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad_file(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    bad_file("expected an object with \"dims\" and \"matrix\"");
  }
  const auto& jd = j["dims"];
  if (!jd.is_array() || jd.size() != 3) bad_file("\"dims\" must be an array of three integers");
  TripartiteDims dims;
  Index* const out_dims[3] = {&dims.d1, &dims.d2, &dims.d3};
  for (size_t i = 0; i < 3; ++i) {
    if (!jd[i].is_number_integer() || jd[i].get<long long>() < 1) {
      bad_file("\"dims\" entries must be positive integers");
    }
    *out_dims[i] = jd[i].get<Index>();
  }
  const Index n = dims.total();
  const auto& jm = j["matrix"];
  if (!jm.is_array() || static_cast<Index>(jm.size()) != n) {
    std::ostringstream msg;
    msg << "\"matrix\" must have " << n << " rows, got " << jm.size();
    bad_file(msg.str());
  }
  Matrix mat(n, n);
  for (Index r = 0; r < n; ++r) {
    const auto& row = jm[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      std::ostringstream msg;
      msg << "matrix row " << r << " must have " << n << " entries";
      bad_file(msg.str());
    }
    for (Index c = 0; c < n; ++c) {
      const auto& entry = row[static_cast<size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        std::ostringstream msg;
        msg << "matrix entry (" << r << ", " << c << ") must be a [re, im] pair";
        bad_file(msg.str());
      }
      mat(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  TripartiteState rho{dims, std::move(mat)};
  validate_state(rho);
  return rho;
}

void write_state_file(const std::string& path, const TripartiteState& rho) {
  const std::string text = state_to_text(rho);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

TripartiteState read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return state_from_text(buf.str());
}

std::string render_report_text(const DetectionReport& rep) {
  std::ostringstream out;
  out.precision(12);
  out << "||rho^T1||  = " << rep.ppt_norms[0] << "\n"
      << "||rho^T2||  = " << rep.ppt_norms[1] << "\n"
      << "||rho^T3||  = " << rep.ppt_norms[2] << "\n"
      << "||R_1|23||  = " << rep.ccnr_norms[0] << "\n"
      << "||R_2|13||  = " << rep.ccnr_norms[1] << "\n"
      << "||R_3|12||  = " << rep.ccnr_norms[2] << "\n"
      << "M           = " << rep.M << "\n"
      << "N           = " << rep.N << "\n"
      << "score       = " << rep.score << "  (max{M, N})\n"
      << "threshold   = " << rep.threshold << "  ((1 + 2d)/3)\n"
      << "verdict     : " << (rep.is_gme ? "GME detected" : "not detected (inconclusive)") << "\n"
      << "concurrence lower bound (raw)     = " << rep.concurrence_lower_bound << "\n"
      << "concurrence lower bound (clamped) = " << rep.concurrence_lower_bound_clamped << "\n";
  return out.str();
}

std::string render_report_json(const DetectionReport& rep) {
  nlohmann::json j;
  j["ppt_norms"] = rep.ppt_norms;
  j["ccnr_norms"] = rep.ccnr_norms;
  j["M"] = rep.M;
  j["N"] = rep.N;
  j["score"] = rep.score;
  j["threshold"] = rep.threshold;
  j["is_gme"] = rep.is_gme;
  j["concurrence_lower_bound"] = rep.concurrence_lower_bound;
  j["concurrence_lower_bound_clamped"] = rep.concurrence_lower_bound_clamped;
  j["verdict"] = rep.is_gme ? "GME detected" : "not detected (inconclusive)";
  return j.dump(2) + "\n";
}

}  // namespace gme
