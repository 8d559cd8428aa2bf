#ifndef GME_IO_HPP
#define GME_IO_HPP

#include <string>

#include "gme/criteria.hpp"
#include "gme/tensor.hpp"

namespace gme {

// State files are JSON: {"dims": [d1, d2, d3], "matrix": [[[re, im], ...], ...]}
// with row-major entries. Values are written with 17 significant digits, so a
// write/read round trip reproduces every entry bit-exactly.
std::string state_to_text(const TripartiteState& rho);
TripartiteState state_from_text(const std::string& text);

void write_state_file(const std::string& path, const TripartiteState& rho);
TripartiteState read_state_file(const std::string& path);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

std::string render_report_text(const DetectionReport& rep);
std::string render_report_json(const DetectionReport& rep);

}  // namespace gme

#endif  // GME_IO_HPP
