#pragma once

#include "arr/analysis.hpp"
#include "arr/instance.hpp"

#include <stdexcept>
#include <string>

namespace arr {

class InstanceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical JSON text form of an instance. Coordinates are exact rationals
// in lowest terms ("p" or "p/q"). serialize(parse(x)) == serialize(inst(x)).
std::string serialize_instance(const Instance& inst);

// Parses and validates; throws InstanceFormatError with a located message on
// malformed input (bad rational syntax, zero denominators, broken polygons).
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// JSON report of all computed quantities, bound check verdicts, and (when the
// instance carries expected values) expected-vs-actual comparisons.
std::string serialize_report(const AnalysisReport& report, const Instance& inst);

// True iff every check passed and every expected value matched.
bool report_clean(const AnalysisReport& report, const Instance& inst);

struct SvgOptions {
  int width = 800;             // pixel width; height follows the aspect ratio
  bool outline_maximal = true; // stroke maximal faces
  bool dual_overlay = false;   // draw dual-graph nodes and edges
};

// Deterministic SVG with one filled path per face (the unbounded face is the
// full-viewport background path), shaded by ply.
std::string render_svg(const Arrangement& arr, const SvgOptions& opts = {});

}  // namespace arr
