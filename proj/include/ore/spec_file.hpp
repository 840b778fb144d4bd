#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ore/ore_poly.hpp"

namespace ore {

enum class TaskKind {
  mul,
  divide,
  right_coeffs,
  axioms,
  associativity,
  center,
  ideal,
  delta_simple,
  simplicity,
  dynamics_report,
};

/// Spelling used in spec files: "mul", "right-coeffs", "delta-simple", ...
std::string to_string(TaskKind k);

/// One [task] section. Inputs are kept parsed; render_spec prints them in
/// canonical polynomial text.
struct TaskSpec {
  TaskKind kind = TaskKind::mul;
  std::vector<std::pair<std::string, std::vector<OrePoly>>> inputs;  // key order fixed per kind

  const std::vector<OrePoly>& input(const std::string& key) const;
};

/// A validated spec file. `handle` is built from the field, ring and map sections.
struct RingSpecFile {
  unsigned version = 1;
  RingDescriptor ring;
  std::string sigma;  // canonical map expressions
  std::string delta;
  CapProfile caps;
  std::vector<TaskSpec> tasks;
  OreHandle handle;
};

/// Structural equality: ring, maps, caps and tasks (inputs compared as polynomials).
bool operator==(const RingSpecFile& a, const RingSpecFile& b);

/// Parses and validates a spec file. Throws ParseError with the 1-based line and
/// column of the offending token for syntax and semantic errors alike.
RingSpecFile parse_spec(std::string_view text);

/// Canonical rendering; parse_spec(render_spec(s)) == s.
std::string render_spec(const RingSpecFile& s);

/// Parses a map expression over r (see AdditiveMap::to_string for the forms).
AdditiveMap parse_map(const RingDescriptor& r, std::string_view text, std::size_t line = 1, std::size_t column = 1);

/// Parses "X=<n>,Y=<m>,rounds=<k>"; throws ParseError (line 1) on bad input.
CapProfile parse_caps(std::string_view text);

}  // namespace ore
