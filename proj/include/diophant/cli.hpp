#pragma once

// Equation parsing, report serialization and the command-line driver.
//
// Accepted equation text:
//   list form      "2, 3, 5 = 1"          coefficients in variable order
//   symbolic form  "2x1 - 3*x2 + x4 = 7"  missing variables get coefficient 0
// Whitespace is ignored everywhere.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "diophant/solution.hpp"

namespace diophant {

Equation parse_equation(std::string_view text);

/// Parses "1, -2, 3" into integers; the empty string is the empty vector.
IntVector parse_integer_list(std::string_view text);

std::string format_equation(const Equation& eq);

struct SolveReport {
  Equation equation;
  SolveMode mode = SolveMode::kCanonical;
  IntVector particular;
  std::vector<IntVector> basis;
  bool verified = false;
  std::optional<bool> oracle_checked;
  std::size_t max_bits = 0;
  std::optional<IntVector> params;
  std::optional<IntVector> point;  // evaluate(solution, params)
  std::optional<std::string> error;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

/// Fills equation, mode, particular, basis, verified and max_bits.
SolveReport make_report(const Equation& eq, const GeneralSolution& sol);

nlohmann::json to_json(const SolveReport& report);
SolveReport report_from_json(const nlohmann::json& j);

std::string to_text(const SolveReport& report);

/// Parametric family laid out as one aligned row per variable.
std::string to_latex(const SolveReport& report);

/// Exit codes: 0 success, 1 not solvable (or verify says no), 2 parse or
/// usage error, 3 resource guard exceeded, 4 oracle cross-check failed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diophant
