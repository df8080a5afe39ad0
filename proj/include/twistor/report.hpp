#pragma once

// Input-file parsing and report serialization for the CLI: a JSON input
// format for (structure constants, J) and a versioned JSON / plain-table
// rendering of a full analysis, optionally with preset expected-value diffs.

#include <string>

#include <json.hpp>

#include "twistor/catalog.hpp"
#include "twistor/classifier.hpp"

namespace twistor {

inline constexpr const char* kReportSchema = "twistor-harmonicity-report/1";

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputSpec {
  std::string name;
  FrameManifold manifold;
  Endo4 J;
  double tol = kDefaultTol;
  double jacobi_tol = kJacobiTol;
};

/// Parses the JSON input document. Throws ParseError with the offending
/// field/entry location in the message.
InputSpec parse_input(const std::string& text);
InputSpec load_input_file(const std::string& path);

/// Inverse of report_json's "input" echo (round-trip support).
nlohmann::json input_json(const InputSpec& in);

/// Machine-readable report. When diffs is non-null the preset expected
/// values and per-entry pass flags are embedded.
nlohmann::json report_json(const Analysis& a,
                           const std::vector<Diff>* diffs = nullptr);

/// Human-readable rendering of the same content.
std::string report_table(const Analysis& a,
                         const std::vector<Diff>* diffs = nullptr);

}  // namespace twistor
