#pragma once

#include "fixedloci/grassmann.hpp"
#include "fixedloci/matrix.hpp"
#include "fixedloci/quiver_fixed.hpp"
#include "fixedloci/weighted_action.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace fixedloci {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Command-line overrides; unset fields fall back to the problem file's
/// "options" object, then to the defaults.
struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<long> prime;
  std::optional<int> trials;
  std::optional<long> window;  // radius of the centered grade box
  std::optional<IntMatrix> inner_product;
  std::optional<SupportSet> support;
  bool timing = false;
};

/// Parses JSON text; syntax errors become ValidationError "<source>:line:col: ...".
json parse_problem_text(const std::string& text, const std::string& source);

/// Typed views of problem files. Field errors name the JSON path.
struct ToricInput {
  WeightedAction action;
  std::optional<IntMatrix> section;
};
ToricInput read_weighted_problem(const json& j);
QuiverProblem read_quiver_problem(const json& j, const RunOptions& opts);
GrassmannProblem read_grassmann_problem(const json& j);
IntMatrix parse_matrix(const json& j, const std::string& path);

json cmd_toric(const json& problem, const RunOptions& opts);
json cmd_quiver(const json& problem, const RunOptions& opts);
json cmd_grassmann(const json& problem, const RunOptions& opts);
json cmd_kempf(const json& problem, const RunOptions& opts);

/// Dispatches on the subcommand name ("toric", "quiver", "grassmann", "kempf").
json run_command(const std::string& command, const json& problem, const RunOptions& opts);

enum class OutputFormat { Json, Table, Dot };

/// Throws ValidationError when the format does not apply to the report.
std::string render(const json& report, OutputFormat format);

}  // namespace fixedloci
