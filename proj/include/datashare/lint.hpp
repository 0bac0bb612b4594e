#pragma once

// Rule-based review of a scanned data package.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datashare/package.hpp"

namespace datashare {

// Ordered so that a larger value is more severe.
enum class Severity { info, warning, error };

std::string_view to_string(Severity severity) noexcept;
std::optional<Severity> parse_severity(std::string_view name) noexcept;

struct LintRule {
  std::string id;
  std::string title;
  Severity severity;  // ceiling; individual findings may be milder
  std::string anchor;  // guideline the rule checks, printed in text reports
};

// R00 (internal failures) followed by R01..R18. Ids are never reused.
const std::vector<LintRule>& lint_rules();
const LintRule* find_rule(std::string_view id);

struct Finding {
  std::string rule_id;
  Severity severity = Severity::error;
  std::optional<std::string> path;
  std::string detail;
  std::map<std::string, std::string> machine_data;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct LintReport {
  std::vector<Finding> findings;
  std::array<std::size_t, 3> counts{};  // indexed by Severity

  std::size_t count(Severity s) const noexcept {
    return counts[static_cast<std::size_t>(s)];
  }
  bool pass() const noexcept { return count(Severity::error) == 0; }
};

// Sorts findings (severity descending, then rule id, then path with
// pathless findings first, then detail) and tallies them.
LintReport make_report(std::vector<Finding> findings);

// Per-rule overrides. A disengaged optional disables the rule.
struct LintConfig {
  std::map<std::string, std::optional<Severity>> overrides;
};

// Lines of the form `R02 = off|error|warning|info`; '#' starts a comment.
// Throws UsageError for unknown rule ids, unknown values, and attempts to
// raise a rule above its registry severity.
LintConfig parse_lint_config(std::string_view text);

// Runs every enabled rule. A rule that throws is reported as an R00 error
// and the remaining rules still run.
LintReport lint_package(const DataPackage& pkg, const LintConfig& config = {});

// {"pass":..,"counts":{"error":..,"warning":..,"info":..},"findings":[..]}
// with findings in report order; two-space indentation and a final newline.
std::string report_to_json(const LintReport& report);

// Findings grouped by severity, each followed by its rule's anchor, then a
// one-line summary. `color` adds ANSI colour to the group headings.
std::string report_to_text(const LintReport& report, bool color = false);

}  // namespace datashare
