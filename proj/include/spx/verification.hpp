#pragma once

#include <optional>
#include <string>
#include <vector>

// End-to-end checks of the extremal results: bounds, constructions, the
// n = 10 classification, bridge structure and cutvertex elimination, and the
// search cross-checked against brute force. Shared by `verify-paper` and
// the acceptance test binary.
namespace spx {

struct CriterionResult {
  int id = 0;
  std::string group;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerificationOptions {
  // Group name ("even", "girth5", "bridges", "cutvertex", "oracle",
  // "recognition") or a criterion number; empty runs everything.
  std::optional<std::string> only;
  std::string catalog_path = SPX_CATALOG_PATH;
  unsigned long long seed = 20240611;
};

inline constexpr int kCriterionCount = 10;

// Throws std::invalid_argument for an unknown group or number.
std::vector<int> selected_criteria(const std::optional<std::string>& only);
std::string criterion_group(int id);

CriterionResult run_criterion(int id, const VerificationOptions& options);
std::vector<CriterionResult> run_verification(const VerificationOptions& options);

// "PASS [6] girth5: ... (0.41 s) detail"
std::string format_line(const CriterionResult& r);

}  // namespace spx
