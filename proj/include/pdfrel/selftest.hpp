#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pdfrel {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SelftestOptions {
  // Criterion ids to run; all when empty.
  std::vector<int> only;
  std::size_t mc_n = 1000000;
  std::uint64_t seed = 42;
};

inline constexpr int kCriterionCount = 11;

const char* criterion_title(int id) noexcept;

/// Runs the acceptance criteria in order, reporting each through `on_result`
/// as soon as it finishes.
std::vector<CriterionResult> run_selftest(
    const SelftestOptions& options = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace pdfrel
