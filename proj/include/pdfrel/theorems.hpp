#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pdfrel/distribution.hpp"
#include "pdfrel/orders.hpp"

namespace pdfrel {

nlohmann::json to_json(const OrderVerdict& v);
nlohmann::json to_json(const GridConfig& g);

/// Names accepted by verify_theorem, in a stable order.
const std::vector<std::string>& theorem_names();

struct TheoremInputs {
  std::vector<Distribution> dists;
  std::optional<double> t;
  // Affine map for affine_star_equality.
  double a = 1.0;
  double b = 0.0;
  // Ages for the residual theorems; a default grid is chosen when empty.
  std::vector<double> ages;

  static TheoremInputs of(std::vector<Distribution> dists) {
    TheoremInputs in;
    in.dists = std::move(dists);
    return in;
  }
};

struct TheoremReport {
  std::string theorem;
  bool equivalence = false;
  bool premise = false;
  bool conclusion = false;
  // For an implication: !premise || conclusion; for an equivalence:
  // premise == conclusion.
  bool implication_respected = false;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Evaluates premise and conclusion of one theorem instance independently.
/// UnknownTheorem for an unknown name, PreconditionViolated when the inputs
/// do not meet the theorem's standing hypotheses.
TheoremReport verify_theorem(std::string_view name, const TheoremInputs& in,
                             const GridConfig& grid = {});

/// Twelve ages t >= t0 where the residual density is strictly decreasing
/// (t0 the mode, or the lower endpoint for a decreasing density).
std::vector<double> decreasing_residual_ages(const Distribution& d, int n = 12);
/// Twelve ages spread over the quantiles 0.05..0.8.
std::vector<double> quantile_ages(const Distribution& d, int n = 12);

enum class HazardTrend { kIncreasing, kDecreasing, kConstant, kNeither };
const char* hazard_trend_name(HazardTrend t) noexcept;
/// Monotonicity of the hazard rate on a 512-point quantile grid of ages
/// beyond `from` (the whole support when absent).
HazardTrend hazard_trend(const Distribution& d, std::optional<double> from,
                         double tol_mono = 1e-9);

}  // namespace pdfrel
