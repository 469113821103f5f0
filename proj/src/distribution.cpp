#include "pdfrel/distribution.hpp"

#include <array>
#include <boost/math/special_functions/erf.hpp>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "pdfrel/error.hpp"
#include "pdfrel/numerics.hpp"

namespace pdfrel {

namespace family {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }
double normal_sf(double z) { return 0.5 * std::erfc(z / kSqrt2); }

double normal_quantile(double p) {
  if (p <= 0.0) return -kInf;
  if (p >= 1.0) return kInf;
  return -kSqrt2 * boost::math::erfc_inv(2.0 * p);
}

double normal_isf(double q) { return -normal_quantile(q); }

double Parabolic::lower_quantile(double p) const {
  if (p <= 0.0) return 0.0;
  if (p >= 0.5) return 1.0;
  // Start from the quadratic approximation of F near 0.
  const double c1 = density_at_lower();
  const double x0 = 2.0 * p / (c1 + std::sqrt(c1 * c1 + 4.0 * b * p));
  auto g = [this](double x) { return std::make_pair(lower_cdf(x), pdf(x)); };
  return numerics::newton_bracketed(g, 0.0, 1.0, p, std::min(x0, 1.0));
}

}  // namespace family

const char* shape_name(Shape shape) noexcept {
  switch (shape) {
    case Shape::kStrictlyDecreasing:
      return "StrictlyDecreasing";
    case Shape::kStrictlyIncreasing:
      return "StrictlyIncreasing";
    case Shape::kUnimodal:
      return "Unimodal";
    case Shape::kValley:
      return "Valley";
    case Shape::kConstant:
      return "Constant";
  }
  return "?";
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kMalformedSpec: return "MalformedSpec";
    case ErrorCode::kPOutOfRange: return "POutOfRange";
    case ErrorCode::kYNotAttained: return "YNotAttained";
    case ErrorCode::kNotUnimodal: return "NotUnimodal";
    case ErrorCode::kDegenerateLaw: return "DegenerateLaw";
    case ErrorCode::kYOutOfRange: return "YOutOfRange";
    case ErrorCode::kNotSymmetricUnimodal: return "NotSymmetricUnimodal";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kTOutOfSupport: return "TOutOfSupport";
    case ErrorCode::kCaseUnsupported: return "CaseUnsupported";
    case ErrorCode::kAtBranchBoundary: return "AtBranchBoundary";
    case ErrorCode::kFlatZone: return "FlatZone";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kUnknownTheorem: return "UnknownTheorem";
    case ErrorCode::kIntegralDiverged: return "IntegralDiverged";
    case ErrorCode::kXOutOfSupport: return "XOutOfSupport";
    case ErrorCode::kBadUVOrder: return "BadUVOrder";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

using ParamMap = std::map<std::string, double, std::less<>>;

struct FamilyEntry {
  std::string_view name;
  std::vector<std::string_view> aliases;
  std::vector<std::pair<std::string_view, double>> params;  // key, default
  std::function<FamilyModel(const ParamMap&)> make;
};

const std::vector<FamilyEntry>& family_table() {
  using namespace family;
  static const std::vector<FamilyEntry> table = {
      {Exponential::kName, {"exp"}, {{"rate", 1.0}},
       [](const ParamMap& p) { return Exponential{p.at("rate")}; }},
      {ShiftedExponential::kName, {"shiftedexp", "shifted_exp"}, {{"a", 0.0}},
       [](const ParamMap& p) { return ShiftedExponential{p.at("a")}; }},
      {ReflectedExponential::kName, {"reflectedexp", "reflected_exp"}, {{"b", 0.0}},
       [](const ParamMap& p) { return ReflectedExponential{p.at("b")}; }},
      {LaplaceRate2::kName, {"laplace", "laplacerate2"}, {{"m", 0.0}},
       [](const ParamMap& p) { return LaplaceRate2{p.at("m")}; }},
      {Uniform::kName, {}, {{"a", 0.0}, {"b", 1.0}},
       [](const ParamMap& p) { return Uniform{p.at("a"), p.at("b")}; }},
      {ParetoType::kName, {"pareto_type", "pareto"}, {},
       [](const ParamMap&) { return ParetoType{}; }},
      {Parabolic::kName, {}, {{"b", 0.5}},
       [](const ParamMap& p) { return Parabolic{p.at("b")}; }},
      {Weibull::kName, {}, {{"k", 1.0}, {"lambda", 1.0}},
       [](const ParamMap& p) { return Weibull{p.at("k"), p.at("lambda")}; }},
      {Normal::kName, {"gaussian"}, {{"mu", 0.0}, {"sigma", 1.0}},
       [](const ParamMap& p) { return Normal{p.at("mu"), p.at("sigma")}; }},
      {Logistic::kName, {}, {{"mu", 0.0}, {"s", 1.0}},
       [](const ParamMap& p) { return Logistic{p.at("mu"), p.at("s")}; }},
      {Cauchy::kName, {}, {{"x0", 0.0}, {"gamma", 1.0}},
       [](const ParamMap& p) { return Cauchy{p.at("x0"), p.at("gamma")}; }},
      {TriangularAbs::kName, {"triangularabs"}, {{"sign", 1.0}},
       [](const ParamMap& p) { return TriangularAbs{p.at("sign")}; }},
      {SymmetricTriangular::kName, {"symmetrictriangular", "triangular"},
       {{"a", 0.0}, {"b", 2.0}},
       [](const ParamMap& p) { return SymmetricTriangular{p.at("a"), p.at("b")}; }},
      {TruncatedNormal::kName, {"truncnormal", "truncated_gaussian"},
       {{"mu", 0.0}, {"sigma", 1.0}, {"lo", -1.0}, {"hi", 1.0}},
       [](const ParamMap& p) {
         return TruncatedNormal{p.at("mu"), p.at("sigma"), p.at("lo"), p.at("hi")};
       }},
  };
  return table;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

double parse_number(const std::string& text, std::string_view spec) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(ErrorCode::kMalformedSpec,
         "bad number '" + text + "' in spec '" + std::string(spec) + "'");
  }
  return v;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

template <class F>
auto visit_model(const FamilyModel& m, F&& f) {
  return std::visit(std::forward<F>(f), m);
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::kParamOutOfRange, what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

Distribution::Distribution(FamilyModel model, double scale, double shift)
    : model_(std::move(model)), scale_(scale), shift_(shift) {
  validate_parameters();
  const Support base = visit_model(model_, [](const auto& m) { return m.support(); });
  support_ = {from_base(base.lower), from_base(base.upper), base.lower_open,
              base.upper_open};
  mono_.kind = visit_model(model_, [](const auto& m) { return m.shape(); });
  mono_.symmetric = visit_model(model_, [](const auto& m) { return m.symmetric(); });
  if (mono_.kind == Shape::kUnimodal || mono_.kind == Shape::kValley) {
    mono_.mode = from_base(visit_model(model_, [](const auto& m) { return m.mode(); }));
  }
  validate_invariants();
}

void Distribution::validate_parameters() const {
  using namespace family;
  require(finite(scale_) && scale_ > 0.0, "scale must be a positive finite number");
  require(finite(shift_), "shift must be finite");
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          require(finite(m.rate) && m.rate > 0, "exponential: rate must be > 0");
        } else if constexpr (std::is_same_v<T, ShiftedExponential>) {
          require(finite(m.a), "shifted_exponential: a must be finite");
        } else if constexpr (std::is_same_v<T, ReflectedExponential>) {
          require(finite(m.b), "reflected_exponential: b must be finite");
        } else if constexpr (std::is_same_v<T, LaplaceRate2>) {
          require(finite(m.m), "laplace2: m must be finite");
        } else if constexpr (std::is_same_v<T, Uniform>) {
          require(finite(m.a) && finite(m.b) && m.a < m.b, "uniform: need a < b");
        } else if constexpr (std::is_same_v<T, Parabolic>) {
          require(m.b > 0.0 && m.b <= 0.75, "parabolic: b must lie in (0, 3/4]");
        } else if constexpr (std::is_same_v<T, Weibull>) {
          require(finite(m.k) && m.k > 0 && finite(m.lambda) && m.lambda > 0,
                  "weibull: k and lambda must be > 0");
        } else if constexpr (std::is_same_v<T, Normal>) {
          require(finite(m.mu) && finite(m.sigma) && m.sigma > 0,
                  "normal: sigma must be > 0");
        } else if constexpr (std::is_same_v<T, Logistic>) {
          require(finite(m.mu) && finite(m.s) && m.s > 0, "logistic: s must be > 0");
        } else if constexpr (std::is_same_v<T, Cauchy>) {
          require(finite(m.x0) && finite(m.gamma) && m.gamma > 0,
                  "cauchy: gamma must be > 0");
        } else if constexpr (std::is_same_v<T, TriangularAbs>) {
          require(m.sign == 1.0 || m.sign == -1.0, "triangular_abs: sign must be +1 or -1");
        } else if constexpr (std::is_same_v<T, SymmetricTriangular>) {
          require(finite(m.a) && finite(m.b) && m.a < m.b,
                  "symmetric_triangular: need a < b");
        } else if constexpr (std::is_same_v<T, TruncatedNormal>) {
          require(finite(m.mu) && finite(m.sigma) && m.sigma > 0 && m.lo < m.hi &&
                      !std::isnan(m.lo) && !std::isnan(m.hi),
                  "truncated_normal: need sigma > 0 and lo < hi");
          require(m.mass() > 1e-300, "truncated_normal: window carries no mass");
        }
      },
      model_);
}

void Distribution::validate_invariants() const {
  // Unit mass, split at the mode so kinks sit on panel boundaries.
  std::vector<std::pair<double, double>> pieces;
  if (mono_.mode && support_.interior(*mono_.mode)) {
    pieces = {{support_.lower, *mono_.mode}, {*mono_.mode, support_.upper}};
  } else {
    pieces = {{support_.lower, support_.upper}};
  }
  double mass = 0.0;
  for (auto [a, b] : pieces) {
    mass += numerics::integrate([this](double x) { return pdf(x); }, a, b, 1e-13, 1e-8).value;
  }
  if (std::abs(mass - 1.0) > 1e-9) {
    std::ostringstream os;
    os << spec_string() << ": density integrates to " << mass;
    fail(ErrorCode::kParamOutOfRange, os.str());
  }

  // Declared monotone class against the sampled finite-difference slope.
  if (mono_.kind != Shape::kConstant) {
    for (int i = 0; i < 64; ++i) {
      const double x = quantile((i + 0.5) / 64.0);
      const double h = 1e-6 * std::max(1.0, std::abs(x)) * scale_;
      if (mono_.mode && std::abs(x - *mono_.mode) < 4 * h) continue;
      if (!support_.interior(x - h) || !support_.interior(x + h)) continue;
      const double slope = (pdf(x + h) - pdf(x - h)) / (2 * h);
      int expected = 0;
      switch (mono_.kind) {
        case Shape::kStrictlyDecreasing: expected = -1; break;
        case Shape::kStrictlyIncreasing: expected = 1; break;
        case Shape::kUnimodal: expected = x < *mono_.mode ? 1 : -1; break;
        case Shape::kValley: expected = x < *mono_.mode ? -1 : 1; break;
        case Shape::kConstant: break;
      }
      if (slope * expected <= 0.0 && std::abs(slope) > 1e-300) {
        std::ostringstream os;
        os << spec_string() << ": sampled slope " << slope << " at x=" << x
           << " contradicts class " << shape_name(mono_.kind);
        fail(ErrorCode::kInvalidArgument, os.str());
      }
    }
  }

  if (has_closed_quantile()) {
    for (int i = 1; i <= 99; ++i) {
      const double p = i / 100.0;
      if (std::abs(cdf(quantile(p)) - p) > 1e-9) {
        std::ostringstream os;
        os << spec_string() << ": cdf(quantile(" << p << ")) round-trip failed";
        fail(ErrorCode::kInvalidArgument, os.str());
      }
    }
  }
}

Distribution Distribution::parse(std::string_view spec) {
  const std::string text = trim(spec);
  if (text.empty()) fail(ErrorCode::kMalformedSpec, "empty distribution spec");
  const auto colon = text.find(':');
  const std::string name = lower(trim(text.substr(0, colon)));
  const FamilyEntry* entry = nullptr;
  for (const auto& e : family_table()) {
    if (e.name == name) entry = &e;
    for (auto alias : e.aliases) {
      if (alias == name) entry = &e;
    }
  }
  if (entry == nullptr) {
    fail(ErrorCode::kUnknownFamily, "unknown family '" + name + "'");
  }

  ParamMap params;
  for (auto [key, def] : entry->params) params.emplace(std::string(key), def);
  double scale = 1.0;
  double shift = 0.0;
  std::map<std::string, bool, std::less<>> seen;

  if (colon != std::string::npos) {
    const std::string rest = text.substr(colon + 1);
    if (trim(rest).empty()) fail(ErrorCode::kMalformedSpec, "empty parameter list in '" + text + "'");
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        fail(ErrorCode::kMalformedSpec, "expected key=value, got '" + item + "'");
      }
      const std::string key = lower(trim(item.substr(0, eq)));
      const double value = parse_number(trim(item.substr(eq + 1)), text);
      if (seen[key]) fail(ErrorCode::kMalformedSpec, "duplicate key '" + key + "'");
      seen[key] = true;
      if (key == "scale") {
        scale = value;
      } else if (key == "shift") {
        shift = value;
      } else if (auto it = params.find(key); it != params.end()) {
        it->second = value;
      } else {
        fail(ErrorCode::kMalformedSpec,
             "family '" + std::string(entry->name) + "' has no parameter '" + key + "'");
      }
    }
    if (!rest.empty() && rest.back() == ',') {
      fail(ErrorCode::kMalformedSpec, "trailing comma in '" + text + "'");
    }
  }
  return Distribution(entry->make(params), scale, shift);
}

std::string_view Distribution::family_name() const {
  return visit_model(model_, [](const auto& m) { return std::decay_t<decltype(m)>::kName; });
}

std::string Distribution::spec_string() const {
  std::string out(family_name());
  std::vector<std::pair<std::string_view, double>> values;
  std::visit(
      [&](const auto& m) {
        using namespace family;
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Exponential>) values = {{"rate", m.rate}};
        else if constexpr (std::is_same_v<T, ShiftedExponential>) values = {{"a", m.a}};
        else if constexpr (std::is_same_v<T, ReflectedExponential>) values = {{"b", m.b}};
        else if constexpr (std::is_same_v<T, LaplaceRate2>) values = {{"m", m.m}};
        else if constexpr (std::is_same_v<T, Uniform>) values = {{"a", m.a}, {"b", m.b}};
        else if constexpr (std::is_same_v<T, Parabolic>) values = {{"b", m.b}};
        else if constexpr (std::is_same_v<T, Weibull>) values = {{"k", m.k}, {"lambda", m.lambda}};
        else if constexpr (std::is_same_v<T, Normal>) values = {{"mu", m.mu}, {"sigma", m.sigma}};
        else if constexpr (std::is_same_v<T, Logistic>) values = {{"mu", m.mu}, {"s", m.s}};
        else if constexpr (std::is_same_v<T, Cauchy>) values = {{"x0", m.x0}, {"gamma", m.gamma}};
        else if constexpr (std::is_same_v<T, TriangularAbs>) values = {{"sign", m.sign}};
        else if constexpr (std::is_same_v<T, SymmetricTriangular>) values = {{"a", m.a}, {"b", m.b}};
        else if constexpr (std::is_same_v<T, TruncatedNormal>)
          values = {{"mu", m.mu}, {"sigma", m.sigma}, {"lo", m.lo}, {"hi", m.hi}};
      },
      model_);
  if (scale_ != 1.0) values.emplace_back("scale", scale_);
  if (shift_ != 0.0) values.emplace_back("shift", shift_);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += values[i].first;
    out += '=';
    out += format_number(values[i].second);
  }
  return out;
}

bool Distribution::has_closed_quantile() const {
  return !std::holds_alternative<family::Parabolic>(model_);
}

bool Distribution::has_finite_mean() const {
  return !std::holds_alternative<family::ParetoType>(model_) &&
         !std::holds_alternative<family::Cauchy>(model_);
}

double Distribution::pdf(double x) const {
  if (!support_.contains(x)) return 0.0;
  const double z = to_base(x);
  return visit_model(model_, [z](const auto& m) { return m.pdf(z); }) / scale_;
}

double Distribution::log_pdf(double x) const {
  if (!support_.contains(x)) return -numerics::kInf;
  const double z = to_base(x);
  return visit_model(model_, [z](const auto& m) { return m.log_pdf(z); }) -
         std::log(scale_);
}

double Distribution::pdf_derivative(double x) const {
  if (!support_.contains(x)) return 0.0;
  const double z = to_base(x);
  return visit_model(model_, [z](const auto& m) { return m.dpdf(z); }) /
         (scale_ * scale_);
}

double Distribution::cdf(double x) const {
  if (x <= support_.lower) return 0.0;
  if (x >= support_.upper) return 1.0;
  const double z = to_base(x);
  return visit_model(model_, [z](const auto& m) { return m.cdf(z); });
}

double Distribution::sf(double x) const {
  if (x <= support_.lower) return 1.0;
  if (x >= support_.upper) return 0.0;
  const double z = to_base(x);
  return visit_model(model_, [z](const auto& m) { return m.sf(z); });
}

double Distribution::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    fail(ErrorCode::kPOutOfRange, "probability must lie in (0, 1)");
  }
  return from_base(visit_model(model_, [p](const auto& m) { return m.quantile(p); }));
}

double Distribution::isf(double q) const {
  if (!(q > 0.0 && q < 1.0)) {
    fail(ErrorCode::kPOutOfRange, "probability must lie in (0, 1)");
  }
  return from_base(visit_model(model_, [q](const auto& m) { return m.isf(q); }));
}

double Distribution::endpoint_density(Endpoint which) const {
  const double v = visit_model(model_, [which](const auto& m) {
    return which == Endpoint::kLower ? m.density_at_lower() : m.density_at_upper();
  });
  return v / scale_;
}

double Distribution::mode() const {
  switch (mono_.kind) {
    case Shape::kStrictlyDecreasing:
      return support_.lower;
    case Shape::kStrictlyIncreasing:
      return support_.upper;
    case Shape::kConstant:
      return 0.5 * (support_.lower + support_.upper);
    default:
      return *mono_.mode;
  }
}

double Distribution::max_density() const {
  switch (mono_.kind) {
    case Shape::kStrictlyDecreasing:
      return endpoint_density(Endpoint::kLower);
    case Shape::kStrictlyIncreasing:
      return endpoint_density(Endpoint::kUpper);
    case Shape::kConstant:
      return 1.0 / support_.length();
    case Shape::kValley:
      return std::max(endpoint_density(Endpoint::kLower),
                      endpoint_density(Endpoint::kUpper));
    case Shape::kUnimodal:
      break;
  }
  return pdf(*mono_.mode);
}

std::optional<double> Distribution::closed_lower_inverse(double y) const {
  const double ys = y * scale_;
  return std::visit(
      [&](const auto& m) -> std::optional<double> {
        if constexpr (requires { m.lower_inverse(ys); }) {
          return from_base(m.lower_inverse(ys));
        } else {
          return std::nullopt;
        }
      },
      model_);
}

std::optional<double> Distribution::closed_upper_inverse(double y) const {
  const double ys = y * scale_;
  return std::visit(
      [&](const auto& m) -> std::optional<double> {
        if constexpr (requires { m.upper_inverse(ys); }) {
          return from_base(m.upper_inverse(ys));
        } else {
          return std::nullopt;
        }
      },
      model_);
}

Distribution Distribution::affine(double scale, double shift) const {
  if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(shift)) {
    fail(ErrorCode::kParamOutOfRange, "affine map needs a positive finite scale");
  }
  return Distribution(model_, scale * scale_, scale * shift_ + shift);
}

}  // namespace pdfrel
