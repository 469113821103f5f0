#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdfrel/distribution.hpp"

namespace pdfrel {

/// Draws from a fixed-seed stream.
///
/// Uniforms come in blocks of 65536; block b is generated by std::mt19937_64
/// seeded with splitmix64(seed + b * 0x9E3779B97F4A7C15), and each 64-bit
/// output x becomes ((x >> 11) + 0.5) * 2^-53. Results do not depend on the
/// number of workers.
struct SampleBatch {
  std::vector<double> values;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string source;
};

inline constexpr std::size_t kOracleBlock = 65536;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::vector<double> uniform_stream(std::size_t n, std::uint64_t seed, unsigned workers = 1);

/// Inverse-transform draws of X.
SampleBatch sample(const Distribution& d, std::size_t n, std::uint64_t seed,
                   unsigned workers = 1);
/// Inverse-transform draws of the residual lifetime X_t.
SampleBatch sample_residual(const Distribution& d, double t, std::size_t n,
                            std::uint64_t seed, unsigned workers = 1);

/// sup |F_n - F|. Tied values are handled as a jump of the empirical cdf,
/// with `cdf` evaluated a relative 1e-9 below the tie for the left limit.
double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf);

/// 1.63 / sqrt(n), the 1% band of the Kolmogorov distribution.
double ks_band(std::size_t n);

enum class OracleLaw { kX, kK, kKt, kGt, kL };
const char* oracle_law_name(OracleLaw law) noexcept;
/// InvalidArgument for an unknown name.
OracleLaw parse_oracle_law(std::string_view name);

struct OracleResult {
  double ks = 0.0;
  double band = 0.0;
  bool pass = false;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// Compares the analytic cdf of the law against transformed draws:
///   X:  X;  K: f(X);  Kt: f_t(X_t);  Gt: f(t + X_t);  L: -log f(X).
OracleResult run_oracle(const Distribution& d, OracleLaw law, std::optional<double> t,
                        std::size_t n = 1000000, std::uint64_t seed = 42,
                        unsigned workers = 1);

struct IcMoments {
  double mean = 0.0;
  double variance = 0.0;
  double se_mean = 0.0;
  double se_variance = 0.0;
};

/// Sample mean and variance of -log f(X) with their standard errors.
IcMoments ic_moments(const Distribution& d, std::size_t n, std::uint64_t seed,
                     unsigned workers = 1);

}  // namespace pdfrel
