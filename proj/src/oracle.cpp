#include "pdfrel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "pdfrel/error.hpp"
#include "pdfrel/info.hpp"
#include "pdfrel/pdf_related.hpp"
#include "pdfrel/residual.hpp"

namespace pdfrel {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

void fill_block(std::vector<double>& out, std::size_t block, std::uint64_t seed) {
  std::mt19937_64 eng(splitmix64(seed + block * 0x9E3779B97F4A7C15ULL));
  const std::size_t begin = block * kOracleBlock;
  const std::size_t end = std::min(out.size(), begin + kOracleBlock);
  for (std::size_t i = begin; i < end; ++i) {
    out[i] = (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
  }
}

// Applies fn to every index, sharding blocks across workers.
template <typename Fn>
void for_blocks(std::size_t n, unsigned workers, Fn fn) {
  const std::size_t blocks = (n + kOracleBlock - 1) / kOracleBlock;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(blocks)));
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < blocks; b += workers) fn(b);
    });
  }
  for (auto& th : pool) th.join();
}

template <typename Map>
std::vector<double> transform(std::vector<double> u, unsigned workers, Map map) {
  for_blocks(u.size(), workers, [&](std::size_t b) {
    const std::size_t end = std::min(u.size(), (b + 1) * kOracleBlock);
    for (std::size_t i = b * kOracleBlock; i < end; ++i) u[i] = map(u[i]);
  });
  return u;
}

double draw(const Distribution& d, double u) {
  return u <= 0.5 ? d.quantile(u) : d.isf(1.0 - u);
}

}  // namespace

std::vector<double> uniform_stream(std::size_t n, std::uint64_t seed, unsigned workers) {
  std::vector<double> out(n);
  for_blocks(n, workers, [&](std::size_t b) { fill_block(out, b, seed); });
  return out;
}

SampleBatch sample(const Distribution& d, std::size_t n, std::uint64_t seed,
                   unsigned workers) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "sample size must be positive");
  SampleBatch batch{{}, n, seed, d.spec_string()};
  batch.values = transform(uniform_stream(n, seed, workers), workers,
                           [&](double u) { return draw(d, u); });
  return batch;
}

SampleBatch sample_residual(const Distribution& d, double t, std::size_t n,
                            std::uint64_t seed, unsigned workers) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "sample size must be positive");
  const ResidualSpec spec(d, t);
  SampleBatch batch{{}, n, seed, d.spec_string() + " residual"};
  batch.values = transform(uniform_stream(n, seed, workers), workers,
                           [&](double u) { return spec.quantile(u); });
  return batch;
}

double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    while (j < values.size() && values[j] == values[i]) ++j;
    const double x = values[i];
    const double f = cdf(x);
    const double f_left =
        j - i > 1 ? cdf(x - 1e-9 * std::max(1.0, std::abs(x))) : f;
    d = std::max({d, std::abs(static_cast<double>(j) / n - f),
                  std::abs(static_cast<double>(i) / n - f_left)});
    i = j;
  }
  return d;
}

double ks_band(std::size_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

const char* oracle_law_name(OracleLaw law) noexcept {
  switch (law) {
    case OracleLaw::kX: return "X";
    case OracleLaw::kK: return "K";
    case OracleLaw::kKt: return "Kt";
    case OracleLaw::kGt: return "Gt";
    case OracleLaw::kL: return "L";
  }
  return "?";
}

OracleLaw parse_oracle_law(std::string_view name) {
  for (OracleLaw l : {OracleLaw::kX, OracleLaw::kK, OracleLaw::kKt, OracleLaw::kGt,
                      OracleLaw::kL}) {
    if (name == oracle_law_name(l)) return l;
  }
  fail(ErrorCode::kInvalidArgument, "unknown oracle law: " + std::string(name));
}

OracleResult run_oracle(const Distribution& d, OracleLaw law, std::optional<double> t,
                        std::size_t n, std::uint64_t seed, unsigned workers) {
  const bool residual = law == OracleLaw::kKt || law == OracleLaw::kGt;
  if (residual && !t) fail(ErrorCode::kInvalidArgument, "this law needs an age t");
  std::vector<double> values;
  std::function<double(double)> cdf;
  switch (law) {
    case OracleLaw::kX:
      values = sample(d, n, seed, workers).values;
      cdf = [&d](double x) { return d.cdf(x); };
      break;
    case OracleLaw::kK:
      values = transform(sample(d, n, seed, workers).values, workers,
                         [&d](double x) { return d.pdf(x); });
      cdf = [&d](double y) { return pdf_related_cdf_total(d, y); };
      break;
    case OracleLaw::kL:
      values = transform(sample(d, n, seed, workers).values, workers,
                         [&d](double x) { return -d.log_pdf(x); });
      cdf = [&d](double x) { return ic_cdf(d, x); };
      break;
    case OracleLaw::kKt: {
      const double tt = *t;
      const double s = d.sf(tt);
      const ImPlusRange range = residual_im_plus(d, tt);
      values = transform(sample_residual(d, tt, n, seed, workers).values, workers,
                         [&d, tt, s](double x) { return d.pdf(x + tt) / s; });
      cdf = [&d, tt, range](double y) {
        if (y <= range.lo) return 0.0;
        if (y >= range.hi) return 1.0;
        return residual_pdf_related_cdf(d, tt, y).value;
      };
      break;
    }
    case OracleLaw::kGt: {
      const double tt = *t;
      values = transform(sample_residual(d, tt, n, seed, workers).values, workers,
                         [&d, tt](double x) { return d.pdf(x + tt); });
      cdf = [&d, tt](double y) {
        if (y <= 0.0) return 0.0;
        return 1.0 - shifted_pdf_related_survival(d, tt, y).survival;
      };
      break;
    }
  }
  OracleResult r;
  r.n = n;
  r.seed = seed;
  r.ks = ks_distance(std::move(values), cdf);
  r.band = ks_band(n);
  r.pass = r.ks <= r.band;
  return r;
}

IcMoments ic_moments(const Distribution& d, std::size_t n, std::uint64_t seed,
                     unsigned workers) {
  const auto ic = transform(sample(d, n, seed, workers).values, workers,
                            [&d](double x) { return -d.log_pdf(x); });
  double mean = 0.0;
  for (double v : ic) mean += v;
  mean /= static_cast<double>(n);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : ic) {
    const double c = (v - mean) * (v - mean);
    m2 += c;
    m4 += c * c;
  }
  const double nn = static_cast<double>(n);
  m2 /= nn;
  m4 /= nn;
  IcMoments out;
  out.mean = mean;
  out.variance = m2 * nn / (nn - 1.0);
  out.se_mean = std::sqrt(m2 / nn);
  out.se_variance = std::sqrt(std::max(0.0, m4 - m2 * m2) / nn);
  return out;
}

}  // namespace pdfrel
