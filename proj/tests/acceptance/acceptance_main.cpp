#include <cstdio>

#include "pdfrel/selftest.hpp"

int main() {
  int failures = 0;
  double total = 0.0;
  pdfrel::run_selftest({}, [&](const pdfrel::CriterionResult& r) {
    std::printf("%s %2d %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
    total += r.seconds;
  });
  std::printf("%d/%d criteria passed in %.1f s\n", pdfrel::kCriterionCount - failures,
              pdfrel::kCriterionCount, total);
  return failures == 0 ? 0 : 1;
}
