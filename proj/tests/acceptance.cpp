// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include "hypack/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  hypack::VerifyOptions opt;
  if (argc > 1) opt.mc_samples = static_cast<std::uint64_t>(std::strtod(argv[1], nullptr));
  int failed = 0;
  hypack::run_checks(opt, [&](const hypack::CheckResult& r) {
    std::printf("%s %2d %-28s %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d/%d criteria passed\n", hypack::kCheckCount - failed, hypack::kCheckCount);
  return failed == 0 ? 0 : 1;
}
