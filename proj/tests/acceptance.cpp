#include <cstdio>
#include <cstring>
#include <string>

#include "hoffgraph/verify.hpp"

int main(int argc, char** argv) {
  hoffgraph::VerifyOptions opts;
  bool verbose = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;

  int failed = 0;
  for (const auto& c : hoffgraph::criteria()) {
    const auto r = hoffgraph::run_criterion(c, opts);
    std::printf("[%s] criterion %2d: %-48s %8.3fs (budget %gs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.budget_seconds);
    if (!r.passed || verbose) std::printf("%s\n", hoffgraph::to_json(r).dump(2).c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(hoffgraph::criteria().size()) - failed, hoffgraph::criteria().size());
  return failed == 0 ? 0 : 1;
}
