#include <cstdio>

#include "trivisit/acceptance.hpp"

int main() {
  int failed = 0;
  trivisit::acceptance::run_all([&](const trivisit::acceptance::Result& r) {
    if (!r.pass) ++failed;
    std::printf("%s %2d %s (%.1fs): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  });
  std::printf("%d of 13 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
