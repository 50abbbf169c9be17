// Acceptance criteria: one PASS/FAIL line each. Optional argument: a zero
// store path (missing coverage is scanned and written back).
#include <cstdio>
#include <exception>

#include "rzlab/verify.hpp"

int main(int argc, char** argv) {
  using namespace rzlab;
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  try {
    const auto store = verify::prepare_store(argc > 1 ? argv[1] : "");
    int failed = 0;
    for (const auto& c : verify::acceptance(store)) {
      std::printf("criterion %2s %s %s: %s (%.2f s)\n", c.id.c_str(), c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.detail.c_str(), c.seconds);
      failed += c.pass ? 0 : 1;
    }
    std::printf("\nscenario ratios (diagnostic, not asserted)\n%s",
                verify::scenario_table(store).c_str());
    std::printf("\n%d of 15 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::printf("error: %s\n", e.what());
    return 1;
  }
}
