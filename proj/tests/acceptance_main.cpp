// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// With --mutation the catalog is corrupted first and the run succeeds only if
// criterion 3 notices while the others stay green.

#include "liereps/acceptance.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
  bool mutation = argc > 1 && std::strcmp(argv[1], "--mutation") == 0;
  liereps::AcceptanceOptions opts;
  opts.corrupt_catalog = mutation;
  bool all = true, caught = false, others = true;
  for (const auto& r : liereps::run_acceptance(opts)) {
    std::printf("%s criterion %d %s (%.3f s, budget %.0f s): %s\n", r.passed ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.seconds, r.budget, r.detail.c_str());
    all = all && r.passed;
    if (r.id == 3) caught = !r.passed;
    else others = others && r.passed;
  }
  if (mutation) {
    std::printf("%s corrupted catalog %s\n", caught && others ? "PASS" : "FAIL",
                caught ? "detected" : "not detected");
    return caught && others ? 0 : 1;
  }
  return all ? 0 : 1;
}
