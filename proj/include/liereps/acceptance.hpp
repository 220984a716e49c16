#pragma once

#include "liereps/exactmat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace liereps {

struct AcceptanceOptions {
  bool corrupt_catalog = false;
  std::uint64_t seed = 0x5eed1e5;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double budget = 0;
  std::string detail;  // first failure, or a short summary
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// The reductive group of semisimple rank 7 inside E8 used as the golden example.
struct WorkedExample {
  IntMatrix A;
  IntMatrix Acheck;
  IntMatrix F0;
};
WorkedExample worked_example();

/// Coefficients c_0..c_n of det(x I - m) by the Faddeev-LeVerrier recursion.
IntVector characteristic_polynomial(const IntMatrix& m);

}  // namespace liereps
