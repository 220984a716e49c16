#pragma once

// Parameter sets of the irreducible representations: q-restricted weights
// subject to congruences (A), the group K^F~ cap G~' (B) and (G/G')^F (C).

#include "liereps/covering.hpp"
#include "liereps/exactmat.hpp"
#include "liereps/rootdata.hpp"
#include "liereps/torus.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace liereps {

/// Weights lambda in [0, q)^l with W * lambda^tr = 0 mod modulus.
struct WeightConstraintSystem {
  IntMatrix W;
  Integer modulus = 1;
  std::size_t l = 0;
  Integer q;
};

WeightConstraintSystem weight_constraints(const FiniteAbelianGroup& kprime, std::size_t l,
                                          const Integer& q);

/// Works for any rows W, reduced or not.
Integer count_weights(const WeightConstraintSystem& sys);

/// Feasible weights in lexicographic order.
class WeightEnumerator {
 public:
  explicit WeightEnumerator(const WeightConstraintSystem& sys);
  std::optional<std::vector<std::int64_t>> next();

 private:
  bool feasible() const;

  std::vector<std::vector<std::int64_t>> rows_;
  std::int64_t modulus_;
  std::int64_t q_;
  std::vector<std::int64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<std::vector<std::int64_t>> enumerate_weights(const WeightConstraintSystem& sys,
                                                         std::size_t limit);

struct ParamSummary {
  CoveringData covering;
  DerivedSplit split;
  WeightConstraintSystem setA;
  Integer countA;
  FiniteAbelianGroup setB;
  FiniteAbelianGroup setC;
  Integer total;
};

/// Requires f.q.
ParamSummary parameterize(const RootDatum& d, const FrobeniusDatum& f);
Integer semisimple_class_count(const RootDatum& d, const FrobeniusDatum& f);

}  // namespace liereps
