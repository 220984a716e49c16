#pragma once

// The covering G~ = G~' x Z0 -> G by a product of simply connected groups and
// a torus, its central kernel K, and the split of G into derived subgroup and
// quotient torus.

#include "liereps/exactmat.hpp"
#include "liereps/rootdata.hpp"
#include "liereps/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liereps {

struct CoveringData {
  RootDatum tilde_datum;  // ((C^tr | 0), (Id | 0))
  IntMatrix M;            // M^tr = A^vee stacked on B
  IntMatrix B;            // Hermite basis of R^perp = {y : y * A^tr = 0}
  IntMatrix tilde_F0;     // tilde_F0^tr = M^tr F0^tr M^-tr
  Integer modulus_m = 1;  // largest elementary divisor of M^tr

  IntMatrix Mtr() const { return M.transpose(); }
};

CoveringData build_covering(const RootDatum& d, const FrobeniusDatum& f);

/// Solutions of t * M^tr = 0, restricted to p'-elements when p is given.
FiniteAbelianGroup kernel_of_covering(const CoveringData& cov,
                                      const std::optional<Integer>& p = std::nullopt);

/// K^F~ intersected with the derived factor (last r - l coordinates zero).
FiniteAbelianGroup derived_intersection_fixed(const CoveringData& cov, const QClass& q,
                                              const std::optional<Integer>& p);

struct DerivedSplit {
  IntMatrix D;  // unimodular, A^vee * D vanishes on the last r - l columns
  RootDatum derived_datum;
  IntMatrix derived_F0;   // upper left l x l of D^tr F0 D^-tr
  IntMatrix quotient_F0;  // lower right (r-l) x (r-l)
};

DerivedSplit derived_split(const RootDatum& d, const FrobeniusDatum& f);

struct ResidueClassSummary {
  Integer c;
  bool skipped = false;
  std::string skip_reason;
  std::optional<Integer> p;  // empty: any prime with q = c mod m
  FiniteAbelianGroup kernel;
  FiniteAbelianGroup fixed;
  FiniteAbelianGroup derived_fixed;
};

/// One entry per residue c in [0, m), with q = c mod m standing in for q.
std::vector<ResidueClassSummary> residue_analysis(const CoveringData& cov);

/// The prime forced on q by q = c mod m, or empty when gcd(c, m) = 1.
/// Throws ValidationError when no prime power lies in the class.
std::optional<Integer> forced_prime(const Integer& c, const Integer& m);

}  // namespace liereps
