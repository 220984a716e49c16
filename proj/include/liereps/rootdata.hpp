#pragma once

// Root data given by matrix pairs (A, A^vee): row i of A holds the simple root
// alpha_i in the character lattice X = Z^r, row i of A^vee the simple coroot in
// the dual lattice Y = Z^r. The Cartan matrix is C = A^vee * A^tr, so
// C_ij = <alpha_j, alpha_i^vee>.
//
// Dynkin nodes use the CHEVIE numbering:
//   A_l  chain 1 - 2 - ... - l
//   B_l  chain, double bond 1-2 with C_12 = -2, C_21 = -1 (node 1 short)
//   C_l  chain, double bond 1-2 with C_12 = -1, C_21 = -2 (node 1 long)
//   D_l  nodes 1 and 2 both joined to 3, then 3 - 4 - ... - l
//   E_l  chain 1 - 3 - 4 - ... - l, node 2 joined to 4
//   F_4  chain, double bond 2-3 with C_32 = -2
//   G_2  C_12 = -1, C_21 = -3

#include "liereps/exactmat.hpp"
#include "liereps/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liereps {

struct CartanComponent {
  char type = 'A';
  std::size_t rank = 0;
  /// nodes[k] is the (0-based) simple root playing the role of standard node k+1.
  std::vector<std::size_t> nodes;
  /// Set for a B_2 component whose standard node order runs against the
  /// input order, i.e. the input block reads as the transpose (C_2 shape).
  bool transposed = false;

  std::string label() const;  // "A2", "E8", ...
};

struct CartanClassification {
  /// Ordered by smallest simple-root index.
  std::vector<CartanComponent> components;

  std::string str() const;  // "A2+A1+A2+A2"
};

/// Checks diagonal 2, off-diagonal <= 0 and C_ij = 0 iff C_ji = 0.
bool satisfies_cartan_axioms(const IntMatrix& c);

/// Standard Cartan matrix of a simple type in CHEVIE numbering.
IntMatrix cartan_matrix(char type, std::size_t l);
bool is_legal_type(char type, std::size_t l);

CartanClassification classify_cartan(const IntMatrix& c);

class RootDatum {
 public:
  RootDatum() = default;

  const IntMatrix& A() const { return a_; }
  const IntMatrix& Acheck() const { return acheck_; }
  std::size_t rank() const { return a_.cols(); }
  std::size_t ss_rank() const { return a_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }
  const CartanClassification& classification() const { return classification_; }

  friend RootDatum validate_root_datum(const IntMatrix& a, const IntMatrix& acheck);

 private:
  IntMatrix a_;
  IntMatrix acheck_;
  IntMatrix cartan_;
  CartanClassification classification_;
};

RootDatum validate_root_datum(const IntMatrix& a, const IntMatrix& acheck);

enum class Isogeny { SimplyConnected, Adjoint };

/// sc: (C^tr, Id); adjoint: (Id, C).
RootDatum standard_datum(char type, std::size_t l, Isogeny isogeny);
/// Torus of rank r: no roots.
RootDatum torus_datum(std::size_t r);
RootDatum direct_product(const RootDatum& d1, const RootDatum& d2);

struct RootSystem {
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;  // coroots[i] belongs to roots[i]
};

/// Closure of the simple roots under the simple reflections; throws
/// ValidationError when more than 2000 roots appear.
RootSystem enumerate_roots(const RootDatum& d);

/// Recomputes the Cartan matrix from the roots lying in each rank-2 span
/// of two simple roots.
IntMatrix recover_cartan_from_roots(const RootDatum& d, const RootSystem& roots);

/// Hermite basis (rows) of {x in Z^r : x(k) = 0 for all k in gens}.
IntMatrix character_sublattice(std::size_t r, const std::vector<TorsionVector>& gens);

/// Datum of G/K: characters vanishing on K, rebased along the Hermite basis B,
/// so A_X = A * B^-1 and A^vee_X = A^vee * B^tr.
struct QuotientDatum {
  RootDatum datum;
  IntMatrix basis;
};
QuotientDatum quotient_datum(const RootDatum& d, const std::vector<TorsionVector>& gens,
                             const std::optional<Integer>& p = std::nullopt);
/// F0 in the rebased coordinates: B * F0 * B^-1.
IntMatrix transport_frobenius(const IntMatrix& f0, const IntMatrix& basis);

struct FrobeniusDatum {
  IntMatrix F0;
  std::optional<Integer> q;
  std::optional<Integer> p;
  /// A * F0 = P_sigma * A, i.e. row i of A * F0 is row sigma[i] of A.
  std::vector<std::size_t> sigma;
  std::size_t order = 1;
};

/// Prime p with q = p^k, k >= 1.
std::optional<Integer> prime_of_power(const Integer& q);

FrobeniusDatum validate_frobenius(const RootDatum& d, const IntMatrix& f0,
                                  const std::optional<Integer>& q = std::nullopt);

/// 1-based cycle notation of sigma, "()" for the identity.
std::string cycle_string(const std::vector<std::size_t>& sigma);

struct TwistedComponents {
  std::vector<std::string> labels;  // "^2A2(q)", "A2(q^2)", "A1(q)"
  std::size_t torus_rank = 0;
};
TwistedComponents twisted_components(const RootDatum& d, const FrobeniusDatum& f);

}  // namespace liereps
