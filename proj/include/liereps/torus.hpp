#pragma once

// Torus elements as tuples in Q/Z, finite subgroups of (Q/Z)^r, and the
// Frobenius action t -> q * t * F0^tr on them.

#include "liereps/exactmat.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liereps {

class RootDatum;

/// Element of (Q/Z)^r; coordinates are kept reduced into [0, 1).
class TorsionVector {
 public:
  TorsionVector() = default;
  explicit TorsionVector(std::size_t rank);
  explicit TorsionVector(std::vector<Rational> coords);
  /// Convenience: numerators over a common denominator.
  static TorsionVector from_fractions(const IntVector& numerators, const Integer& denominator);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  /// Order in (Q/Z)^r, the lcm of the denominators.
  Integer order() const;

  /// Image under an integer matrix acting on rows (t -> t * m).
  TorsionVector times(const IntMatrix& m) const;
  /// Integer vector n * t, valid when n is a multiple of order().
  IntVector scaled(const Integer& n) const;

  friend TorsionVector operator+(const TorsionVector& a, const TorsionVector& b);
  friend TorsionVector operator-(const TorsionVector& a, const TorsionVector& b);
  friend TorsionVector operator*(const Integer& n, const TorsionVector& t);
  friend bool operator==(const TorsionVector& a, const TorsionVector& b) = default;
  friend bool operator<(const TorsionVector& a, const TorsionVector& b) {
    return a.coords_ < b.coords_;
  }

  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> coords_;
};

/// Reduce a rational into [0, 1).
Rational mod_one(const Rational& x);

/// The Frobenius scalar: either a concrete prime power q, or only its class
/// modulo some modulus. The class suffices on elements whose order divides
/// the modulus, because the action is multiplication by q.
class QClass {
 public:
  static QClass concrete(const Integer& q);
  static QClass residue(const Integer& c, const Integer& modulus);

  bool is_concrete() const { return !modulus_; }
  const Integer& value() const { return value_; }
  const std::optional<Integer>& modulus() const { return modulus_; }

  /// q * t; throws ValidationError("concrete q required") when only a residue
  /// is known and t has order not dividing the modulus.
  TorsionVector scale(const TorsionVector& t) const;

  std::string str() const;

 private:
  Integer value_;
  std::optional<Integer> modulus_;
};

/// Finite subgroup of (Q/Z)^r with generators realizing its invariant factors.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  static FiniteAbelianGroup trivial(std::size_t ambient_rank);
  static FiniteAbelianGroup generated_by(std::size_t ambient_rank,
                                         std::span<const TorsionVector> gens);

  std::size_t ambient_rank() const { return ambient_rank_; }
  /// d_1 | d_2 | ..., each > 1.
  const IntVector& invariant_factors() const { return factors_; }
  /// generators()[i] has order invariant_factors()[i] and the group is their direct sum.
  const std::vector<TorsionVector>& generators() const { return generators_; }

  Integer order() const;
  Integer exponent() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  bool contains(const TorsionVector& t) const;
  bool contains(const FiniteAbelianGroup& other) const;
  /// Exponents a_i (0 <= a_i < d_i) with t = sum a_i * generators()[i].
  IntVector coordinates(const TorsionVector& t) const;
  /// All elements, in lexicographic order of their coordinates.
  std::vector<TorsionVector> elements() const;
  TorsionVector element(const IntVector& coordinates) const;

  /// Kernel of a homomorphism given by its values on elements.
  FiniteAbelianGroup kernel_of(const std::function<TorsionVector(const TorsionVector&)>& hom) const;

  /// "1", "Z/3", "Z/2 x Z/2", ...
  std::string structure() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

 private:
  std::size_t ambient_rank_ = 0;
  IntVector factors_;
  std::vector<TorsionVector> generators_;
  // Lattice picture: the group is L / N*Z^r with L = Z^r * hermite_ (rows).
  Integer exponent_ = 1;
  IntMatrix hermite_;
  RatMatrix hermite_inverse_;
  IntMatrix coord_transform_;  // Q from the Smith form of N * hermite^-1
  std::vector<std::size_t> factor_index_;
};

/// Solutions of t * M^tr = 0 in (Q_p'/Z)^r, where r = cols(M) and M has full
/// rank r. Without p the full Q/Z solution set is returned.
FiniteAbelianGroup solve_torsion_system(const IntMatrix& m,
                                        const std::optional<Integer>& p = std::nullopt);

/// x(t) = t * x^tr mod 1.
Rational evaluate_character(const IntVector& x, const TorsionVector& t);

/// F(t) = q * t * F0^tr.
TorsionVector frobenius_action(const TorsionVector& t, const QClass& q, const IntMatrix& f0);

/// {t in G : F(t) = t}. Dispatches on |G| between enumeration and solving
/// congruences on exponent vectors.
FiniteAbelianGroup fixed_subgroup(const FiniteAbelianGroup& g, const QClass& q,
                                  const IntMatrix& f0);
FiniteAbelianGroup fixed_subgroup_by_enumeration(const FiniteAbelianGroup& g, const QClass& q,
                                                 const IntMatrix& f0);
FiniteAbelianGroup fixed_subgroup_by_congruences(const FiniteAbelianGroup& g, const QClass& q,
                                                 const IntMatrix& f0);

/// Image of t -> F(t) - t.
FiniteAbelianGroup lang_image(const FiniteAbelianGroup& g, const QClass& q, const IntMatrix& f0);

struct CenterStructure {
  FiniteAbelianGroup finite_part;
  std::size_t torus_rank = 0;
};

/// Solutions of t * A^tr = 0: a finite part plus a torus of rank r - l.
CenterStructure center_of(const RootDatum& d, const std::optional<Integer>& p = std::nullopt);

/// T^F for F = q * F0: solutions of t * (q F0^tr - Id) = 0.
FiniteAbelianGroup fixed_torus_structure(const IntMatrix& f0, const Integer& q);

/// Largest divisor of n coprime to p (n itself when p is absent).
Integer p_prime_part(const Integer& n, const std::optional<Integer>& p);

}  // namespace liereps
