#pragma once

// Closed forms for simple groups: centers of the simply connected groups,
// isogeny kernels, the fixed points K^F with the resulting weight
// congruences, and the number of semisimple classes.

#include "liereps/exactmat.hpp"
#include "liereps/rootdata.hpp"
#include "liereps/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liereps {

enum class IsogenyKind { SimplyConnected, Adjoint, Intermediate, SO, HSpin };

struct SimpleSpec {
  char type = 'A';
  std::size_t l = 1;
  IsogenyKind isogeny = IsogenyKind::SimplyConnected;
  /// Type A only: index of ZR in X (l+1 for sc, 1 for adjoint).
  Integer e = 1;
  int epsilon = 1;
  Integer q = 2;

  std::string str() const;  // "A3 e=2 eps=-1 q=7"
};

/// Parses "sc", "adjoint", "SO", "HSpin" or "e=N" (type A).
SimpleSpec make_spec(char type, std::size_t l, const std::string& isogeny, int epsilon,
                     const Integer& q);
/// Throws ValidationError naming the violated rule.
void check_legal(const SimpleSpec& s);
Integer prime_of(const SimpleSpec& s);

/// Center of the simply connected group in simple-coroot coordinates, with
/// orders reduced to their p'-parts (no reduction when p is absent).
std::vector<TorsionVector> center_generators(char type, std::size_t l,
                                             const std::optional<Integer>& p = std::nullopt);

/// Generators of the isogeny kernel K, independent of the characteristic.
std::vector<TorsionVector> isogeny_kernel_generators(const SimpleSpec& s);

/// sigma[i] = image of node i under the graph automorphism of F_epsilon.
std::vector<std::size_t> graph_automorphism(char type, std::size_t l, int epsilon);

struct SimpleDatum {
  RootDatum datum;
  IntMatrix F0;
};
/// G_sc / K with the Frobenius matrix transported from the permutation of nodes.
SimpleDatum build_simple_datum(const SimpleSpec& s);

struct SimpleParameterization {
  IntVector kf_factors;  // invariant factors of K^F
  IntMatrix constraints;  // rows w with w * lambda^tr = 0 mod modulus
  Integer modulus = 1;
  std::string equation;  // human-readable form, "none" when unconstrained
};
SimpleParameterization simple_parameterization(const SimpleSpec& s);

/// Number of semisimple classes from the closed-form table.
Integer closed_form_count(const SimpleSpec& s);

/// Test hook: perturbs one closed form so the self-test can prove it notices.
void set_catalog_corruption(bool on);

Integer euler_phi(const Integer& n);
std::vector<Integer> divisors(const Integer& n);

/// (1/m) * sum_{d | m} phi(d) q^(n/d); needs m | n and m | q - 1 or m | q + 1.
Integer divisor_sum_count(unsigned n, const Integer& m, const Integer& q);
/// (q^n + 1 - 2 nu) / 2 for odd q and nu in {0, 1}.
Integer parity_count(unsigned n, const Integer& q, int nu);
/// #{lambda in [0, q)^len : coeffs . lambda = target mod m}, by enumeration.
Integer bruteforce_count(const std::vector<long>& coeffs, long m, long q, long target);

}  // namespace liereps
