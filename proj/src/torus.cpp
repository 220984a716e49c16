#include "liereps/torus.hpp"

#include "liereps/error.hpp"
#include "liereps/rootdata.hpp"

#include <algorithm>
#include <numeric>

namespace liereps {

namespace {

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Enumeration is used for fixed points up to this group order.
constexpr unsigned long kEnumerationLimit = 10000;
// elements() refuses to materialize more than this.
constexpr unsigned long kMaterializeLimit = 2000000;

}  // namespace

Rational mod_one(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(fl);
  r.canonicalize();
  return r;
}

// --- TorsionVector -------------------------------------------------------

TorsionVector::TorsionVector(std::size_t rank) : coords_(rank, Rational(0)) {}

TorsionVector::TorsionVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  normalize();
}

TorsionVector TorsionVector::from_fractions(const IntVector& numerators,
                                            const Integer& denominator) {
  if (denominator == 0) throw ValidationError("torsion vector with zero denominator");
  std::vector<Rational> c;
  c.reserve(numerators.size());
  for (const auto& n : numerators) {
    Rational v(n, denominator);
    v.canonicalize();
    c.push_back(v);
  }
  return TorsionVector(std::move(c));
}

void TorsionVector::normalize() {
  for (auto& c : coords_) {
    c.canonicalize();
    c = mod_one(c);
  }
}

bool TorsionVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

Integer TorsionVector::order() const {
  Integer n = 1;
  for (const auto& c : coords_) n = lcm_of(n, c.get_den());
  return n;
}

TorsionVector TorsionVector::times(const IntMatrix& m) const {
  if (m.rows() != coords_.size())
    throw ValidationError("torsion vector times matrix: dimension mismatch");
  std::vector<Rational> out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += coords_[i] * Rational(m(i, j));
  }
  return TorsionVector(std::move(out));
}

IntVector TorsionVector::scaled(const Integer& n) const {
  IntVector v(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    Rational s = coords_[i] * Rational(n);
    s.canonicalize();
    if (s.get_den() != 1) throw InternalError("torsion vector scaled by a non-multiple of its order");
    v[i] = s.get_num();
  }
  return v;
}

TorsionVector operator+(const TorsionVector& a, const TorsionVector& b) {
  if (a.size() != b.size()) throw ValidationError("torsion vector sum: length mismatch");
  std::vector<Rational> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return TorsionVector(std::move(c));
}

TorsionVector operator-(const TorsionVector& a, const TorsionVector& b) {
  if (a.size() != b.size()) throw ValidationError("torsion vector difference: length mismatch");
  std::vector<Rational> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return TorsionVector(std::move(c));
}

TorsionVector operator*(const Integer& n, const TorsionVector& t) {
  std::vector<Rational> c(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) c[i] = Rational(n) * t.coords_[i];
  return TorsionVector(std::move(c));
}

std::string TorsionVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

// --- QClass --------------------------------------------------------------

QClass QClass::concrete(const Integer& q) {
  QClass c;
  c.value_ = q;
  return c;
}

QClass QClass::residue(const Integer& c, const Integer& modulus) {
  if (modulus < 1) throw ValidationError("residue class modulus must be positive");
  QClass r;
  mpz_fdiv_r(r.value_.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
  r.modulus_ = modulus;
  return r;
}

TorsionVector QClass::scale(const TorsionVector& t) const {
  if (modulus_ && *modulus_ % t.order() != 0)
    throw ValidationError("concrete q required: element order " + t.order().get_str() +
                          " does not divide the residue modulus " + modulus_->get_str());
  return value_ * t;
}

std::string QClass::str() const {
  if (!modulus_) return value_.get_str();
  return value_.get_str() + " mod " + modulus_->get_str();
}

// --- FiniteAbelianGroup --------------------------------------------------

FiniteAbelianGroup FiniteAbelianGroup::trivial(std::size_t ambient_rank) {
  return generated_by(ambient_rank, {});
}

FiniteAbelianGroup FiniteAbelianGroup::generated_by(std::size_t ambient_rank,
                                                    std::span<const TorsionVector> gens) {
  FiniteAbelianGroup g;
  g.ambient_rank_ = ambient_rank;
  Integer n = 1;
  for (const auto& t : gens) {
    if (t.size() != ambient_rank) throw ValidationError("generator has wrong length");
    n = lcm_of(n, t.order());
  }
  g.exponent_ = n;

  std::vector<IntVector> rows;
  rows.reserve(gens.size());
  for (const auto& t : gens) rows.push_back(t.scaled(n));
  IntMatrix lattice =
      vstack(IntMatrix::from_rows(rows, ambient_rank), n * IntMatrix::identity(ambient_rank));
  g.hermite_ = hermite_normal_form(lattice);
  if (g.hermite_.rows() != ambient_rank) throw InternalError("subgroup lattice not of full rank");
  g.hermite_inverse_ = rational_inverse(g.hermite_);

  // N*Z^r written in the Hermite basis.
  IntMatrix relations(ambient_rank, ambient_rank);
  for (std::size_t i = 0; i < ambient_rank; ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) {
      Rational v = Rational(n) * g.hermite_inverse_(i, j);
      v.canonicalize();
      if (v.get_den() != 1) throw InternalError("subgroup relations not integral");
      relations(i, j) = v.get_num();
    }
  SnfResult snf = smith_normal_form(relations);
  g.coord_transform_ = snf.Q;
  IntMatrix qinv = unimodular_inverse(snf.Q);
  IntMatrix basis_rows = qinv * g.hermite_;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    const Integer& d = snf.D(i, i);
    if (d == 1) continue;
    if (d == 0) throw InternalError("subgroup is infinite");
    g.factors_.push_back(d);
    g.factor_index_.push_back(i);
    g.generators_.push_back(TorsionVector::from_fractions(basis_rows.row(i), n));
  }
  return g;
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

Integer FiniteAbelianGroup::exponent() const {
  Integer e = 1;
  for (const auto& d : factors_) e = lcm_of(e, d);
  return e;
}

bool FiniteAbelianGroup::contains(const TorsionVector& t) const {
  if (t.size() != ambient_rank_) return false;
  if (exponent_ % t.order() != 0) return false;
  IntVector s = t.scaled(exponent_);
  for (std::size_t j = 0; j < ambient_rank_; ++j) {
    Rational x = 0;
    for (std::size_t i = 0; i < ambient_rank_; ++i) x += Rational(s[i]) * hermite_inverse_(i, j);
    x.canonicalize();
    if (x.get_den() != 1) return false;
  }
  return true;
}

bool FiniteAbelianGroup::contains(const FiniteAbelianGroup& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const TorsionVector& t) { return contains(t); });
}

IntVector FiniteAbelianGroup::coordinates(const TorsionVector& t) const {
  if (!contains(t)) throw ValidationError("element " + t.str() + " is not in the group");
  IntVector s = t.scaled(exponent_);
  IntVector x(ambient_rank_);
  for (std::size_t j = 0; j < ambient_rank_; ++j) {
    Rational v = 0;
    for (std::size_t i = 0; i < ambient_rank_; ++i) v += Rational(s[i]) * hermite_inverse_(i, j);
    v.canonicalize();
    x[j] = v.get_num();
  }
  IntVector y = x * coord_transform_;
  IntVector out(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Integer v = y[factor_index_[k]];
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), factors_[k].get_mpz_t());
    out[k] = v;
  }
  return out;
}

TorsionVector FiniteAbelianGroup::element(const IntVector& coordinates) const {
  if (coordinates.size() != factors_.size()) throw ValidationError("wrong number of coordinates");
  TorsionVector t(ambient_rank_);
  for (std::size_t k = 0; k < factors_.size(); ++k) t = t + coordinates[k] * generators_[k];
  return t;
}

std::vector<TorsionVector> FiniteAbelianGroup::elements() const {
  if (order() > kMaterializeLimit)
    throw ValidationError("group of order " + order().get_str() + " is too large to enumerate");
  std::vector<TorsionVector> out;
  IntVector c(factors_.size(), Integer(0));
  for (;;) {
    out.push_back(element(c));
    std::size_t k = factors_.size();
    while (k > 0) {
      --k;
      if (++c[k] < factors_[k]) break;
      c[k] = 0;
      if (k == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

FiniteAbelianGroup FiniteAbelianGroup::kernel_of(
    const std::function<TorsionVector(const TorsionVector&)>& hom) const {
  const std::size_t k = generators_.size();
  if (k == 0) return *this;
  std::vector<TorsionVector> images;
  images.reserve(k);
  Integer n = 1;
  for (const auto& g : generators_) {
    images.push_back(hom(g));
    n = lcm_of(n, images.back().order());
  }
  const std::size_t s = images.front().size();
  std::vector<IntVector> rows;
  for (const auto& v : images) rows.push_back(v.scaled(n));
  IntMatrix solutions = congruence_solutions(IntMatrix::from_rows(rows, s), n);
  std::vector<TorsionVector> gens;
  for (std::size_t i = 0; i < solutions.rows(); ++i) {
    IntVector c = solutions.row(i);
    for (std::size_t j = 0; j < k; ++j)
      mpz_fdiv_r(c[j].get_mpz_t(), c[j].get_mpz_t(), factors_[j].get_mpz_t());
    gens.push_back(element(c));
  }
  return generated_by(ambient_rank_, gens);
}

std::string FiniteAbelianGroup::structure() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + factors_[i].get_str();
  }
  return s;
}

bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  return a.ambient_rank_ == b.ambient_rank_ && a.factors_ == b.factors_ && a.contains(b) &&
         b.contains(a);
}

// --- torsion systems -----------------------------------------------------

Integer p_prime_part(const Integer& n, const std::optional<Integer>& p) {
  Integer v = abs(n);
  if (!p || v == 0) return v;
  while (v % *p == 0) v /= *p;
  return v;
}

namespace {

struct TorsionSolution {
  FiniteAbelianGroup finite;
  std::size_t free_rank = 0;
};

// Solutions t in (Q_p'/Z)^rows(n) of t * n = 0.
TorsionSolution solve_torsion(const IntMatrix& n, const std::optional<Integer>& p) {
  SnfResult snf = smith_normal_form(n);
  const std::size_t dim = n.rows();
  const std::size_t r = snf.rank();
  std::vector<TorsionVector> gens;
  for (std::size_t i = 0; i < r; ++i) {
    Integer d = p_prime_part(snf.D(i, i), p);
    if (d > 1) gens.push_back(TorsionVector::from_fractions(snf.P.row(i), d));
  }
  return {FiniteAbelianGroup::generated_by(dim, gens), dim - r};
}

void require_stable(const FiniteAbelianGroup& g, const QClass& q, const IntMatrix& f0) {
  for (const auto& t : g.generators())
    if (!g.contains(frobenius_action(t, q, f0)))
      throw ValidationError("F0 does not stabilize the group");
}

}  // namespace

FiniteAbelianGroup solve_torsion_system(const IntMatrix& m, const std::optional<Integer>& p) {
  TorsionSolution sol = solve_torsion(m.transpose(), p);
  if (sol.free_rank != 0 || m.rows() < m.cols())
    throw ValidationError("solution set infinite: matrix does not have full rank");
  return sol.finite;
}

Rational evaluate_character(const IntVector& x, const TorsionVector& t) {
  if (x.size() != t.size()) throw ValidationError("character and torus element: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += Rational(x[i]) * t[i];
  return mod_one(s);
}

TorsionVector frobenius_action(const TorsionVector& t, const QClass& q, const IntMatrix& f0) {
  if (!f0.is_square() || f0.rows() != t.size())
    throw ValidationError("Frobenius action: dimension mismatch");
  return q.scale(t.times(f0.transpose()));
}

FiniteAbelianGroup fixed_subgroup_by_enumeration(const FiniteAbelianGroup& g, const QClass& q,
                                                 const IntMatrix& f0) {
  require_stable(g, q, f0);
  std::vector<TorsionVector> gens;
  FiniteAbelianGroup fixed = FiniteAbelianGroup::trivial(g.ambient_rank());
  for (const auto& t : g.elements()) {
    if (frobenius_action(t, q, f0) != t || fixed.contains(t)) continue;
    gens.push_back(t);
    fixed = FiniteAbelianGroup::generated_by(g.ambient_rank(), gens);
  }
  return fixed;
}

FiniteAbelianGroup fixed_subgroup_by_congruences(const FiniteAbelianGroup& g, const QClass& q,
                                                 const IntMatrix& f0) {
  require_stable(g, q, f0);
  return g.kernel_of([&](const TorsionVector& t) { return frobenius_action(t, q, f0) - t; });
}

FiniteAbelianGroup fixed_subgroup(const FiniteAbelianGroup& g, const QClass& q,
                                  const IntMatrix& f0) {
  if (g.order() <= kEnumerationLimit) return fixed_subgroup_by_enumeration(g, q, f0);
  return fixed_subgroup_by_congruences(g, q, f0);
}

FiniteAbelianGroup lang_image(const FiniteAbelianGroup& g, const QClass& q, const IntMatrix& f0) {
  require_stable(g, q, f0);
  std::vector<TorsionVector> images;
  for (const auto& t : g.generators()) images.push_back(frobenius_action(t, q, f0) - t);
  return FiniteAbelianGroup::generated_by(g.ambient_rank(), images);
}

CenterStructure center_of(const RootDatum& d, const std::optional<Integer>& p) {
  TorsionSolution sol = solve_torsion(d.A().transpose(), p);
  return {sol.finite, sol.free_rank};
}

FiniteAbelianGroup fixed_torus_structure(const IntMatrix& f0, const Integer& q) {
  if (!f0.is_square()) throw ValidationError("Frobenius matrix must be square");
  if (q < 2) throw ValidationError("q must be at least 2");
  IntMatrix characteristic = q * f0.transpose() - IntMatrix::identity(f0.rows());
  TorsionSolution sol = solve_torsion(characteristic, std::nullopt);
  if (sol.free_rank != 0) throw ValidationError("characteristic matrix q*F0^tr - Id is singular");
  return sol.finite;
}

}  // namespace liereps
