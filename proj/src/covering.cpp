#include "liereps/covering.hpp"

#include "liereps/error.hpp"

namespace liereps {

namespace {

std::vector<Integer> distinct_primes(Integer n) {
  std::vector<Integer> primes;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool some_power_hits(const Integer& p, const Integer& c, const Integer& m) {
  Integer x = p % m;
  // The sequence p^k mod m is eventually periodic with period and preperiod
  // bounded by m, so m + 1 steps see every value it takes.
  for (Integer k = 0; k <= m; ++k) {
    if (x == c) return true;
    x = (x * p) % m;
  }
  return false;
}

}  // namespace

CoveringData build_covering(const RootDatum& d, const FrobeniusDatum& f) {
  const std::size_t r = d.rank();
  const std::size_t l = d.ss_rank();
  CoveringData cov;
  IntMatrix kernel = integer_kernel_basis(d.A());
  cov.B = kernel.rows() == 0 ? IntMatrix(0, r) : hermite_normal_form(kernel);
  if (cov.B.rows() != r - l) throw InternalError("R^perp basis has the wrong size");
  IntMatrix mtr = vstack(d.Acheck(), cov.B);
  cov.M = mtr.transpose();

  RatMatrix ft = RatMatrix(mtr) * RatMatrix(f.F0.transpose()) * rational_inverse(mtr);
  if (!ft.is_integral())
    throw ValidationError("M^tr F0^tr M^-tr is not integral; F0 does not preserve the coroot lattice");
  cov.tilde_F0 = ft.to_integer().transpose();

  IntVector diag = smith_normal_form(mtr).diagonal();
  cov.modulus_m = diag.empty() ? Integer(1) : diag.back();
  if (cov.modulus_m == 0) throw InternalError("M^tr is singular");

  IntMatrix zeros(l, r - l);
  cov.tilde_datum = validate_root_datum(hstack(d.cartan().transpose(), zeros),
                                        hstack(IntMatrix::identity(l), zeros));
  return cov;
}

FiniteAbelianGroup kernel_of_covering(const CoveringData& cov, const std::optional<Integer>& p) {
  return solve_torsion_system(cov.M, p);
}

FiniteAbelianGroup derived_intersection_fixed(const CoveringData& cov, const QClass& q,
                                              const std::optional<Integer>& p) {
  const std::size_t r = cov.tilde_datum.rank();
  const std::size_t l = cov.tilde_datum.ss_rank();
  FiniteAbelianGroup fixed = fixed_subgroup(kernel_of_covering(cov, p), q, cov.tilde_F0);
  if (l == r) return fixed;
  return fixed.kernel_of([&](const TorsionVector& t) {
    std::vector<Rational> tail(t.coords().begin() + static_cast<std::ptrdiff_t>(l), t.coords().end());
    return TorsionVector(std::move(tail));
  });
}

DerivedSplit derived_split(const RootDatum& d, const FrobeniusDatum& f) {
  const std::size_t r = d.rank();
  const std::size_t l = d.ss_rank();
  DerivedSplit s;
  s.D = smith_normal_form(d.Acheck()).Q;
  IntMatrix acheck_d = d.Acheck() * s.D;
  if (!acheck_d.block(0, l, l, r - l).is_zero())
    throw InternalError("A^vee * D does not vanish on the last r - l columns");
  IntMatrix dinv_tr = unimodular_inverse(s.D).transpose();
  IntMatrix a_d = d.A() * dinv_tr;
  IntMatrix f0 = s.D.transpose() * f.F0 * dinv_tr;
  if (!f0.block(l, 0, r - l, l).is_zero())
    throw ValidationError("D^tr F0 D^-tr couples the quotient torus into the derived block");
  s.derived_datum = validate_root_datum(a_d.first_columns(l), acheck_d.first_columns(l));
  s.derived_F0 = f0.block(0, 0, l, l);
  s.quotient_F0 = f0.block(l, l, r - l, r - l);
  return s;
}

std::optional<Integer> forced_prime(const Integer& c, const Integer& m) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (g == 1) return std::nullopt;
  std::vector<Integer> primes = distinct_primes(g);
  if (primes.size() > 1)
    throw ValidationError("gcd(" + c.get_str() + ", " + m.get_str() +
                          ") has two prime factors; no prime power in this class");
  if (!some_power_hits(primes.front(), c, m))
    throw ValidationError("no power of " + primes.front().get_str() + " is " + c.get_str() +
                          " mod " + m.get_str());
  return primes.front();
}

std::vector<ResidueClassSummary> residue_analysis(const CoveringData& cov) {
  std::vector<ResidueClassSummary> out;
  const Integer& m = cov.modulus_m;
  for (Integer c = 0; c < m; ++c) {
    ResidueClassSummary s;
    s.c = c;
    try {
      s.p = forced_prime(c, m);
    } catch (const ValidationError& e) {
      s.skipped = true;
      s.skip_reason = e.what();
      out.push_back(std::move(s));
      continue;
    }
    QClass q = QClass::residue(c, m);
    s.kernel = kernel_of_covering(cov, s.p);
    s.fixed = fixed_subgroup(s.kernel, q, cov.tilde_F0);
    s.derived_fixed = derived_intersection_fixed(cov, q, s.p);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace liereps
