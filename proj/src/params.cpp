#include "liereps/params.hpp"

#include "liereps/error.hpp"

namespace liereps {

namespace {

constexpr unsigned long kMaxStates = 10000000;

std::int64_t to_int64(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) throw ValidationError(std::string(what) + " too large");
  return v.get_si();
}

}  // namespace

WeightConstraintSystem weight_constraints(const FiniteAbelianGroup& kprime, std::size_t l,
                                          const Integer& q) {
  if (kprime.ambient_rank() < l) throw ValidationError("subgroup ambient rank below l");
  WeightConstraintSystem sys;
  sys.l = l;
  sys.q = q;
  sys.modulus = kprime.exponent();
  std::vector<IntVector> rows;
  for (const auto& t : kprime.generators()) {
    for (std::size_t i = l; i < t.size(); ++i)
      if (t[i] != 0) throw ValidationError("subgroup element " + t.str() + " is not in the derived factor");
    IntVector row = t.scaled(sys.modulus);
    row.resize(l);
    rows.push_back(std::move(row));
  }
  sys.W = hermite_form_mod(IntMatrix::from_rows(rows, l), sys.modulus);
  return sys;
}

Integer count_weights(const WeightConstraintSystem& sys) {
  const std::size_t k = sys.W.rows();
  if (sys.W.cols() != sys.l) throw ValidationError("constraint matrix has the wrong width");
  if (sys.q < 0) throw ValidationError("q must be non-negative");
  if (!sys.modulus.fits_ulong_p() || sys.modulus < 1) throw ValidationError("bad modulus");
  const unsigned long m = sys.modulus.get_ui();

  unsigned long states = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (states > kMaxStates / m) throw ValidationError("constraint system too large to count");
    states *= m;
  }

  // Residues of lambda_i in [0, q): a is hit q div m times, plus one if a < q mod m.
  Integer base = sys.q / m;
  unsigned long extra = Integer(sys.q % m).get_ui();

  std::vector<Integer> dist(states, Integer(0));
  dist[0] = 1;
  std::vector<unsigned long> w(k);
  for (std::size_t i = 0; i < sys.l; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Integer v;
      mpz_fdiv_r_ui(v.get_mpz_t(), sys.W(j, i).get_mpz_t(), m);
      w[j] = v.get_ui();
    }
    std::vector<Integer> next(states, Integer(0));
    for (unsigned long a = 0; a < m; ++a) {
      Integer hits = base + (a < extra ? 1 : 0);
      if (hits == 0) continue;
      // shift = a * w, as a mixed-radix state offset
      std::vector<unsigned long> shift(k);
      for (std::size_t j = 0; j < k; ++j) shift[j] = (a * w[j]) % m;
      for (unsigned long s = 0; s < states; ++s) {
        if (dist[s] == 0) continue;
        unsigned long rest = s, target = 0, place = 1;
        for (std::size_t j = 0; j < k; ++j) {
          unsigned long digit = rest % m;
          rest /= m;
          target += ((digit + shift[j]) % m) * place;
          place *= m;
        }
        next[target] += dist[s] * hits;
      }
    }
    dist = std::move(next);
  }
  return dist[0];
}

WeightEnumerator::WeightEnumerator(const WeightConstraintSystem& sys)
    : modulus_(to_int64(sys.modulus, "modulus")), q_(to_int64(sys.q, "q")), current_(sys.l, 0) {
  if (sys.W.cols() != sys.l) throw ValidationError("constraint matrix has the wrong width");
  for (std::size_t j = 0; j < sys.W.rows(); ++j) {
    std::vector<std::int64_t> row(sys.l);
    for (std::size_t i = 0; i < sys.l; ++i) {
      Integer v;
      mpz_fdiv_r(v.get_mpz_t(), sys.W(j, i).get_mpz_t(), sys.modulus.get_mpz_t());
      row[i] = v.get_si();
    }
    rows_.push_back(std::move(row));
  }
  done_ = q_ <= 0;
}

bool WeightEnumerator::feasible() const {
  for (const auto& row : rows_) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < row.size(); ++i) s = (s + (row[i] * (current_[i] % modulus_)) % modulus_) % modulus_;
    if (s != 0) return false;
  }
  return true;
}

std::optional<std::vector<std::int64_t>> WeightEnumerator::next() {
  while (!done_) {
    if (started_) {
      std::size_t i = current_.size();
      for (;;) {
        if (i == 0) {
          done_ = true;
          return std::nullopt;
        }
        --i;
        if (++current_[i] < q_) break;
        current_[i] = 0;
      }
    }
    started_ = true;
    if (feasible()) return current_;
  }
  return std::nullopt;
}

std::vector<std::vector<std::int64_t>> enumerate_weights(const WeightConstraintSystem& sys,
                                                         std::size_t limit) {
  std::vector<std::vector<std::int64_t>> out;
  WeightEnumerator e(sys);
  while (out.size() < limit) {
    auto w = e.next();
    if (!w) break;
    out.push_back(std::move(*w));
  }
  return out;
}

ParamSummary parameterize(const RootDatum& d, const FrobeniusDatum& f) {
  if (!f.q || !f.p) throw ValidationError("a concrete prime power q is required");
  ParamSummary s;
  s.covering = build_covering(d, f);
  s.setB = derived_intersection_fixed(s.covering, QClass::concrete(*f.q), f.p);
  s.setA = weight_constraints(s.setB, d.ss_rank(), *f.q);
  s.countA = count_weights(s.setA);
  s.split = derived_split(d, f);
  s.setC = fixed_torus_structure(s.split.quotient_F0, *f.q);
  s.total = s.countA * s.setB.order() * s.setC.order();
  return s;
}

Integer semisimple_class_count(const RootDatum& d, const FrobeniusDatum& f) {
  return parameterize(d, f).total;
}

}  // namespace liereps
