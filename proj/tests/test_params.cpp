#include "doctest.h"

#include "liereps/acceptance.hpp"
#include "liereps/catalog.hpp"
#include "liereps/error.hpp"
#include "liereps/params.hpp"

#include <random>

using namespace liereps;

namespace {

Integer brute_count(const WeightConstraintSystem& sys) {
  std::vector<long> lambda(sys.l, 0);
  const long q = sys.q.get_si();
  Integer n = 0;
  if (q == 0) return 0;
  for (;;) {
    bool ok = true;
    for (std::size_t j = 0; j < sys.W.rows() && ok; ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < sys.l; ++i) s += sys.W(j, i) * lambda[i];
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), sys.modulus.get_mpz_t());
      ok = r == 0;
    }
    if (ok) ++n;
    std::size_t i = 0;
    while (i < sys.l && ++lambda[i] == q) lambda[i++] = 0;
    if (i == sys.l) return n;
  }
}

Integer power(long q, unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), k);
  return r;
}

}  // namespace

TEST_CASE("weight counting matches brute force") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> entry(-7, 7), mod(1, 6), q(1, 5);
  std::uniform_int_distribution<std::size_t> l(1, 5), k(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    WeightConstraintSystem sys;
    sys.l = l(rng);
    sys.modulus = mod(rng);
    sys.q = q(rng);
    sys.W = IntMatrix(k(rng), sys.l);
    for (std::size_t i = 0; i < sys.W.rows(); ++i)
      for (std::size_t j = 0; j < sys.l; ++j) sys.W(i, j) = entry(rng);
    Integer expected = brute_count(sys);
    CHECK(count_weights(sys) == expected);
    CHECK(Integer(static_cast<unsigned long>(enumerate_weights(sys, 1u << 20).size())) == expected);
  }
}

TEST_CASE("enumeration is lexicographic and respects the limit") {
  WeightConstraintSystem sys{IntMatrix{{1, 2}}, 3, 2, 4};
  auto all = enumerate_weights(sys, 100);
  CHECK(Integer(static_cast<unsigned long>(all.size())) == count_weights(sys));
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& w : all) CHECK((w[0] + 2 * w[1]) % 3 == 0);
  CHECK(enumerate_weights(sys, 2).size() == 2);
  CHECK(enumerate_weights(sys, 0).empty());
}

TEST_CASE("worked example parameterization") {
  WorkedExample ex = worked_example();
  RootDatum d = validate_root_datum(ex.A, ex.Acheck);
  for (long q : {2, 3, 4, 5, 7, 8}) {
    ParamSummary ps = parameterize(d, validate_frobenius(d, ex.F0, Integer(q)));
    Integer a = q % 3 == 2 ? Integer((power(q, 7) + 2 * q) / 3) : power(q, 7);
    CHECK(ps.countA == a);
    CHECK(ps.setB.order() == (q % 3 == 2 ? 3 : 1));
    CHECK(ps.setC.order() == q - 1);
    CHECK(ps.total == ps.countA * ps.setB.order() * ps.setC.order());
  }
  ParamSummary two = parameterize(d, validate_frobenius(d, ex.F0, Integer(2)));
  CHECK(two.countA == 44);
  CHECK(two.total == 132);
  CHECK_THROWS_AS(parameterize(d, validate_frobenius(d, ex.F0)), ValidationError);
}

TEST_CASE("GL family") {
  for (std::size_t n = 2; n <= 4; ++n) {
    IntMatrix a(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      a(i, i) = 1;
      a(i, i + 1) = -1;
    }
    RootDatum gl = validate_root_datum(a, a);
    for (long q : {2, 3, 5, 9}) {
      ParamSummary ps = parameterize(gl, validate_frobenius(gl, IntMatrix::identity(n), Integer(q)));
      CHECK(ps.countA == power(q, n - 1));
      CHECK(ps.setB.is_trivial());
      CHECK(ps.setC.order() == q - 1);
    }
  }
}

TEST_CASE("semisimple class counts of small groups") {
  auto count = [](char t, std::size_t l, const std::string& iso, int eps, long q) {
    SimpleDatum sd = build_simple_datum(make_spec(t, l, iso, eps, Integer(q)));
    return semisimple_class_count(sd.datum, validate_frobenius(sd.datum, sd.F0, Integer(q)));
  };
  CHECK(count('B', 2, "adjoint", 1, 3) == 12);
  CHECK(count('D', 4, "adjoint", 1, 3) == 108);
  CHECK(count('E', 6, "adjoint", 1, 4) == 4128);
  CHECK(count('C', 3, "adjoint", 1, 3) == 30);
  CHECK(count('A', 1, "adjoint", 1, 5) == 6);
  CHECK(count('A', 1, "sc", 1, 5) == 5);
}

TEST_CASE("simply connected groups have q^l classes") {
  for (auto [type, l] : std::vector<std::pair<char, std::size_t>>{{'G', 2}, {'F', 4}, {'E', 8}}) {
    RootDatum d = standard_datum(type, l, Isogeny::SimplyConnected);
    CHECK(semisimple_class_count(d, validate_frobenius(d, IntMatrix::identity(l), Integer(3))) ==
          power(3, l));
  }
}
