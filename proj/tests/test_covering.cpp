#include "doctest.h"

#include "liereps/acceptance.hpp"
#include "liereps/covering.hpp"
#include "liereps/error.hpp"

using namespace liereps;

TEST_CASE("worked example covering") {
  WorkedExample ex = worked_example();
  RootDatum d = validate_root_datum(ex.A, ex.Acheck);
  CoveringData cov = build_covering(d, validate_frobenius(d, ex.F0));
  CHECK(cov.modulus_m == 6);
  CHECK(cov.tilde_datum.A() == hstack(d.cartan().transpose(), IntMatrix(7, 1)));
  CHECK((cov.B * d.A().transpose()).is_zero());
  CHECK(cov.tilde_F0.transpose() * cov.Mtr() == cov.Mtr() * ex.F0.transpose());
  CHECK(kernel_of_covering(cov).order() == 18);
  CHECK(kernel_of_covering(cov, Integer(2)).order() == 9);
  CHECK(kernel_of_covering(cov, Integer(3)).order() == 2);
}

TEST_CASE("residue classes of the worked example") {
  WorkedExample ex = worked_example();
  RootDatum d = validate_root_datum(ex.A, ex.Acheck);
  auto classes = residue_analysis(build_covering(d, validate_frobenius(d, ex.F0)));
  REQUIRE(classes.size() == 6);
  CHECK(classes[0].skipped);
  CHECK_FALSE(classes[1].p.has_value());
  CHECK(*classes[2].p == 2);
  CHECK(*classes[3].p == 3);
  CHECK(*classes[4].p == 2);
  CHECK_FALSE(classes[5].p.has_value());
  for (std::size_t c = 1; c < 6; ++c)
    CHECK(classes[c].derived_fixed.order() == (c == 2 || c == 5 ? 3 : 1));
}

TEST_CASE("forced primes") {
  CHECK_FALSE(forced_prime(5, 6).has_value());
  CHECK(*forced_prime(4, 6) == 2);
  CHECK(*forced_prime(9, 12) == 3);
  CHECK_THROWS_AS(forced_prime(6, 12), ValidationError);
  // q = 2 mod 4 holds only for q = 2 itself, q = 0 mod 4 for powers of 2.
  CHECK(*forced_prime(2, 4) == 2);
  CHECK(*forced_prime(0, 4) == 2);
  // 9 mod 18: gcd 9, powers of 3 are 3, 9, 27 = 9, ...: realizable.
  CHECK(*forced_prime(9, 18) == 3);
  // 6 mod 9: gcd 3, but 3^k mod 9 is 3 or 0.
  CHECK_THROWS_AS(forced_prime(6, 9), ValidationError);
}

TEST_CASE("adjoint A1 has modulus 2") {
  RootDatum d = standard_datum('A', 1, Isogeny::Adjoint);
  CoveringData cov = build_covering(d, validate_frobenius(d, IntMatrix::identity(1)));
  CHECK(cov.modulus_m == 2);
  CHECK(kernel_of_covering(cov).structure() == "Z/2");
  CHECK(kernel_of_covering(cov, Integer(2)).is_trivial());
}

TEST_CASE("simply connected groups have trivial kernel") {
  for (auto [type, l] : std::vector<std::pair<char, std::size_t>>{{'A', 3}, {'E', 6}, {'G', 2}}) {
    RootDatum d = standard_datum(type, l, Isogeny::SimplyConnected);
    CoveringData cov = build_covering(d, validate_frobenius(d, IntMatrix::identity(l)));
    CHECK(cov.modulus_m == 1);
    CHECK(kernel_of_covering(cov).is_trivial());
  }
}

TEST_CASE("GL2 derived split") {
  RootDatum gl2 = validate_root_datum(IntMatrix{{1, -1}}, IntMatrix{{1, -1}});
  FrobeniusDatum f = validate_frobenius(gl2, IntMatrix::identity(2), Integer(5));
  DerivedSplit s = derived_split(gl2, f);
  CHECK(abs(determinant(s.D)) == 1);
  CHECK((gl2.Acheck() * s.D).block(0, 1, 1, 1).is_zero());
  CHECK(s.derived_datum.classification().str() == "A1");
  CHECK(s.quotient_F0 == IntMatrix{{1}});
  CHECK(fixed_torus_structure(s.quotient_F0, 5).order() == 4);
  CoveringData cov = build_covering(gl2, f);
  CHECK(cov.modulus_m == 2);
  CHECK(derived_intersection_fixed(cov, QClass::concrete(5), f.p).is_trivial());
}

TEST_CASE("a twisted central torus gives q + 1 points") {
  RootDatum t = torus_datum(1);
  FrobeniusDatum f = validate_frobenius(t, IntMatrix{{-1}}, Integer(7));
  CHECK(fixed_torus_structure(derived_split(t, f).quotient_F0, 7).order() == 8);
}
