#include "doctest.h"

#include "liereps/error.hpp"
#include "liereps/rootdata.hpp"

#include <set>

using namespace liereps;

namespace {

const std::vector<std::pair<char, std::size_t>> kTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3},
    {'C', 4}, {'D', 4}, {'D', 5}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

std::size_t expected_roots(char type, std::size_t l) {
  switch (type) {
    case 'A': return l * (l + 1);
    case 'B':
    case 'C': return 2 * l * l;
    case 'D': return 2 * l * (l - 1);
    case 'E': return l == 6 ? 72 : l == 7 ? 126 : 240;
    case 'F': return 48;
    default: return 12;
  }
}

IntMatrix permuted(const IntMatrix& c, const std::vector<std::size_t>& perm) {
  IntMatrix out(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) out(perm[i], perm[j]) = c(i, j);
  return out;
}

}  // namespace

TEST_CASE("standard Cartan matrices use the expected numbering") {
  CHECK(cartan_matrix('B', 3)(0, 1) == -2);
  CHECK(cartan_matrix('B', 3)(1, 0) == -1);
  CHECK(cartan_matrix('C', 3)(0, 1) == -1);
  CHECK(cartan_matrix('C', 3)(1, 0) == -2);
  CHECK(cartan_matrix('G', 2) == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(cartan_matrix('F', 4)(2, 1) == -2);
  IntMatrix d4 = cartan_matrix('D', 4);
  CHECK(d4(0, 2) == -1);
  CHECK(d4(1, 2) == -1);
  CHECK(d4(2, 3) == -1);
  CHECK(d4(0, 1) == 0);
  IntMatrix e6 = cartan_matrix('E', 6);
  CHECK(e6(1, 3) == -1);
  CHECK(e6(0, 2) == -1);
  CHECK(e6(1, 2) == 0);
  CHECK_FALSE(is_legal_type('D', 3));
  CHECK_FALSE(is_legal_type('E', 9));
  CHECK(is_legal_type('B', 2));
}

TEST_CASE("classification of every simple type, also after relabelling the nodes") {
  for (auto [type, l] : kTypes) {
    IntMatrix c = cartan_matrix(type, l);
    CHECK(satisfies_cartan_axioms(c));
    auto cls = classify_cartan(c);
    REQUIRE(cls.components.size() == 1);
    CHECK(cls.components[0].label() == std::string(1, type) + std::to_string(l));
    std::vector<std::size_t> perm(l);
    for (std::size_t i = 0; i < l; ++i) perm[i] = (i * 3 + 1) % l;
    if (std::set<std::size_t>(perm.begin(), perm.end()).size() == l) {
      std::string want = type == 'C' && l == 2 ? "B2" : std::string(1, type) + std::to_string(l);
      CHECK(classify_cartan(permuted(c, perm)).str() == want);
    }
  }
}

TEST_CASE("root systems have the right size") {
  for (auto [type, l] : kTypes) {
    for (Isogeny iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      RootDatum d = standard_datum(type, l, iso);
      RootSystem rs = enumerate_roots(d);
      CHECK(rs.roots.size() == expected_roots(type, l));
      CHECK(recover_cartan_from_roots(d, rs) == d.cartan());
    }
  }
  CHECK(enumerate_roots(standard_datum('G', 2, Isogeny::SimplyConnected)).roots.size() == 12);
}

TEST_CASE("root datum validation") {
  CHECK_THROWS_AS(validate_root_datum(IntMatrix{{1, 0}}, IntMatrix{{3, 0}}), ValidationError);
  CHECK_THROWS_AS(validate_root_datum(IntMatrix{{1, 0}}, IntMatrix{{1, 0}, {0, 1}}),
                  ValidationError);
  CHECK_THROWS_AS(validate_root_datum(IntMatrix{{1, 0}, {2, 0}}, IntMatrix{{2, 0}, {0, 1}}),
                  ValidationError);
  RootDatum gl2 = validate_root_datum(IntMatrix{{1, -1}}, IntMatrix{{1, -1}});
  CHECK(gl2.rank() == 2);
  CHECK(gl2.ss_rank() == 1);
  CHECK(gl2.classification().str() == "A1");
  RootDatum t = torus_datum(3);
  CHECK(t.ss_rank() == 0);
  RootDatum prod = direct_product(standard_datum('A', 1, Isogeny::Adjoint),
                                  standard_datum('G', 2, Isogeny::SimplyConnected));
  CHECK(prod.classification().str() == "A1+G2");
}

TEST_CASE("quotients by central subgroups") {
  RootDatum sc = standard_datum('A', 2, Isogeny::SimplyConnected);
  std::vector<TorsionVector> z{TorsionVector::from_fractions({1, 2}, 3)};
  QuotientDatum q = quotient_datum(sc, z);
  CHECK(abs(determinant(q.basis)) == 3);
  CHECK(q.datum.cartan() == sc.cartan());
  CHECK(center_of(q.datum).finite_part.is_trivial());
  CHECK(smith_normal_form(q.datum.A()).diagonal() == IntVector{1, 1});
  CHECK_THROWS_AS(quotient_datum(sc, z, Integer(3)), ValidationError);
  CHECK(center_of(quotient_datum(sc, z, Integer(2)).datum).finite_part.is_trivial());
}

TEST_CASE("Frobenius validation") {
  RootDatum a2 = standard_datum('A', 2, Isogeny::SimplyConnected);
  FrobeniusDatum f = validate_frobenius(a2, IntMatrix{{0, 1}, {1, 0}}, Integer(4));
  CHECK(cycle_string(f.sigma) == "(1,2)");
  CHECK(f.order == 2);
  CHECK(*f.p == 2);
  CHECK(twisted_components(a2, f).labels == std::vector<std::string>{"^2A2(q)"});
  CHECK_THROWS_AS(validate_frobenius(a2, IntMatrix{{1, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(validate_frobenius(a2, IntMatrix::identity(2), Integer(6)), ValidationError);
  CHECK(cycle_string(validate_frobenius(a2, IntMatrix::identity(2)).sigma) == "()");
  CHECK(*prime_of_power(Integer(125)) == 5);
  CHECK_FALSE(prime_of_power(Integer(12)).has_value());
  CHECK_FALSE(prime_of_power(Integer(1)).has_value());
}

TEST_CASE("a graph automorphism of order 3 gives triality") {
  RootDatum d4 = standard_datum('D', 4, Isogeny::Adjoint);
  IntMatrix f0(4, 4);
  // Adjoint: characters are root coordinates, so F0 permutes rows 1 -> 2 -> 4 -> 1.
  f0(0, 1) = 1;
  f0(1, 3) = 1;
  f0(3, 0) = 1;
  f0(2, 2) = 1;
  FrobeniusDatum f = validate_frobenius(d4, f0, Integer(2));
  CHECK(f.order == 3);
  CHECK(twisted_components(d4, f).labels == std::vector<std::string>{"^3D4(q)"});
}
