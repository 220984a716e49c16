#include "doctest.h"
#include "support.hpp"

#include "liereps/error.hpp"
#include "liereps/rootdata.hpp"
#include "liereps/torus.hpp"

#include <set>

using namespace liereps;

namespace {

TorsionVector tv(std::initializer_list<Rational> xs) { return TorsionVector(std::vector<Rational>(xs)); }

/// Brute-force group closure of a generator set, for small groups.
std::set<TorsionVector> closure(std::size_t r, const std::vector<TorsionVector>& gens) {
  std::set<TorsionVector> seen{TorsionVector(r)};
  std::vector<TorsionVector> frontier{TorsionVector(r)};
  while (!frontier.empty()) {
    TorsionVector t = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      TorsionVector s = t + g;
      if (seen.insert(s).second) frontier.push_back(s);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("torsion vectors reduce into [0,1)") {
  TorsionVector t = tv({Rational(-1, 3), Rational(5, 2)});
  CHECK(t[0] == Rational(2, 3));
  CHECK(t[1] == Rational(1, 2));
  CHECK(t.order() == 6);
  CHECK((Integer(6) * t).is_zero());
  CHECK(t.scaled(6) == IntVector{4, 3});
  CHECK(evaluate_character(IntVector{3, 2}, t) == 0);
}

TEST_CASE("finite abelian group from generators") {
  std::vector<TorsionVector> gens{tv({Rational(1, 2), 0}), tv({0, Rational(1, 4)}),
                                  tv({Rational(1, 2), Rational(1, 2)})};
  FiniteAbelianGroup g = FiniteAbelianGroup::generated_by(2, gens);
  CHECK(g.invariant_factors() == IntVector{2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.structure() == "Z/2 x Z/4");
  auto elems = g.elements();
  CHECK(elems.size() == 8);
  CHECK(std::set<TorsionVector>(elems.begin(), elems.end()) == closure(2, gens));
  for (const auto& e : elems) CHECK(g.element(g.coordinates(e)) == e);
  CHECK_FALSE(g.contains(tv({Rational(1, 3), 0})));
}

TEST_CASE("group structure agrees with closure on random generators") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(0, 11);
  std::uniform_int_distribution<long> den(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 3;
    std::vector<TorsionVector> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < r; ++i) c.emplace_back(num(rng), den(rng));
      gens.push_back(TorsionVector(c));
    }
    FiniteAbelianGroup g = FiniteAbelianGroup::generated_by(r, gens);
    auto brute = closure(r, gens);
    CHECK(g.order() == brute.size());
    for (std::size_t i = 0; i < g.generators().size(); ++i)
      CHECK(g.generators()[i].order() == g.invariant_factors()[i]);
    for (const auto& t : brute) CHECK(g.contains(t));
  }
}

TEST_CASE("solve_torsion_system") {
  FiniteAbelianGroup k = solve_torsion_system(IntMatrix{{2, -1}, {-1, 2}});
  CHECK(k.structure() == "Z/3");
  CHECK(solve_torsion_system(IntMatrix{{2, -1}, {-1, 2}}, Integer(3)).is_trivial());
  FiniteAbelianGroup d4 = solve_torsion_system(cartan_matrix('D', 4));
  CHECK(d4.structure() == "Z/2 x Z/2");
  CHECK(solve_torsion_system(cartan_matrix('D', 5)).structure() == "Z/4");
  CHECK(solve_torsion_system(cartan_matrix('E', 6), Integer(3)).is_trivial());
}

TEST_CASE("solutions of t M^tr = 0 have order |det M| for random nonsingular M") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 4;
    IntMatrix m = testing::random_matrix(rng, n, n, 4);
    if (determinant(m) == 0) continue;
    FiniteAbelianGroup g = solve_torsion_system(m);
    CHECK(g.order() == abs(determinant(m)));
    for (const auto& t : g.generators()) CHECK(t.times(m.transpose()).is_zero());
    CHECK(g.invariant_factors() == [&] {
      IntVector f;
      for (const auto& d : smith_normal_form(m).diagonal())
        if (d != 1) f.push_back(abs(d));
      return f;
    }());
  }
}

TEST_CASE("fixed torus points for r = 1, F0 = (1), q = 4") {
  CHECK(fixed_torus_structure(IntMatrix{{1}}, 4).structure() == "Z/3");
  CHECK(fixed_torus_structure(IntMatrix{{-1}}, 4).structure() == "Z/5");
  CHECK(fixed_torus_structure(IntMatrix{{0, 1}, {1, 0}}, 3).structure() == "Z/8");
}

TEST_CASE("fixed subgroup: enumeration and congruences agree and Lang holds") {
  const std::vector<IntMatrix> frobenius = {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}},
                                            IntMatrix{{0, -1}, {1, -1}}, IntMatrix{{-1, 0}, {0, -1}}};
  for (const auto& f0 : frobenius)
    for (long q : {2, 3, 4, 5, 7, 8, 9}) {
      FiniteAbelianGroup g = FiniteAbelianGroup::generated_by(
          2, std::vector<TorsionVector>{tv({Rational(1, 12), 0}), tv({0, Rational(1, 12)})});
      QClass qc = QClass::concrete(q);
      FiniteAbelianGroup a = fixed_subgroup_by_enumeration(g, qc, f0);
      FiniteAbelianGroup b = fixed_subgroup_by_congruences(g, qc, f0);
      CHECK(a == b);
      CHECK(g.order() == a.order() * lang_image(g, qc, f0).order());
      for (const auto& t : a.generators()) CHECK(frobenius_action(t, qc, f0) == t);
    }
}

TEST_CASE("residue classes stand in for q only on small enough elements") {
  QClass c = QClass::residue(2, 6);
  CHECK(c.scale(tv({Rational(1, 3)})) == tv({Rational(2, 3)}));
  CHECK_THROWS_AS(c.scale(tv({Rational(1, 4)})), ValidationError);
}

TEST_CASE("center of a root datum") {
  CenterStructure z = center_of(standard_datum('A', 3, Isogeny::SimplyConnected));
  CHECK(z.finite_part.structure() == "Z/4");
  CHECK(z.torus_rank == 0);
  CHECK(center_of(standard_datum('A', 3, Isogeny::SimplyConnected), Integer(2)).finite_part.is_trivial());
  CHECK(center_of(standard_datum('A', 3, Isogeny::Adjoint)).finite_part.is_trivial());
  CHECK(center_of(torus_datum(2)).torus_rank == 2);
  CHECK(p_prime_part(12, Integer(2)) == 3);
  CHECK(p_prime_part(12, std::nullopt) == 12);
}
