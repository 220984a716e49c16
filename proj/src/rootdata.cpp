#include "liereps/rootdata.hpp"

#include "liereps/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace liereps {

namespace {

constexpr std::size_t kRootCap = 2000;

void add_bond(IntMatrix& c, std::size_t i, std::size_t j, long cij, long cji) {
  c(i, j) = cij;
  c(j, i) = cji;
}

IntMatrix chain(std::size_t l) {
  IntMatrix c = 2 * IntMatrix::identity(l);
  for (std::size_t i = 0; i + 1 < l; ++i) add_bond(c, i, i + 1, -1, -1);
  return c;
}

// Order in which standard nodes are matched: breadth first from node 1, so
// every node after the first has an already placed neighbour.
std::vector<std::size_t> bfs_order(const IntMatrix& c) {
  const std::size_t n = c.rows();
  std::vector<std::size_t> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && c(order[k], j) != 0) {
        seen[j] = true;
        order.push_back(j);
      }
  return order;
}

// Finds nodes[k] (standard node k -> input node) with matching Cartan entries.
bool match_component(const IntMatrix& c, const std::vector<std::size_t>& comp,
                     const IntMatrix& standard, std::vector<std::size_t>& nodes) {
  const std::size_t n = comp.size();
  std::vector<std::size_t> order = bfs_order(standard);
  std::vector<std::size_t> assigned(n, n);  // standard node -> index into comp
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t k = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < depth && ok; ++prev) {
        std::size_t j = order[prev];
        std::size_t other = comp[assigned[j]];
        ok = c(comp[cand], other) == standard(k, j) && c(other, comp[cand]) == standard(j, k);
      }
      if (!ok) continue;
      used[cand] = true;
      assigned[k] = cand;
      if (place(depth + 1)) return true;
      used[cand] = false;
    }
    return false;
  };

  if (!place(0)) return false;
  nodes.resize(n);
  for (std::size_t k = 0; k < n; ++k) nodes[k] = comp[assigned[k]];
  return true;
}

std::vector<char> candidate_types(std::size_t n) {
  std::vector<char> out;
  for (char t : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
    if (is_legal_type(t, n)) out.push_back(t);
  return out;
}

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

}  // namespace

std::string CartanComponent::label() const {
  return std::string(1, type) + std::to_string(rank);
}

std::string CartanClassification::str() const {
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += "+";
    s += c.label();
  }
  return s;
}

bool is_legal_type(char type, std::size_t l) {
  switch (type) {
    case 'A': return l >= 1;
    case 'B': return l >= 2;
    case 'C': return l >= 3;
    case 'D': return l >= 4;
    case 'E': return l >= 6 && l <= 8;
    case 'F': return l == 4;
    case 'G': return l == 2;
    default: return false;
  }
}

IntMatrix cartan_matrix(char type, std::size_t l) {
  if (!is_legal_type(type, l))
    throw ValidationError(std::string("no simple type ") + type + std::to_string(l));
  IntMatrix c = chain(l);
  switch (type) {
    case 'A':
      break;
    case 'B':
      add_bond(c, 0, 1, -2, -1);
      break;
    case 'C':
      add_bond(c, 0, 1, -1, -2);
      break;
    case 'D':
      c = 2 * IntMatrix::identity(l);
      add_bond(c, 0, 2, -1, -1);
      add_bond(c, 1, 2, -1, -1);
      for (std::size_t i = 2; i + 1 < l; ++i) add_bond(c, i, i + 1, -1, -1);
      break;
    case 'E':
      c = 2 * IntMatrix::identity(l);
      add_bond(c, 0, 2, -1, -1);
      add_bond(c, 1, 3, -1, -1);
      for (std::size_t i = 2; i + 1 < l; ++i) add_bond(c, i, i + 1, -1, -1);
      break;
    case 'F':
      add_bond(c, 1, 2, -1, -2);
      break;
    case 'G':
      add_bond(c, 0, 1, -1, -3);
      break;
  }
  return c;
}

bool satisfies_cartan_axioms(const IntMatrix& c) {
  if (!c.is_square()) return false;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    if (c(i, i) != 2) return false;
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) return false;
      if ((c(i, j) == 0) != (c(j, i) == 0)) return false;
    }
  }
  return true;
}

CartanClassification classify_cartan(const IntMatrix& c) {
  if (!satisfies_cartan_axioms(c)) throw ValidationError("Cartan axioms fail");
  const std::size_t l = c.rows();
  std::vector<bool> seen(l, false);
  CartanClassification out;
  for (std::size_t start = 0; start < l; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t j = 0; j < l; ++j)
        if (!seen[j] && c(comp[k], j) != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());

    CartanComponent found;
    bool matched = false;
    for (char t : candidate_types(comp.size())) {
      if (match_component(c, comp, cartan_matrix(t, comp.size()), found.nodes)) {
        found.type = t;
        found.rank = comp.size();
        found.transposed = t == 'B' && comp.size() == 2 && found.nodes[0] > found.nodes[1];
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::string idx;
      for (auto i : comp) idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
      throw ValidationError("Cartan component {" + idx + "} matches no Dynkin diagram");
    }
    out.components.push_back(std::move(found));
  }
  return out;
}

RootDatum validate_root_datum(const IntMatrix& a, const IntMatrix& acheck) {
  if (a.rows() != acheck.rows() || a.cols() != acheck.cols())
    throw ValidationError("A and Acheck must have the same shape");
  if (a.rows() > a.cols())
    throw ValidationError("more simple roots than the rank of the character lattice");
  if (rank(a) != a.rows()) throw ValidationError("rows of A are linearly dependent");
  if (rank(acheck) != acheck.rows()) throw ValidationError("rows of Acheck are linearly dependent");
  RootDatum d;
  d.a_ = a;
  d.acheck_ = acheck;
  d.cartan_ = acheck * a.transpose();
  if (!satisfies_cartan_axioms(d.cartan_))
    throw ValidationError("C = Acheck * A^tr violates the Cartan axioms: " + d.cartan_.str());
  d.classification_ = classify_cartan(d.cartan_);
  return d;
}

RootDatum standard_datum(char type, std::size_t l, Isogeny isogeny) {
  IntMatrix c = cartan_matrix(type, l);
  if (isogeny == Isogeny::SimplyConnected) return validate_root_datum(c.transpose(), IntMatrix::identity(l));
  return validate_root_datum(IntMatrix::identity(l), c);
}

RootDatum torus_datum(std::size_t r) {
  return validate_root_datum(IntMatrix(0, r), IntMatrix(0, r));
}

RootDatum direct_product(const RootDatum& d1, const RootDatum& d2) {
  return validate_root_datum(block_diagonal(d1.A(), d2.A()),
                             block_diagonal(d1.Acheck(), d2.Acheck()));
}

RootSystem enumerate_roots(const RootDatum& d) {
  const std::size_t l = d.ss_rank();
  RootSystem rs;
  std::map<IntVector, std::size_t> index;
  auto add = [&](IntVector root, IntVector coroot) {
    if (index.count(root)) return;
    if (rs.roots.size() >= kRootCap)
      throw ValidationError("root closure exceeds " + std::to_string(kRootCap) + " roots");
    index.emplace(root, rs.roots.size());
    rs.roots.push_back(std::move(root));
    rs.coroots.push_back(std::move(coroot));
  };
  for (std::size_t i = 0; i < l; ++i) add(d.A().row(i), d.Acheck().row(i));
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    for (std::size_t i = 0; i < l; ++i) {
      IntVector alpha = d.A().row(i);
      IntVector alpha_check = d.Acheck().row(i);
      IntVector x = rs.roots[k];
      IntVector y = rs.coroots[k];
      Integer pair_x = dot(x, alpha_check);
      Integer pair_y = dot(alpha, y);
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] -= pair_x * alpha[j];
        y[j] -= pair_y * alpha_check[j];
      }
      add(std::move(x), std::move(y));
    }
  }
  return rs;
}

IntMatrix recover_cartan_from_roots(const RootDatum& d, const RootSystem& rs) {
  const std::size_t l = d.ss_rank();
  std::map<IntVector, bool> is_root;
  for (const auto& r : rs.roots) is_root[r] = true;
  IntMatrix c = 2 * IntMatrix::identity(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      IntVector ai = d.A().row(i);
      IntVector aj = d.A().row(j);
      IntMatrix plane = IntMatrix::from_rows({ai, aj}, d.rank());
      std::size_t in_span = 0;
      for (const auto& r : rs.roots)
        if (rank(vstack(plane, IntMatrix::from_rows({r}, d.rank()))) == 2) ++in_span;
      long product;
      switch (in_span) {
        case 4: product = 0; break;
        case 6: product = 1; break;
        case 8: product = 2; break;
        case 12: product = 3; break;
        default:
          throw ValidationError("rank-2 subsystem with " + std::to_string(in_span) + " roots");
      }
      // alpha_i-string through alpha_j: alpha_j + k alpha_i for k = 0..p.
      long p = 0;
      IntVector v = aj;
      for (;;) {
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += ai[t];
        if (!is_root.count(v)) break;
        ++p;
      }
      if (product == 0 && p != 0) throw InternalError("root string inconsistent with count");
      c(i, j) = -p;
    }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Integer prod = c(i, j) * c(j, i);
      if (prod > 3) throw InternalError("root strings give an impossible bond");
    }
  return c;
}

IntMatrix character_sublattice(std::size_t r, const std::vector<TorsionVector>& gens) {
  if (gens.empty()) return IntMatrix::identity(r);
  Integer n = 1;
  for (const auto& t : gens) {
    if (t.size() != r) throw ValidationError("subgroup generator has wrong length");
    Integer o = t.order();
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), o.get_mpz_t());
  }
  IntMatrix v(r, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    IntVector s = gens[j].scaled(n);
    for (std::size_t i = 0; i < r; ++i) v(i, j) = s[i];
  }
  return congruence_solutions(v, n);
}

QuotientDatum quotient_datum(const RootDatum& d, const std::vector<TorsionVector>& gens,
                             const std::optional<Integer>& p) {
  for (const auto& t : gens) {
    if (t.size() != d.rank()) throw ValidationError("subgroup generator has wrong length");
    for (std::size_t i = 0; i < d.ss_rank(); ++i)
      if (evaluate_character(d.A().row(i), t) != 0)
        throw ValidationError("generator " + t.str() + " is not central");
    if (p && t.order() % *p == 0)
      throw ValidationError("generator " + t.str() + " has order divisible by p");
  }
  IntMatrix basis = character_sublattice(d.rank(), gens);
  IntMatrix a = (RatMatrix(d.A()) * rational_inverse(basis)).to_integer();
  IntMatrix acheck = d.Acheck() * basis.transpose();
  return {validate_root_datum(a, acheck), basis};
}

IntMatrix transport_frobenius(const IntMatrix& f0, const IntMatrix& basis) {
  RatMatrix f = RatMatrix(basis) * RatMatrix(f0) * rational_inverse(basis);
  if (!f.is_integral()) throw ValidationError("Frobenius does not preserve the character sublattice");
  return f.to_integer();
}

std::optional<Integer> prime_of_power(const Integer& q) {
  if (q < 2) return std::nullopt;
  const std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (std::size_t k = 1; k <= bits; ++k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) == 0) continue;
    if (root >= 2 && is_probable_prime(root)) return root;
  }
  return std::nullopt;
}

FrobeniusDatum validate_frobenius(const RootDatum& d, const IntMatrix& f0,
                                  const std::optional<Integer>& q) {
  const std::size_t r = d.rank();
  const std::size_t l = d.ss_rank();
  if (!f0.is_square() || f0.rows() != r)
    throw ValidationError("F0 must be " + std::to_string(r) + "x" + std::to_string(r));
  FrobeniusDatum f;
  f.F0 = f0;
  f.order = matrix_order(f0, 24 * std::max<std::size_t>(r, 1));

  IntMatrix af = d.A() * f0;
  f.sigma.assign(l, l);
  std::vector<bool> hit(l, false);
  for (std::size_t i = 0; i < l; ++i) {
    IntVector row = af.row(i);
    for (std::size_t j = 0; j < l; ++j)
      if (!hit[j] && row == d.A().row(j)) {
        f.sigma[i] = j;
        hit[j] = true;
        break;
      }
    if (f.sigma[i] == l)
      throw ValidationError("A * F0 is not a row permutation of A (row " + std::to_string(i + 1) +
                            ")");
  }
  IntMatrix ft = f0.transpose();
  for (std::size_t i = 0; i < l; ++i) {
    IntVector image = d.Acheck().row(f.sigma[i]) * ft;
    if (image != d.Acheck().row(i))
      throw ValidationError("F0 is not compatible with the coroots: P_sigma * Acheck * F0^tr != Acheck");
  }
  if (q) {
    f.p = prime_of_power(*q);
    if (!f.p) throw ValidationError("q = " + q->get_str() + " is not a prime power");
    f.q = q;
  }
  return f;
}

std::string cycle_string(const std::vector<std::size_t>& sigma) {
  std::string s;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i] || sigma[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      if (j != i) s += ",";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

TwistedComponents twisted_components(const RootDatum& d, const FrobeniusDatum& f) {
  const auto& comps = d.classification().components;
  std::vector<std::size_t> owner(d.ss_rank());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto node : comps[c].nodes) owner[node] = c;
  std::vector<std::size_t> next(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    next[c] = owner[f.sigma[comps[c].nodes.front()]];
    for (auto node : comps[c].nodes)
      if (owner[f.sigma[node]] != next[c])
        throw InternalError("sigma does not permute the Cartan components");
  }

  TwistedComponents out;
  out.torus_rank = d.rank() - d.ss_rank();
  std::vector<bool> seen(comps.size(), false);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (seen[c]) continue;
    std::size_t k = 0;
    for (std::size_t x = c; !seen[x]; x = next[x]) {
      seen[x] = true;
      ++k;
    }
    // sigma^k on the nodes of component c, and its order.
    std::vector<std::size_t> power(d.ss_rank());
    std::iota(power.begin(), power.end(), 0);
    for (std::size_t s = 0; s < k; ++s)
      for (auto& v : power) v = f.sigma[v];
    std::size_t t = 1;
    for (auto node : comps[c].nodes) {
      std::size_t len = 1;
      for (std::size_t x = power[node]; x != node; x = power[x]) ++len;
      t = std::lcm(t, len);
    }
    std::string label = (t > 1 ? "^" + std::to_string(t) : std::string()) + comps[c].label();
    label += k > 1 ? "(q^" + std::to_string(k) + ")" : "(q)";
    out.labels.push_back(label);
  }
  return out;
}

}  // namespace liereps
