#include "liereps/catalog.hpp"

#include "liereps/error.hpp"

#include <atomic>
#include <cstdint>

namespace liereps {

namespace {

std::atomic<bool> g_corrupt{false};

Integer pow(const Integer& q, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), k);
  return r;
}

Integer mod(const Integer& a, long m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

TorsionVector fractions(const std::vector<long>& numerators, const Integer& m) {
  IntVector v(numerators.begin(), numerators.end());
  return TorsionVector::from_fractions(v, m);
}

std::string isogeny_name(const SimpleSpec& s) {
  switch (s.isogeny) {
    case IsogenyKind::SimplyConnected: return "sc";
    case IsogenyKind::Adjoint: return "adjoint";
    case IsogenyKind::Intermediate: return "e=" + s.e.get_str();
    case IsogenyKind::SO: return "SO";
    case IsogenyKind::HSpin: return "HSpin";
  }
  return "?";
}

bool is_sc(const SimpleSpec& s) { return s.isogeny == IsogenyKind::SimplyConnected; }
bool is_adjoint(const SimpleSpec& s) { return s.isogeny == IsogenyKind::Adjoint; }

// Coefficients of the D_l patterns: z for odd l, z1 and z2 for even l.
std::vector<long> d_odd_pattern(std::size_t l) {
  std::vector<long> v(l, 0);
  v[0] = 1;
  v[1] = 3;
  for (std::size_t i = 2; i < l; i += 2) v[i] = 2;
  return v;
}

std::vector<long> d_even_z1(std::size_t l) {
  std::vector<long> v(l, 0);
  v[0] = 1;
  for (std::size_t i = 3; i < l; i += 2) v[i] = 1;
  return v;
}

std::vector<long> d_even_z2(std::size_t l) {
  std::vector<long> v(l, 0);
  for (std::size_t i = 1; i < l; i += 2) v[i] = 1;
  return v;
}

std::vector<long> c_pattern(std::size_t l) {
  std::vector<long> v(l);
  for (std::size_t i = 0; i < l; ++i) v[i] = static_cast<long>(l - i);
  return v;
}

std::string linear_form(const std::vector<long>& coeffs, long m) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    long c = ((coeffs[i] % m) + m) % m;
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += "l" + std::to_string(i + 1);
  }
  return (s.empty() ? "0" : s) + " = 0 mod " + std::to_string(m);
}

}  // namespace

std::string SimpleSpec::str() const {
  return std::string(1, type) + std::to_string(l) + " " + isogeny_name(*this) +
         " eps=" + std::to_string(epsilon) + " q=" + q.get_str();
}

SimpleSpec make_spec(char type, std::size_t l, const std::string& isogeny, int epsilon,
                     const Integer& q) {
  SimpleSpec s;
  s.type = type;
  s.l = l;
  s.epsilon = epsilon;
  s.q = q;
  if (isogeny == "sc") {
    s.isogeny = IsogenyKind::SimplyConnected;
    s.e = static_cast<unsigned long>(l + 1);
  } else if (isogeny == "adjoint" || isogeny == "ad") {
    s.isogeny = IsogenyKind::Adjoint;
    s.e = 1;
  } else if (isogeny == "SO") {
    s.isogeny = IsogenyKind::SO;
  } else if (isogeny == "HSpin") {
    s.isogeny = IsogenyKind::HSpin;
  } else if (isogeny.rfind("e=", 0) == 0) {
    if (type != 'A') throw ValidationError("isogeny e=N applies to type A only");
    try {
      s.e = Integer(isogeny.substr(2));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad isogeny index '" + isogeny + "'");
    }
    if (s.e == static_cast<unsigned long>(l + 1)) s.isogeny = IsogenyKind::SimplyConnected;
    else if (s.e == 1) s.isogeny = IsogenyKind::Adjoint;
    else s.isogeny = IsogenyKind::Intermediate;
  } else {
    throw UsageError("unknown isogeny '" + isogeny + "' (expected sc, adjoint, SO, HSpin or e=N)");
  }
  return s;
}

void check_legal(const SimpleSpec& s) {
  if (!is_legal_type(s.type, s.l))
    throw ValidationError(std::string("no simple type ") + s.type + std::to_string(s.l));
  if (s.epsilon != 1 && s.epsilon != -1 && s.epsilon != 3)
    throw ValidationError("epsilon must be 1, -1 or 3");
  if (s.epsilon == 3 && !(s.type == 'D' && s.l == 4))
    throw ValidationError("epsilon = 3 exists only for D4");
  if (s.epsilon == -1 && !((s.type == 'A' && s.l >= 2) || s.type == 'D' || (s.type == 'E' && s.l == 6)))
    throw ValidationError("epsilon = -1 exists only for A_l (l >= 2), D_l and E6");
  if ((s.isogeny == IsogenyKind::SO || s.isogeny == IsogenyKind::HSpin) && s.type != 'D')
    throw ValidationError("SO and HSpin apply to type D only");
  if (s.isogeny == IsogenyKind::HSpin && s.l % 2 != 0)
    throw ValidationError("HSpin requires even rank");
  if (s.isogeny == IsogenyKind::HSpin && s.epsilon != 1)
    throw ValidationError("HSpin admits only Frobenius morphisms with epsilon = 1");
  if (s.isogeny == IsogenyKind::SO && s.epsilon == 3)
    throw ValidationError("SO is not stable under the triality twist");
  if (s.isogeny == IsogenyKind::Intermediate) {
    if (s.type != 'A') throw ValidationError("intermediate isogeny applies to type A only");
    if (s.e < 1 || Integer(static_cast<unsigned long>(s.l + 1)) % s.e != 0)
      throw ValidationError("e must divide l+1");
  }
  if (!prime_of_power(s.q)) throw ValidationError("q = " + s.q.get_str() + " is not a prime power");
}

Integer prime_of(const SimpleSpec& s) {
  auto p = prime_of_power(s.q);
  if (!p) throw ValidationError("q = " + s.q.get_str() + " is not a prime power");
  return *p;
}

std::vector<TorsionVector> center_generators(char type, std::size_t l,
                                             const std::optional<Integer>& p) {
  if (!is_legal_type(type, l))
    throw ValidationError(std::string("no simple type ") + type + std::to_string(l));
  auto pp = [&](long n) { return p_prime_part(Integer(n), p); };
  switch (type) {
    case 'A': {
      Integer m = pp(static_cast<long>(l + 1));
      if (m == 1) return {};
      std::vector<long> v(l);
      for (std::size_t i = 0; i < l; ++i) v[i] = static_cast<long>(i + 1);
      return {fractions(v, m)};
    }
    case 'B': {
      Integer m = pp(2);
      if (m == 1) return {};
      std::vector<long> v(l, 0);
      v[0] = 1;
      return {fractions(v, m)};
    }
    case 'C': {
      Integer m = pp(2);
      if (m == 1) return {};
      return {fractions(c_pattern(l), m)};
    }
    case 'D': {
      if (pp(2) == 1) return {};
      if (l % 2 == 1) return {fractions(d_odd_pattern(l), 4)};
      return {fractions(d_even_z1(l), 2), fractions(d_even_z2(l), 2)};
    }
    case 'E': {
      if (l == 6) {
        Integer m = pp(3);
        if (m == 1) return {};
        return {fractions({1, 0, 2, 0, 1, 2}, m)};
      }
      if (l == 7) {
        Integer m = pp(2);
        if (m == 1) return {};
        return {fractions({0, 1, 0, 0, 1, 0, 1}, m)};
      }
      return {};
    }
    default:
      return {};
  }
}

std::vector<TorsionVector> isogeny_kernel_generators(const SimpleSpec& s) {
  check_legal(s);
  std::vector<TorsionVector> center = center_generators(s.type, s.l);
  switch (s.isogeny) {
    case IsogenyKind::SimplyConnected:
      return {};
    case IsogenyKind::Adjoint:
      return center;
    case IsogenyKind::Intermediate:
      return {s.e * center.front()};
    case IsogenyKind::SO:
      if (s.l % 2 == 1) return {Integer(2) * center.front()};
      return {center[0] + center[1]};
    case IsogenyKind::HSpin:
      return {center[1]};
  }
  return {};
}

std::vector<std::size_t> graph_automorphism(char type, std::size_t l, int epsilon) {
  std::vector<std::size_t> sigma(l);
  for (std::size_t i = 0; i < l; ++i) sigma[i] = i;
  if (epsilon == 1) return sigma;
  if (type == 'A' && epsilon == -1) {
    for (std::size_t i = 0; i < l; ++i) sigma[i] = l - 1 - i;
  } else if (type == 'D' && epsilon == -1) {
    std::swap(sigma[0], sigma[1]);
  } else if (type == 'D' && l == 4 && epsilon == 3) {
    sigma[0] = 1;
    sigma[1] = 3;
    sigma[3] = 0;
  } else if (type == 'E' && l == 6 && epsilon == -1) {
    std::swap(sigma[0], sigma[5]);
    std::swap(sigma[2], sigma[4]);
  } else {
    throw ValidationError("no graph automorphism for epsilon = " + std::to_string(epsilon));
  }
  return sigma;
}

SimpleDatum build_simple_datum(const SimpleSpec& s) {
  check_legal(s);
  RootDatum sc = standard_datum(s.type, s.l, Isogeny::SimplyConnected);
  std::vector<std::size_t> sigma = graph_automorphism(s.type, s.l, s.epsilon);
  IntMatrix perm(s.l, s.l);
  for (std::size_t i = 0; i < s.l; ++i) perm(i, sigma[i]) = 1;
  QuotientDatum qd = quotient_datum(sc, isogeny_kernel_generators(s));
  return {qd.datum, transport_frobenius(perm, qd.basis)};
}

SimpleParameterization simple_parameterization(const SimpleSpec& s) {
  check_legal(s);
  const Integer p = prime_of(s);
  const std::size_t l = s.l;
  SimpleParameterization out;
  out.constraints = IntMatrix(0, l);
  out.equation = "none";
  auto set = [&](IntVector factors, std::vector<std::vector<long>> rows, long m) {
    out.kf_factors = std::move(factors);
    out.modulus = m;
    out.constraints = IntMatrix(rows.size(), l);
    out.equation.clear();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (std::size_t i = 0; i < l; ++i) out.constraints(j, i) = rows[j][i];
      if (j) out.equation += "; ";
      out.equation += linear_form(rows[j], m);
    }
  };
  if (is_sc(s)) return out;
  const bool odd_p = p != 2;
  switch (s.type) {
    case 'A': {
      Integer d = gcd(Integer(static_cast<unsigned long>(l + 1)) / s.e, s.q - s.epsilon);
      if (d == 1) break;
      std::vector<long> row(l);
      for (std::size_t i = 0; i < l; ++i) row[i] = static_cast<long>(i + 1);
      set({d}, {row}, d.get_si());
      break;
    }
    case 'B': {
      if (!odd_p) break;
      std::vector<long> row(l, 0);
      row[0] = 1;
      set({2}, {row}, 2);
      break;
    }
    case 'C': {
      if (!odd_p) break;
      std::vector<long> row(l, 0);
      for (std::size_t i = 0; i < l; ++i) row[i] = (i + 1) % 2 == l % 2 ? 1 : 0;
      set({2}, {row}, 2);
      break;
    }
    case 'D': {
      if (!odd_p) break;
      std::vector<long> so(l, 0);
      so[0] = so[1] = 1;
      if (l % 2 == 1) {
        if (is_adjoint(s) && mod(s.q - s.epsilon, 4) == 0) {
          set({4}, {d_odd_pattern(l)}, 4);
        } else {
          set({2}, {so}, 2);
        }
        break;
      }
      if (s.isogeny == IsogenyKind::HSpin) {
        set({2}, {d_even_z2(l)}, 2);
      } else if (s.isogeny == IsogenyKind::SO) {
        set({2}, {so}, 2);
      } else if (s.epsilon == 1) {
        set({2, 2}, {d_even_z1(l), so}, 2);
      } else if (s.epsilon == -1) {
        set({2}, {so}, 2);
      }
      break;
    }
    case 'E': {
      if (l == 6 && p != 3 && mod(s.q - s.epsilon, 3) == 0)
        set({3}, {{1, 0, 2, 0, 1, 2}}, 3);
      else if (l == 7 && odd_p)
        set({2}, {{0, 1, 0, 0, 1, 0, 1}}, 2);
      break;
    }
    default:
      break;
  }
  return out;
}

void set_catalog_corruption(bool on) { g_corrupt = on; }

Integer closed_form_count(const SimpleSpec& s) {
  check_legal(s);
  const Integer& q = s.q;
  const std::size_t l = s.l;
  const bool odd_p = prime_of(s) != 2;
  const Integer trivial = pow(q, l);
  if (is_sc(s)) return trivial;
  switch (s.type) {
    case 'A': {
      Integer d = gcd(Integer(static_cast<unsigned long>(l + 1)) / s.e, q - s.epsilon);
      Integer sum = 0;
      for (const auto& dp : divisors(d))
        sum += euler_phi(dp) * pow(q, (l + 1) / dp.get_ui() - 1);
      return sum;
    }
    case 'B':
      return odd_p ? trivial + pow(q, l - 1) : trivial;
    case 'C':
      return odd_p ? trivial + pow(q, l / 2) : trivial;
    case 'D': {
      if (!odd_p) return trivial;
      if (l % 2 == 0) {
        if (s.isogeny == IsogenyKind::HSpin) return trivial + pow(q, l / 2);
        if (s.isogeny == IsogenyKind::SO) return trivial + pow(q, l - 2);
        if (s.epsilon == 1) return trivial + pow(q, l - 2) + 2 * pow(q, l / 2);
        if (s.epsilon == -1) return trivial + pow(q, l - 2);
        return trivial;
      }
      if (is_adjoint(s) && mod(q - s.epsilon, 4) == 0)
        return trivial + pow(q, l - 2) + 2 * pow(q, (l - 3) / 2);
      return trivial + pow(q, l - 2);
    }
    case 'E':
      if (l == 6 && mod(q - s.epsilon, 3) == 0) return pow(q, 6) + 2 * pow(q, 2);
      if (l == 7 && odd_p) return pow(q, 7) + pow(q, g_corrupt ? 3 : 4);
      return trivial;
    default:
      return trivial;
  }
}

std::vector<Integer> divisors(const Integer& n) {
  if (n < 1) throw ValidationError("divisors of a non-positive number");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer euler_phi(const Integer& n) {
  if (n < 1) throw ValidationError("euler_phi needs a positive argument");
  Integer result = n, rest = n;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

Integer divisor_sum_count(unsigned n, const Integer& m, const Integer& q) {
  if (n < 2) throw ValidationError("n must be at least 2");
  if (m < 1 || Integer(n) % m != 0) throw ValidationError("m must divide n");
  if (Integer(q - 1) % m != 0 && Integer(q + 1) % m != 0)
    throw ValidationError("m must divide q - 1 or q + 1");
  Integer sum = 0;
  for (const auto& d : divisors(m)) sum += euler_phi(d) * pow(q, n / d.get_ui());
  if (sum % m != 0) throw InternalError("divisor sum not divisible by m");
  return sum / m;
}

Integer parity_count(unsigned n, const Integer& q, int nu) {
  if (q % 2 == 0) throw ValidationError("q must be odd");
  if (nu != 0 && nu != 1) throw ValidationError("nu must be 0 or 1");
  Integer v = pow(q, n) + 1 - 2 * nu;
  if (v % 2 != 0) throw InternalError("parity count not divisible by 2");
  return v / 2;
}

Integer bruteforce_count(const std::vector<long>& coeffs, long m, long q, long target) {
  if (m < 1 || q < 1) throw ValidationError("modulus and bound must be positive");
  double size = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) size *= static_cast<double>(q);
  if (size > 1e7) throw ValidationError("enumeration too large");
  const std::size_t n = coeffs.size();
  std::vector<long> c(n), lambda(n, 0);
  for (std::size_t i = 0; i < n; ++i) c[i] = ((coeffs[i] % m) + m) % m;
  const long goal = ((target % m) + m) % m;
  long sum = 0;
  std::int64_t count = 0;
  for (;;) {
    if (sum == goal) ++count;
    std::size_t i = n;
    for (;;) {
      if (i == 0) return Integer(static_cast<long>(count));
      --i;
      if (++lambda[i] < q) {
        sum = (sum + c[i]) % m;
        break;
      }
      lambda[i] = 0;
      sum = ((sum - (q - 1) % m * c[i]) % m + m) % m;
    }
  }
}

}  // namespace liereps
