#include "darmonlab/definable_sets.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace darmonlab {

namespace {

void require_nonzero(std::initializer_list<const FieldElement*> xs) {
  for (const auto* x : xs)
    if (x->is_zero()) throw std::domain_error("parameter must be nonzero");
}

bool valuations_at_least(const PlaceSet& S, const FieldElement& r, long k) {
  if (r.is_zero()) return true;
  for (const auto& v : S)
    if (v.is_finite() && valuation(r, v.prime) < k) return false;
  return true;
}

}  // namespace

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::True:
      return "true";
    case Tristate::False:
      return "false";
    case Tristate::Unknown:
      return "unknown";
  }
  return "unknown";
}

bool in_T(const FieldElement& a, const FieldElement& b, const FieldElement& r) {
  require_nonzero({&a, &b});
  for (const auto& v : delta(a, b)) {
    if (v.is_finite()) {
      if (!r.is_zero() && valuation(r, v.prime) < 0) return false;
    } else if (v.is_real() && !archimedean_box(r, v.index)) {
      return false;
    }
  }
  return true;
}

bool in_J(const FieldElement& a, const FieldElement& b, const FieldElement& r) {
  require_nonzero({&a, &b});
  return valuations_at_least(delta_upper(a, b), r, 1);
}

bool in_J4(const ParamTuple& t, const FieldElement& r) {
  require_nonzero({&t.a, &t.b, &t.c, &t.d});
  return valuations_at_least(omega(t.a, t.b, t.c, t.d), r, 1);
}

bool in_J42(const ParamTuple& t, const FieldElement& r) {
  require_nonzero({&t.a, &t.b, &t.c, &t.d});
  return valuations_at_least(omega(t.a, t.b, t.c, t.d), r, 2);
}

bool in_Ksf(const FieldElement& a, const FieldElement& b, const FieldElement& r) {
  require_nonzero({&a, &b});
  if (r.is_zero()) throw std::domain_error("valuation of zero is undefined");
  for (const auto& v : delta_upper(a, b)) {
    long nu = valuation(r, v.prime);
    if (nu > 1 || nu < -1) return false;
  }
  return true;
}

bool is_sum_of_four_squares(const FieldElement& lambda) {
  return lambda.is_zero() || is_totally_nonnegative(lambda);
}

std::vector<FieldElement> height_enumeration(const NumberField& K, long height_bound) {
  std::vector<FieldElement> out;
  const int d = K.degree();
  for (long h = 0; h <= height_bound; ++h) {
    if (h == 0) {
      out.push_back(K.zero());
      continue;
    }
    for (long q = 1; q <= h; ++q) {
      for (long p = (q == h ? 1 : h); p <= h; ++p) {
        if (std::gcd(p, q) != 1) continue;
        out.push_back(K.from_rational(Rational(p, q)));
        out.push_back(K.from_rational(Rational(-p, q)));
      }
    }
    if (d == 1) continue;
    // Integral vectors with max |coordinate| = h and some non-constant coordinate nonzero.
    std::vector<long> c(d, -h);
    while (true) {
      long m = 0;
      bool nonconst = false;
      for (int i = 0; i < d; ++i) {
        m = std::max(m, std::labs(c[i]));
        if (i > 0 && c[i] != 0) nonconst = true;
      }
      if (m == h && nonconst) {
        std::vector<Integer> z(c.begin(), c.end());
        out.push_back(K.from_integers(z));
      }
      int i = d - 1;
      while (i >= 0 && c[i] == h) c[i--] = -h;
      if (i < 0) break;
      ++c[i];
    }
  }
  return out;
}

namespace {

std::optional<std::array<Integer, 4>> integer_four_squares(const Integer& N) {
  if (N < 0) return std::nullopt;
  for (Integer a = sqrt(N); a >= 0; --a) {
    Integer r1 = N - a * a;
    for (Integer b = std::min<Integer>(a, sqrt(r1)); b >= 0; --b) {
      Integer r2 = r1 - b * b;
      if (r2 > 2 * b * b) break;
      for (Integer c = std::min<Integer>(b, sqrt(r2)); c >= 0; --c) {
        Integer r3 = r2 - c * c;
        if (r3 > c * c) break;
        Integer d = sqrt(r3);
        if (d * d == r3) return std::array<Integer, 4>{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<FieldElement, 4>> four_square_witness(const FieldElement& lambda,
                                                               long height_bound) {
  if (!is_sum_of_four_squares(lambda)) return std::nullopt;
  const NumberField& K = lambda.field();
  if (lambda.is_rational()) {
    Rational q = lambda.rational_value();
    Integer m = q.get_den();
    if (auto w = integer_four_squares(q.get_num() * m)) {
      std::array<FieldElement, 4> out{K.zero(), K.zero(), K.zero(), K.zero()};
      for (int i = 0; i < 4; ++i) out[i] = K.from_rational(Rational((*w)[i], m));
      return out;
    }
    if (K.degree() == 1) return std::nullopt;
  }
  auto cand = height_enumeration(K, height_bound);
  long budget = 200000;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    FieldElement r1 = lambda - cand[i] * cand[i];
    for (std::size_t j = 0; j <= i; ++j) {
      FieldElement r2 = r1 - cand[j] * cand[j];
      for (std::size_t k = 0; k <= j; ++k) {
        if (--budget < 0) return std::nullopt;
        FieldElement r3 = r2 - cand[k] * cand[k];
        if (!is_totally_nonnegative(r3) && !r3.is_zero()) continue;
        if (auto s = square_root(r3)) return std::array<FieldElement, 4>{cand[i], cand[j], cand[k], *s};
      }
    }
  }
  return std::nullopt;
}

bool form_isotropic_at(const std::vector<FieldElement>& coeffs, const Place& v) {
  for (const auto& c : coeffs)
    if (c.is_zero()) throw std::domain_error("form coefficient must be nonzero");
  const std::size_t n = coeffs.size();
  if (n < 2) return false;
  if (v.kind == Place::Kind::Complex) return true;
  if (v.is_real()) {
    int s0 = real_sign(coeffs[0], v.index);
    for (const auto& c : coeffs)
      if (real_sign(c, v.index) != s0) return true;
    return false;
  }
  if (n >= 5) return true;
  if (n == 2) return local_square(-(coeffs[0] * coeffs[1]), v);
  if (n == 3) {
    const FieldElement& a3 = coeffs[2];
    return hilbert(-(coeffs[0] * a3), -(coeffs[1] * a3), v) == 1;
  }
  FieldElement disc = coeffs[0] * coeffs[1] * coeffs[2] * coeffs[3];
  if (!local_square(disc, v)) return true;
  int eps = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) eps *= hilbert(coeffs[i], coeffs[j], v);
  const FieldElement m1 = -coeffs[0].field().one();
  return eps == hilbert(m1, m1, v);
}

bool form_isotropic(const std::vector<FieldElement>& coeffs) {
  if (coeffs.empty()) return false;
  const NumberField& K = coeffs[0].field();
  std::set<Integer> primes{Integer(2)};
  for (const auto& c : coeffs) {
    if (c.is_zero()) throw std::domain_error("form coefficient must be nonzero");
    for (const auto& p : support_primes(c)) primes.insert(p);
  }
  for (const auto& v : K.real_places())
    if (!form_isotropic_at(coeffs, v)) return false;
  for (const auto& p : primes)
    for (const auto& P : K.primes_above(p))
      if (!form_isotropic_at(coeffs, Place::finite(P))) return false;
  return true;
}

bool in_S_oracle(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  require_nonzero({&a, &b});
  FieldElement t = a.field().one() - c * c * Rational(1, 4);
  if (t.is_zero()) return true;
  return form_isotropic({-a, -b, a * b, -t});
}

OracleResult in_T_oracle(const FieldElement& a, const FieldElement& b, const FieldElement& t,
                         long height_bound) {
  if (!in_T(a, b, t)) return {Tristate::False, {}};
  for (const auto& s : height_enumeration(a.field(), height_bound)) {
    if (in_S_oracle(a, b, s) && in_S_oracle(a, b, t - s)) return {Tristate::True, {s, t - s}};
  }
  return {Tristate::Unknown, {}};
}

ArcplacesResult arcplaces_condition(const FieldElement& a, const FieldElement& b,
                                    long search_bound) {
  require_nonzero({&a, &b});
  ArcplacesResult res;
  const NumberField& K = a.field();
  res.condition = true;
  for (const auto& v : K.real_places())
    if (hilbert(a, b, v) == -1) res.condition = false;
  if (!res.condition || K.real_place_count() == 0) return res;
  for (const auto& c : height_enumeration(K, search_bound)) {
    bool big = true;
    for (std::size_t i = 0; i < K.real_place_count() && big; ++i)
      big = compare_at_real(c, i, 5) >= 0;
    if (big && in_T(a, b, c)) {
      res.certificate = c;
      break;
    }
  }
  return res;
}

DisjointResult disjoint_via_unit(const ParamTuple& t1, const ParamTuple& t2) {
  PlaceSet O1 = omega(t1.a, t1.b, t1.c, t1.d);
  PlaceSet O2 = omega(t2.a, t2.b, t2.c, t2.d);
  DisjointResult res;
  res.disjoint = intersect(O1, O2).empty();
  if (!res.disjoint) return res;
  const NumberField& K = t1.a.field();
  std::vector<Congruence> cong;
  for (const auto& v : O1) cong.push_back({v.prime, K.zero(), 1});
  for (const auto& v : O2) cong.push_back({v.prime, K.one(), 1});
  FieldElement x = weak_approximate(K, cong, {});
  if (!in_J4(t1, x) || !in_J4(t2, K.one() - x))
    throw std::logic_error("disjoint_via_unit: witness failed verification");
  res.witness = x;
  return res;
}

}  // namespace darmonlab
