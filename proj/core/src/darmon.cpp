#include "darmonlab/darmon.hpp"

#include <set>

namespace darmonlab {

Weight Weight::finite(unsigned long n) {
  if (n == 0) throw std::invalid_argument("weight must be positive");
  return {n, false};
}

Weight Weight::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  unsigned long n = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad weight: " + std::string(text));
    n = n * 10 + static_cast<unsigned long>(ch - '0');
  }
  if (text.empty()) throw std::invalid_argument("empty weight");
  return finite(n);
}

Rational Weight::coefficient() const {
  if (infinite) return 1;
  return 1 - Rational(1, static_cast<long>(n));
}

std::string Weight::to_string() const { return infinite ? "inf" : std::to_string(n); }

PlaceSet darmon_places(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                       const FieldElement& d) {
  return omega(a, b, c, d);
}

bool in_darmon(const FieldElement& r, const PlaceSet& S, Weight n) {
  if (r.is_zero()) return true;
  const NumberField& K = r.field();
  for (const auto& p : support_primes(r))
    for (const auto& P : K.primes_above(p)) {
      if (contains(S, Place::finite(P))) continue;
      long v = valuation(r, P);
      if (v >= 0) continue;
      if (n.infinite || v % static_cast<long>(n.n) != 0) return false;
    }
  return true;
}

bool in_darmon(const DarmonQuery& q) {
  if (q.r.field() != q.field) throw std::invalid_argument("element belongs to another field");
  for (const auto& v : q.S)
    if (!v.is_finite()) throw std::invalid_argument("S lists finite places only");
  return in_darmon(q.r, q.S, q.weight);
}

Multiplicity intersection_multiplicity(const FieldElement& x0, const FieldElement& x1,
                                       const PrimeIdeal& P) {
  if (x0.is_zero() && x1.is_zero()) throw std::invalid_argument("(0 : 0) is not a point");
  if (x1.is_zero()) return std::nullopt;
  if (x0.is_zero()) return 0;
  FractionalIdeal g = ideal_gcd(ideal_of(x0), ideal_of(x1));
  return ideal_exponent(ideal_product(ideal_of(x1), ideal_inverse(g)), P);
}

bool is_darmon_point(const FieldElement& x0, const FieldElement& x1, Weight n0, Weight n1,
                     const PlaceSet& S) {
  if (x0.is_zero() && x1.is_zero()) throw std::invalid_argument("(0 : 0) is not a point");
  const NumberField& K = x0.field();
  std::set<Integer> primes;
  for (const auto* x : {&x0, &x1})
    if (!x->is_zero())
      for (const auto& p : support_primes(*x)) primes.insert(p);
  auto ok = [](Multiplicity m, Weight w) {
    if (!m) return true;
    if (w.infinite) return *m == 0;
    return *m % static_cast<long>(w.n) == 0;
  };
  for (const auto& p : primes)
    for (const auto& P : K.primes_above(p)) {
      if (contains(S, Place::finite(P))) continue;
      if (!ok(intersection_multiplicity(x1, x0, P), n0)) return false;
      if (!ok(intersection_multiplicity(x0, x1, P), n1)) return false;
    }
  return true;
}

bool rational_power_oracle(const Rational& r, unsigned long n) {
  if (n == 0) throw std::invalid_argument("weight must be positive");
  if (r == 0) return true;
  Integer a = r.get_num(), b = r.get_den();
  if (gcd(a, b) != 1) throw std::logic_error("rational not in lowest terms");
  return exact_root(b, static_cast<unsigned>(n)).has_value();
}

bool rational_power_oracle(const FieldElement& r, unsigned long n) {
  if (r.field().degree() != 1) throw std::invalid_argument("rational_power_oracle needs K = Q");
  return rational_power_oracle(r.rational_value(), n);
}

}  // namespace darmonlab
