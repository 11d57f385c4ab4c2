#include "darmonlab/number_field.hpp"

#include "field_data.hpp"

#include <algorithm>
#include <map>

namespace darmonlab {

int real_sign(const FieldElement& x, std::size_t real_index) {
  const NumberField& K = x.field();
  if (real_index >= K.real_place_count()) throw std::out_of_range("real place index");
  real::Interval iv = K.real_intervals()[real_index];
  return real::sign_at_root(K.minimal_polynomial_q(), iv, x.as_poly());
}

std::vector<int> real_signs(const FieldElement& x) {
  if (x.is_zero()) throw std::domain_error("real_signs of zero");
  std::vector<int> out;
  for (std::size_t i = 0; i < x.field().real_place_count(); ++i) out.push_back(real_sign(x, i));
  return out;
}

bool is_totally_nonnegative(const FieldElement& x) {
  if (x.is_zero()) return true;
  for (int s : real_signs(x))
    if (s < 0) return false;
  return true;
}

int compare_at_real(const FieldElement& x, std::size_t real_index, const Rational& q) {
  return real_sign(x - x.field().from_rational(q), real_index);
}

namespace {

Integer power(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Integer ceil_div(long a, long b) { return Integer((a + b - 1) / b); }

// Integral element congruent to 1 modulo P^k and to 0 modulo Q^k for the other primes above p.
integral::Vec local_idempotent(const NumberField& K, const PrimeIdeal& P, long k,
                               const Integer& modulus) {
  const auto& f = K.minimal_polynomial();
  integral::Vec one(static_cast<std::size_t>(K.degree()));
  one[0] = 1;
  auto primes = factor_rational_prime(K, P.characteristic());
  if (primes.size() == 1) return one;
  fp::Poly fbar = fp::reduce(f, P.p);
  fp::Poly ge{1};
  for (unsigned i = 0; i < P.ramification; ++i) ge = fp::mul(ge, P.generator, P.p);
  fp::Poly h = fp::divmod(fbar, ge, P.p).first;
  integral::Vec s = fp::lift(h);
  s.resize(static_cast<std::size_t>(K.degree()));
  Integer q = P.norm();
  unsigned long K_exp = static_cast<unsigned long>(std::max(k, 1L));
  Integer phi = power(q, K_exp - 1) * (q - 1);
  return integral::pow_mod(s, phi, f, modulus);
}

bool signs_match(const FieldElement& y, const std::vector<SignConstraint>& signs) {
  for (const auto& c : signs) {
    if (y.is_zero()) return false;
    if (real_sign(y, c.real_index) != c.sign) return false;
  }
  return true;
}

// Small integral element with the requested signs.
FieldElement sign_pattern_element(const NumberField& K, const std::vector<SignConstraint>& signs,
                                  long bound) {
  const int d = K.degree();
  for (long B = 1; B <= bound; ++B) {
    std::vector<long> v(static_cast<std::size_t>(d), -B);
    for (;;) {
      bool on_shell = std::any_of(v.begin(), v.end(), [&](long c) { return c == B || c == -B; });
      if (on_shell) {
        std::vector<Rational> c(v.begin(), v.end());
        FieldElement w = K.from_coords(c);
        if (!w.is_zero() && signs_match(w, signs)) return w;
      }
      std::size_t i = 0;
      while (i < v.size() && v[i] == B) v[i++] = -B;
      if (i == v.size()) break;
      ++v[i];
    }
  }
  throw SearchExhausted("weak_approximate: no element with the requested signs", bound);
}

}  // namespace

FieldElement weak_approximate(const NumberField& K, const std::vector<Congruence>& congruences,
                              const std::vector<SignConstraint>& signs, long search_bound) {
  for (std::size_t i = 0; i < congruences.size(); ++i)
    for (std::size_t j = i + 1; j < congruences.size(); ++j)
      if (congruences[i].prime == congruences[j].prime)
        throw std::invalid_argument("weak_approximate: repeated prime");
  for (const auto& s : signs)
    if (s.real_index >= K.real_place_count() || (s.sign != 1 && s.sign != -1))
      throw std::invalid_argument("weak_approximate: bad sign constraint");

  Integer D = 1;
  for (const auto& c : congruences) {
    Integer den = c.target.denominator();
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den.get_mpz_t());
  }

  struct Local {
    PrimeIdeal P;
    integral::Vec target;
    long k;
  };
  std::map<Integer, std::vector<Local>> by_p;
  for (const auto& c : congruences) {
    const Integer p = c.prime.characteristic();
    long k = c.exponent + static_cast<long>(c.prime.ramification) *
                              static_cast<long>(valuation_p(D, p));
    if (k <= 0) continue;
    by_p[p].push_back({c.prime, (c.target * Rational(D)).integer_coords(), k});
  }

  const auto& f = K.minimal_polynomial();
  const std::size_t d = static_cast<std::size_t>(K.degree());
  integral::Vec y(d);
  Integer m = 1;
  std::vector<std::pair<Integer, integral::Vec>> parts;
  for (const auto& [p, locals] : by_p) {
    long M = 1;
    long kmax = 1;
    for (const auto& L : locals) {
      M = std::max<long>(M, ceil_div(L.k, L.P.ramification).get_si());
      kmax = std::max(kmax, L.k);
    }
    Integer mod = power(p, static_cast<unsigned long>(M));
    integral::Vec yp(d);
    for (const auto& L : locals) {
      auto e = local_idempotent(K, L.P, kmax, mod);
      auto t = integral::mul_mod(L.target, e, f, mod);
      for (std::size_t i = 0; i < d; ++i) yp[i] += t[i];
    }
    parts.emplace_back(mod, integral::reduce(yp, mod));
    m *= mod;
  }
  for (const auto& [mod, yp] : parts) {
    Integer rest = m / mod, inv;
    mpz_invert(inv.get_mpz_t(), rest.get_mpz_t(), mod.get_mpz_t());
    Integer c = rest * inv;
    for (std::size_t i = 0; i < d; ++i) y[i] += yp[i] * c;
  }
  for (auto& c : y) c = mod_symmetric(c, m);

  FieldElement yprime = K.from_integers(y);
  if (!signs.empty() && !signs_match(yprime, signs)) {
    FieldElement w = sign_pattern_element(K, signs, search_bound);
    Integer c = 1;
    bool found = false;
    for (int round = 0; round < 4096; ++round) {
      FieldElement cand = yprime + w * Rational(c * m);
      if (signs_match(cand, signs)) {
        yprime = cand;
        found = true;
        break;
      }
      c *= 2;
    }
    if (!found) throw SearchExhausted("weak_approximate: sign adjustment did not converge", 4096);
  }
  FieldElement result = yprime * Rational(1, D);
  if (congruences.empty() && signs.empty()) result = K.one();

  for (const auto& c : congruences) {
    FieldElement diff = result - c.target;
    if (!diff.is_zero() && valuation(diff, c.prime) < c.exponent)
      throw std::logic_error("weak_approximate: verification failed at " + c.prime.to_string());
  }
  if (!signs_match(result, signs))
    throw std::logic_error("weak_approximate: verification failed at a real place");
  return result;
}

namespace {

integral::Vec times_mod(const integral::Vec& a, const integral::Vec& b, const upoly::ZPoly& f,
                        const Integer& m) {
  return integral::mul_mod(a, b, f, m);
}

// Reduce a p-integral element to integer coordinates modulo m = p^N.
integral::Vec reduce_p_integral(const FieldElement& x, const Integer& m) {
  integral::Vec out;
  for (const auto& c : x.coords()) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
      throw std::domain_error("element is not p-integral");
    out.push_back(mod_floor(c.get_num() * inv, m));
  }
  return out;
}

struct SplitPrime {
  std::uint64_t p;
  std::vector<fp::Poly> factors;
};

// Candidate y with y^2 = z lifted p-adically from residue square roots; nullopt when unsuccessful.
std::optional<FieldElement> hensel_sqrt(const FieldElement& z, const SplitPrime& sp,
                                        const std::vector<fp::Poly>& roots, long digits) {
  const NumberField& K = z.field();
  const auto& f = K.minimal_polynomial();
  const std::uint64_t p = sp.p;
  const std::size_t r = sp.factors.size();
  fp::Poly fbar = fp::reduce(f, p);
  std::vector<fp::Poly> crt(r);
  for (std::size_t i = 0; i < r; ++i) {
    fp::Poly Mi = fp::divmod(fbar, sp.factors[i], p).first;
    fp::Poly inv = fp::invmod(fp::rem(Mi, sp.factors[i], p), sp.factors[i], p);
    crt[i] = fp::mul(Mi, inv, p);
  }
  Integer pp(std::to_string(p));
  Integer mod_full = power(pp, static_cast<unsigned long>(digits));
  auto zint = z.integer_coords();
  for (unsigned long mask = 0; mask < (1UL << (r - 1)); ++mask) {
    fp::Poly y0;
    for (std::size_t i = 0; i < r; ++i) {
      fp::Poly s = roots[i];
      if (i > 0 && ((mask >> (i - 1)) & 1)) s = fp::sub(fp::Poly{}, s, p);
      y0 = fp::add(y0, fp::mul(s, crt[i], p), p);
    }
    y0 = fp::rem(y0, fbar, p);
    integral::Vec y = fp::lift(y0);
    y.resize(static_cast<std::size_t>(K.degree()));
    FieldElement two_y0 = K.from_integers(y) * Rational(2);
    if (two_y0.is_zero()) continue;
    integral::Vec v = reduce_p_integral(two_y0.inverse(), pp);
    long prec = 1;
    int extra = 2;
    while (prec < digits || extra-- > 0) {
      prec = std::min(2 * prec, digits);
      Integer mod = power(pp, static_cast<unsigned long>(prec));
      integral::Vec y2 = times_mod(y, y, f, mod);
      for (std::size_t i = 0; i < y2.size(); ++i) y2[i] -= zint[i];
      integral::Vec corr = times_mod(y2, v, f, mod);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod_floor(y[i] - corr[i], mod);
      integral::Vec tyv = times_mod(y, v, f, mod);
      for (auto& c : tyv) c *= -2;
      tyv[0] += 2;
      v = times_mod(v, tyv, f, mod);
    }
    for (auto& c : y) c = mod_symmetric(c, mod_full);
    FieldElement cand = K.from_integers(y);
    if (cand * cand == z) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FieldElement> square_root(const FieldElement& x) {
  const NumberField& K = x.field();
  if (x.is_zero()) return x;
  if (x.is_rational()) {
    Rational q = x.rational_value();
    if (q > 0) {
      auto a = exact_root(q.get_num(), 2);
      auto b = exact_root(q.get_den(), 2);
      if (a && b) return K.from_rational(Rational(*a, *b));
    }
    if (K.degree() == 1) return std::nullopt;
  }
  for (int s : real_signs(x))
    if (s < 0) return std::nullopt;
  Integer den = x.denominator();
  FieldElement z = x * Rational(den * den);
  Rational N = z.norm();
  if (N < 0 || !exact_root(N.get_num(), 2)) return std::nullopt;
  Integer Nz = abs(N.get_num());

  const auto& f = K.minimal_polynomial();
  std::vector<std::uint64_t> pool = primes_up_to(1 << 16);
  std::size_t next = 1;  // skip 2
  std::optional<SplitPrime> best;
  std::vector<fp::Poly> best_roots;
  for (int round = 0; round < 24; ++round) {
    int tested = 0;
    while (tested < 8 && next < pool.size()) {
      std::uint64_t p = pool[next++];
      if (mpz_divisible_ui_p(K.discriminant().get_mpz_t(), p) ||
          mpz_divisible_ui_p(Nz.get_mpz_t(), p))
        continue;
      ++tested;
      SplitPrime sp{p, {}};
      std::vector<fp::Poly> roots;
      bool square_everywhere = true;
      fp::Poly zr = fp::reduce(z.integer_coords(), p);
      for (const auto& [g, e] : fp::factor(fp::reduce(f, p), p)) {
        auto root = fp::sqrt_in_residue_field(zr, g, p);
        if (!root) {
          square_everywhere = false;
          break;
        }
        sp.factors.push_back(g);
        roots.push_back(*root);
      }
      if (!square_everywhere) return std::nullopt;
      if (!best || sp.factors.size() < best->factors.size()) {
        best = sp;
        best_roots = roots;
      }
    }
    if (best && best->factors.size() <= 6) {
      long digits = 16L << std::min(round, 12);
      if (auto y = hensel_sqrt(z, *best, best_roots, digits)) return *y * Rational(1, den);
    }
  }
  throw SearchExhausted("square_root: undecided after the configured rounds", 24);
}

bool is_global_square(const FieldElement& x) { return square_root(x).has_value(); }

Integer find_nonsquare_integer(const NumberField& K) {
  for (long n = 2;; ++n)
    if (!is_global_square(K.from_rational(n))) return Integer(n);
}

}  // namespace darmonlab
