#include "darmonlab/fp_poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace darmonlab::fp {

using ::darmonlab::invmod;
using ::darmonlab::mulmod;
using ::darmonlab::powmod;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const upoly::ZPoly& f, std::uint64_t p) {
  Poly out(f.size());
  Integer pp(std::to_string(p));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = to_u64(mod_floor(f[i], pp));
  trim(out);
  return out;
}

Poly reduce(const upoly::QPoly& f, std::uint64_t p) {
  Poly out(f.size());
  Integer pp(std::to_string(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::uint64_t num = to_u64(mod_floor(f[i].get_num(), pp));
    std::uint64_t den = to_u64(mod_floor(f[i].get_den(), pp));
    out[i] = mulmod(num, invmod(den, p), p);
  }
  trim(out);
  return out;
}

upoly::ZPoly lift(const Poly& f) {
  upoly::ZPoly out;
  out.reserve(f.size());
  for (auto c : f) out.emplace_back(std::to_string(c));
  return out;
}

Poly add(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = addmod(out[i], g[i], p);
  trim(out);
  return out;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = submod(out[i], g[i], p);
  trim(out);
  return out;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = addmod(out[i + j], mulmod(f[i], g[j], p), p);
  }
  trim(out);
  return out;
}

Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mulmod(f[i], c, p);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p) {
  if (g.empty()) throw std::domain_error("fp::divmod by zero");
  Poly r = f;
  trim(r);
  if (r.size() < g.size()) return {{}, r};
  Poly q(r.size() - g.size() + 1, 0);
  std::uint64_t inv_lead = invmod(g.back(), p);
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(g.size()) - 1; --i) {
    std::uint64_t c = mulmod(r[i], inv_lead, p);
    if (c == 0) continue;
    std::size_t shift = i - (g.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j)
      r[shift + j] = submod(r[shift + j], mulmod(c, g[j], p), p);
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Poly& f, const Poly& g, std::uint64_t p) { return divmod(f, g, p).second; }

Poly monic(const Poly& f, std::uint64_t p) {
  if (f.empty()) return f;
  return scale(f, invmod(f.back(), p), p);
}

Poly gcd(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly a = f, b = g;
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ExtGcd ext_gcd(const Poly& f, const Poly& h, std::uint64_t p) {
  Poly r0 = f, r1 = h, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, s0, t0};
  std::uint64_t inv = invmod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

Poly derivative(const Poly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  Poly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mulmod(f[i], i % p, p);
  trim(out);
  return out;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  return rem(mul(a, b, p), m, p);
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly b = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m, p);
  }
  return result;
}

Poly invmod(const Poly& a, const Poly& m, std::uint64_t p) {
  auto eg = ext_gcd(rem(a, m, p), m, p);
  if (!is_one(eg.g)) throw std::domain_error("fp::invmod: not invertible");
  return rem(eg.s, m, p);
}

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

namespace {

Poly x_poly() { return Poly{0, 1}; }

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f_in,
                                                                  std::uint64_t p) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly f = monic(f_in, p);
  if (degree(f) <= 0) return out;
  Poly df = derivative(f, p);
  Poly c = gcd(f, df, p);
  Poly w = divmod(f, c, p).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly fac = divmod(w, y, p).first;
    if (degree(fac) > 0) out.emplace_back(monic(fac, p), i);
    w = y;
    c = divmod(c, y, p).first;
    ++i;
  }
  if (degree(c) > 0) {
    // c is a polynomial in x^p
    Poly root;
    for (std::size_t k = 0; k < c.size(); k += p) root.push_back(c[k]);
    for (auto& [g, j] : squarefree_decomposition(root, p)) out.emplace_back(g, j * static_cast<unsigned>(p));
  }
  return out;
}

void equal_degree_split(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  const int n = degree(f);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly b;
    if (p == 2) {
      Poly t = a, acc = a;
      for (int k = 1; k < d; ++k) {
        t = mulmod(t, t, f, p);
        acc = add(acc, t, p);
      }
      b = acc;
    } else {
      Integer q = 1;
      for (int k = 0; k < d; ++k) q *= Integer(std::to_string(p));
      Integer e = (q - 1) / 2;
      b = sub(powmod(a, e, f, p), Poly{1}, p);
    }
    Poly g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<Poly> squarefree_factor(const Poly& f_in, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly f = monic(f_in, p);
  Poly h = x_poly();
  Integer pp(std::to_string(p));
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, pp, f, p);
    Poly g = gcd(f, sub(h, x_poly(), p), p);
    if (degree(g) > 0) {
      equal_degree_split(g, i, p, rng, out);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back(monic(f, p));
  return out;
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, std::uint64_t p) {
  Poly g = f;
  trim(g);
  if (g.empty()) throw std::domain_error("fp::factor of zero");
  std::mt19937_64 rng(0x5eedULL + p);
  std::vector<std::pair<Poly, unsigned>> out;
  for (auto& [part, mult] : squarefree_decomposition(g, p))
    for (auto& irr : squarefree_factor(part, p, rng)) out.emplace_back(irr, mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(),
                                        b.first.rend());
  });
  return out;
}

int quadratic_character(const Poly& a, const Poly& g, std::uint64_t p) {
  Poly r = rem(a, g, p);
  if (r.empty()) throw std::domain_error("quadratic character of zero");
  if (p == 2) return 1;
  Integer q = 1;
  for (int k = 0; k < degree(g); ++k) q *= Integer(std::to_string(p));
  Poly t = powmod(r, (q - 1) / 2, g, p);
  return is_one(t) ? 1 : -1;
}

std::optional<Poly> sqrt_in_residue_field(const Poly& a_in, const Poly& g, std::uint64_t p) {
  Poly a = rem(a_in, g, p);
  if (a.empty()) return Poly{};
  Integer pp(std::to_string(p));
  Integer q = 1;
  for (int k = 0; k < degree(g); ++k) q *= pp;
  if (p == 2) return powmod(a, q / 2, g, p);  // Frobenius inverse
  if (quadratic_character(a, g, p) != 1) return std::nullopt;
  Integer t = q - 1;
  unsigned s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t /= 2;
    ++s;
  }
  Poly z;
  for (std::uint64_t j = 0;; ++j) {
    Poly cand = degree(g) > 1 ? Poly{j % p, 1 + j / p} : Poly{j + 1};
    trim(cand);
    cand = rem(cand, g, p);
    if (cand.empty()) continue;
    if (quadratic_character(cand, g, p) == -1) {
      z = cand;
      break;
    }
  }
  Poly c = powmod(z, t, g, p);
  Poly x = powmod(a, (t + 1) / 2, g, p);
  Poly b = powmod(a, t, g, p);
  unsigned m = s;
  while (!is_one(b)) {
    unsigned i = 0;
    Poly bb = b;
    while (!is_one(bb)) {
      bb = mulmod(bb, bb, g, p);
      ++i;
    }
    Poly w = c;
    for (unsigned k = 0; k + 1 < m - i; ++k) w = mulmod(w, w, g, p);
    x = mulmod(x, w, g, p);
    c = mulmod(w, w, g, p);
    b = mulmod(b, c, g, p);
    m = i;
  }
  return x;
}

}  // namespace darmonlab::fp
