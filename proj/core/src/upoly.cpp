#include "darmonlab/upoly.hpp"

#include "darmonlab/fp_poly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace darmonlab::upoly {

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly from_integers(const ZPoly& f) {
  QPoly out(f.begin(), f.end());
  trim(out);
  return out;
}

QPoly add(const QPoly& f, const QPoly& g) {
  QPoly out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
  trim(out);
  return out;
}

QPoly sub(const QPoly& f, const QPoly& g) {
  QPoly out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly& f, const QPoly& g) {
  if (f.empty() || g.empty()) return {};
  QPoly out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  trim(out);
  return out;
}

QPoly scale(const QPoly& f, const Rational& c) {
  QPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * c;
  trim(out);
  return out;
}

QPoly neg(const QPoly& f) { return scale(f, Rational(-1)); }

std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g) {
  if (g.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r = f;
  trim(r);
  if (r.size() < g.size()) return {{}, r};
  QPoly q(r.size() - g.size() + 1);
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(g.size()) - 1; --i) {
    if (r[i] == 0) continue;
    Rational c = r[i] / g.back();
    std::size_t shift = i - (g.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j) r[shift + j] -= c * g[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

QPoly rem(const QPoly& f, const QPoly& g) { return divmod(f, g).second; }

QPoly monic(const QPoly& f) {
  if (f.empty()) return f;
  return scale(f, 1 / f.back());
}

QPoly gcd(const QPoly& f, const QPoly& g) {
  QPoly a = f, b = g;
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly derivative(const QPoly& f) {
  if (f.size() <= 1) return {};
  QPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<long>(i);
  trim(out);
  return out;
}

Rational eval(const QPoly& f, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

QPoly reflect(const QPoly& f) {
  QPoly out = f;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

QPoly squarefree_part(const QPoly& f) {
  if (f.empty()) return f;
  QPoly g = gcd(f, derivative(f));
  return monic(divmod(f, g).first);
}

Rational resultant(const QPoly& f_in, const QPoly& g_in) {
  QPoly f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  Rational res = 1;
  while (true) {
    int m = degree(f), n = degree(g);
    if (n == 0) {
      Rational c = g[0];
      Rational p = 1;
      for (int i = 0; i < m; ++i) p *= c;
      return res * p;
    }
    QPoly r = rem(f, g);
    if (r.empty()) return 0;
    int k = degree(r);
    // Res(f, g) = (-1)^{mn} lc(g)^{m-k} Res(g, r)
    if ((m * n) % 2 == 1) res = -res;
    for (int i = 0; i < m - k; ++i) res *= g.back();
    f = std::move(g);
    g = std::move(r);
  }
}

Rational discriminant(const QPoly& f) {
  int n = degree(f);
  if (n < 1) throw std::domain_error("discriminant of a constant");
  Rational r = resultant(f, derivative(f)) / f.back();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

ZPoly primitive_integer(const QPoly& f_in) {
  QPoly f = f_in;
  trim(f);
  if (f.empty()) return {};
  Integer l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly out(f.size());
  Integer g = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rational t = f[i] * l;
    out[i] = t.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

std::vector<Rational> rational_roots(const QPoly& f_in) {
  std::vector<Rational> roots;
  QPoly f = f_in;
  trim(f);
  if (degree(f) < 1) return roots;
  std::size_t low = 0;
  while (f[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    f.erase(f.begin(), f.begin() + static_cast<long>(low));
  }
  if (degree(f) >= 1) {
    ZPoly z = primitive_integer(f);
    auto num = positive_divisors(z.front());
    auto den = positive_divisors(z.back());
    std::set<Rational> seen;
    for (const auto& a : num)
      for (const auto& b : den)
        for (int s : {1, -1}) {
          Rational x(a * s, b);
          x.canonicalize();
          if (seen.insert(x).second && eval(f, x) == 0) roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Degrees of possible factors consistent with the factorization mod p.
std::set<int> subset_sums(const std::vector<int>& degs) {
  std::set<int> sums{0};
  for (int d : degs) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

// Lagrange interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  QPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly term{Rational(ys[i])};
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      Rational inv = Rational(1) / Rational(xs[i] - xs[j]);
      term = mul(term, QPoly{Rational(-xs[j]) * inv, inv});
    }
    out = add(out, term);
  }
  return out;
}

// Kronecker search for a factor of degree k.
bool has_factor_of_degree(const QPoly& f, int k) {
  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> choices;
  for (long x = 0; static_cast<int>(xs.size()) <= k; x = (x <= 0 ? 1 - x : -x)) {
    Rational v = eval(f, Rational(x));
    if (v == 0) return true;
    xs.emplace_back(x);
    std::vector<Integer> ds;
    for (const auto& d : positive_divisors(v.get_num())) {
      ds.push_back(d);
      ds.push_back(-d);
    }
    choices.push_back(std::move(ds));
  }
  std::vector<Integer> ys(xs.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == xs.size()) {
      QPoly g = interpolate(xs, ys);
      if (degree(g) != k) return false;
      for (const auto& c : g)
        if (c.get_den() != 1) return false;
      return rem(f, g).empty();
    }
    for (const auto& d : choices[i]) {
      if (i == 0 && d < 0) continue;  // fix the sign of the factor
      ys[i] = d;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool is_irreducible(const ZPoly& f_in) {
  QPoly f = from_integers(f_in);
  int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  if (degree(gcd(f, derivative(f))) > 0) return false;
  Rational disc = discriminant(f);
  std::set<int> possible;
  for (int k = 0; k <= n; ++k) possible.insert(k);
  int used = 0;
  for (auto p : primes_up_to(2000)) {
    if (used >= 25) break;
    if (mpz_divisible_ui_p(disc.get_num().get_mpz_t(), p)) continue;
    if (mpz_divisible_ui_p(f_in.back().get_mpz_t(), p)) continue;
    std::vector<int> degs;
    for (const auto& [g, e] : fp::factor(fp::reduce(f_in, p), p))
      for (unsigned i = 0; i < e; ++i) degs.push_back(fp::degree(g));
    std::set<int> sums = subset_sums(degs), inter;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                          std::inserter(inter, inter.begin()));
    possible = std::move(inter);
    ++used;
    if (possible.size() == 2) return true;
  }
  for (int k : possible) {
    if (k == 0 || 2 * k > n) continue;
    if (has_factor_of_degree(f, k)) return false;
  }
  return true;
}

}  // namespace darmonlab::upoly
