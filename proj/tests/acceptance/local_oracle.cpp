#include "local_oracle.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace acceptance {
namespace {

long power(long p, int k) {
  long r = 1;
  while (k-- > 0) r *= p;
  return r;
}

int val(long x, long p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0 && v < cap) x /= p, ++v;
  return v;
}

long mod(long x, long m) { return ((x % m) + m) % m; }

// Q(x, y, z) = a x^2 + b y^2 - z^2 with v_p(a), v_p(b) in {0, 1}. A primitive p-adic zero can
// be scaled so one coordinate is 1; the partial derivative in that coordinate then has
// valuation at most kmax, so a zero modulo p^(2 kmax + 1) passing the Hensel test exists iff a
// p-adic zero does.
bool search(long a, long b, long p) {
  const int kmax = p == 2 ? 2 : 1;
  const int N = 2 * kmax + 1;
  const long M = power(p, N);
  auto passes = [&](long x, long y, long z) {
    long q = mod(a * x % M * x + b * y % M * y - z * z, M);
    if (q != 0) return false;
    for (long d : {2 * a * x, 2 * b * y, 2 * z}) {
      int k = val(mod(d, M), p, N);
      if (2 * k + 1 <= N) return true;
    }
    return false;
  };
  // roots[r] lists t with t^2 = r and scaled[r] lists t with b t^2 = r, both modulo M.
  std::vector<std::vector<long>> roots(M), scaled(M);
  for (long t = 0; t < M; ++t) {
    roots[t * t % M].push_back(t);
    scaled[mod(b * t % M * t, M)].push_back(t);
  }
  for (long s = 0; s < M; ++s) {
    for (long t : roots[mod(a + b * s % M * s, M)])
      if (passes(1, s, t)) return true;
    for (long t : roots[mod(a * s % M * s + b, M)])
      if (passes(s, 1, t)) return true;
    for (long t : scaled[mod(1 - a * s % M * s, M)])
      if (passes(s, t, 1)) return true;
  }
  return false;
}

long strip_squares(long x, long p) {
  while (x % (p * p) == 0) x /= p * p;
  return x;
}

}  // namespace

int local_solvability(long a, long b, long p) {
  if (a == 0 || b == 0) throw std::invalid_argument("zero coefficient");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  a = strip_squares(a, p);
  b = strip_squares(b, p);
  static std::map<std::tuple<long, long, long>, int> cache;
  const long M = power(p, 5);
  auto key = std::make_tuple(p, mod(a, M), mod(b, M));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int r = search(a, b, p) ? 1 : -1;
  cache.emplace(key, r);
  return r;
}

}  // namespace acceptance
