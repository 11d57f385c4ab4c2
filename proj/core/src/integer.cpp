#include "darmonlab/integer.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace darmonlab {

namespace {

constexpr unsigned long kTrialBound = 10000;

// Returns 1 when the step budget runs out first.
Integer pollard_brent(const Integer& n, unsigned long seed, long* budget = nullptr) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_srcptr N = n.get_mpz_t();
  Integer y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys, tmp;
  auto step = [&](Integer& v) {
    mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), N);
  };
  const unsigned long m = 128;
  for (unsigned long r = 1; g == 1; r *= 2) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    for (unsigned long k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        if (budget && (*budget)-- <= 0) return 1;
        step(y);
        mpz_sub(tmp.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        mpz_mul(q.get_mpz_t(), q.get_mpz_t(), tmp.get_mpz_t());
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), N);
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), N);
    }
  }
  if (g == n) {
    do {
      step(ys);
      mpz_sub(tmp.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), N);
    } while (g == 1);
  }
  return g;
}

bool factor_rec(const Integer& n, std::vector<Integer>& out, long* budget = nullptr) {
  if (n == 1) return true;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return true;
  }
  if (auto r = exact_root(n, 2)) return factor_rec(*r, out, budget) && factor_rec(*r, out, budget);
  for (unsigned long seed = 2;; ++seed) {
    Integer d = pollard_brent(n, seed, budget);
    if (budget && *budget <= 0) return false;
    if (d != 1 && d != n) return factor_rec(d, out, budget) && factor_rec(n / d, out, budget);
  }
}

std::vector<std::pair<Integer, unsigned>> collect(std::vector<Integer>& primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

std::vector<Integer> trial_divide(Integer& n) {
  std::vector<Integer> primes;
  for (unsigned long p = 2; p <= kTrialBound && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  return primes;
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n_in) {
  if (n_in == 0) throw std::domain_error("factor_integer: zero");
  Integer n = abs(n_in);
  std::vector<Integer> primes = trial_divide(n);
  if (n > 1) factor_rec(n, primes);
  return collect(primes);
}

std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer_bounded(
    const Integer& n_in, long max_steps, std::size_t max_bits) {
  if (n_in == 0) throw std::domain_error("factor_integer: zero");
  Integer n = abs(n_in);
  std::vector<Integer> primes = trial_divide(n);
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > max_bits && !is_probable_prime(n)) return std::nullopt;
  long budget = max_steps;
  if (n > 1 && !factor_rec(n, primes, &budget)) return std::nullopt;
  return collect(primes);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

unsigned valuation_p(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

long valuation_p(const Rational& q, const Integer& p) {
  if (q == 0) throw std::domain_error("valuation of zero");
  return static_cast<long>(valuation_p(q.get_num(), p)) -
         static_cast<long>(valuation_p(q.get_den(), p));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string t) {
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
            t.end());
    return t;
  };
  s = strip(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  Integer num, den = 1;
  auto parse_int = [](const std::string& t, Integer& out) {
    if (t.empty()) throw std::invalid_argument("malformed rational");
    std::size_t start = (t[0] == '-') ? 1 : 0;
    if (start == t.size()) throw std::invalid_argument("malformed rational: " + t);
    for (std::size_t i = start; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("malformed rational: " + t);
    out.set_str(t, 10);
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
    if (den == 0) throw std::invalid_argument("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Integer> exact_root(const Integer& n, unsigned k) {
  if (k == 0) throw std::domain_error("zeroth root");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Integer r;
  Integer a = abs(n);
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  return n < 0 ? Integer(-r) : r;
}

std::uint64_t to_u64(const Integer& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
    throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_symmetric(const Integer& a, const Integer& m) {
  Integer r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  return static_cast<std::uint64_t>(s % m);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : static_cast<std::uint64_t>(m - (b - a));
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  Integer r, aa(std::to_string(a)), mm(std::to_string(m));
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw std::domain_error("invmod: not invertible");
  return to_u64(r);
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace darmonlab
