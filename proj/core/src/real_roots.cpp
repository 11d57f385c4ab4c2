#include "darmonlab/real_roots.hpp"

#include <stdexcept>

namespace darmonlab::real {

using upoly::QPoly;

namespace {

int sign(const Rational& q) { return sgn(q); }

int variations(const std::vector<QPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign(upoly::eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational cauchy_bound(const QPoly& f) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    Rational r = abs(f[i] / f.back());
    if (r > m) m = r;
  }
  return m + 1;
}

// A point strictly inside (lo, hi) where f does not vanish.
Rational split_point(const QPoly& f, const Rational& lo, const Rational& hi) {
  for (long k = 2;; ++k) {
    for (long j = 1; j < k; ++j) {
      Rational m = lo + (hi - lo) * Rational(j, k);
      if (upoly::eval(f, m) != 0) return m;
    }
  }
}

void isolate(const QPoly& f, const std::vector<QPoly>& seq, const Rational& lo, const Rational& hi,
             std::vector<Interval>& out) {
  int n = sturm_count(seq, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (upoly::eval(f, mid) == 0) {
    Rational left = split_point(f, lo, mid);
    Rational right = split_point(f, mid, hi);
    isolate(f, seq, lo, left, out);
    if (sturm_count(seq, left, mid) == 1 && sturm_count(seq, left, right) == 1)
      out.push_back({mid, mid});
    else
      isolate(f, seq, left, right, out);
    isolate(f, seq, right, hi, out);
    return;
  }
  isolate(f, seq, lo, mid, out);
  isolate(f, seq, mid, hi, out);
}

}  // namespace

std::vector<QPoly> sturm_sequence(const QPoly& f) {
  std::vector<QPoly> seq{f, upoly::derivative(f)};
  if (seq.back().empty()) {
    seq.pop_back();
    return seq;
  }
  while (true) {
    QPoly r = upoly::rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    seq.push_back(upoly::neg(r));
  }
  return seq;
}

int sturm_count(const std::vector<QPoly>& seq, const Rational& lo, const Rational& hi) {
  return variations(seq, lo) - variations(seq, hi);
}

std::vector<Interval> isolate_real_roots(const QPoly& f_in) {
  QPoly f = f_in;
  upoly::trim(f);
  if (upoly::degree(f) < 1) return {};
  f = upoly::squarefree_part(f);
  auto seq = sturm_sequence(f);
  Rational b = cauchy_bound(f);
  std::vector<Interval> out;
  isolate(f, seq, -b, b, out);
  for (auto& iv : out) {
    if (!iv.exact() && upoly::eval(f, iv.hi) == 0) iv.lo = iv.hi;
  }
  return out;
}

void bisect(const QPoly& f, Interval& iv) {
  if (iv.exact()) return;
  Rational mid = (iv.lo + iv.hi) / 2;
  Rational fm = upoly::eval(f, mid);
  if (fm == 0) {
    iv.lo = iv.hi = mid;
    return;
  }
  Rational flo = upoly::eval(f, iv.lo);
  if (sgn(flo) != sgn(fm))
    iv.hi = mid;
  else
    iv.lo = mid;
}

void refine_to_width(const QPoly& f, Interval& iv, const Rational& width) {
  while (!iv.exact() && iv.hi - iv.lo > width) bisect(f, iv);
}

int sign_at_root(const QPoly& f, Interval& iv, const QPoly& h_in) {
  QPoly h = upoly::rem(h_in, f);
  if (h.empty()) return 0;
  if (iv.exact()) return sgn(upoly::eval(h, iv.lo));
  QPoly hs = upoly::squarefree_part(h);
  if (upoly::degree(hs) == 0) return sgn(h[0]);
  QPoly common = upoly::gcd(f, hs);
  if (upoly::degree(common) >= 1 && sturm_count(sturm_sequence(common), iv.lo, iv.hi) > 0)
    return 0;
  auto seq = sturm_sequence(hs);
  for (int round = 0; round < 100000; ++round) {
    if (upoly::eval(hs, iv.lo) != 0 && upoly::eval(hs, iv.hi) != 0 &&
        sturm_count(seq, iv.lo, iv.hi) == 0)
      return sgn(upoly::eval(h, iv.hi));
    bisect(f, iv);
    if (iv.exact()) return sgn(upoly::eval(h, iv.lo));
  }
  throw std::runtime_error("sign_at_root: refinement did not separate roots");
}

double approximate(const Interval& iv) {
  Rational mid = (iv.lo + iv.hi) / 2;
  return mid.get_d();
}

}  // namespace darmonlab::real
