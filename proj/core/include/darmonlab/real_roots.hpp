#pragma once

// Exact real root isolation with Sturm sequences over rational intervals.

#include "darmonlab/upoly.hpp"

#include <vector>

namespace darmonlab::real {

/// A root of f inside (lo, hi), or exactly lo when lo == hi.
struct Interval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

std::vector<upoly::QPoly> sturm_sequence(const upoly::QPoly& f);

/// Number of distinct real roots of seq[0] in (lo, hi].
int sturm_count(const std::vector<upoly::QPoly>& seq, const Rational& lo, const Rational& hi);

/// Isolating intervals for the distinct real roots of f, ascending.
std::vector<Interval> isolate_real_roots(const upoly::QPoly& f);

/// Halve an isolating interval of the squarefree polynomial f.
void bisect(const upoly::QPoly& f, Interval& iv);

/// Refine until hi - lo <= width.
void refine_to_width(const upoly::QPoly& f, Interval& iv, const Rational& width);

/// Sign (-1, 0, +1) of h at the root of f isolated by iv. iv is refined in place.
int sign_at_root(const upoly::QPoly& f, Interval& iv, const upoly::QPoly& h);

/// Midpoint approximation as a double, for display only.
double approximate(const Interval& iv);

}  // namespace darmonlab::real
