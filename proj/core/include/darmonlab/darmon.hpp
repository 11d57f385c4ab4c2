#pragma once

// Darmon sets D_{K,S,n} and Darmon points on P^1 with weights on {x0 = 0} and {x1 = 0}.

#include "darmonlab/local_symbols.hpp"

#include <optional>

namespace darmonlab {

/// Positive integer weight or infinity.
struct Weight {
  unsigned long n = 1;
  bool infinite = false;

  static Weight finite(unsigned long n);
  static Weight infinity() { return {0, true}; }
  /// "3" or "inf".
  static Weight parse(std::string_view text);
  /// The divisor coefficient 1 - 1/n (1 for infinite weight).
  Rational coefficient() const;
  std::string to_string() const;
};

/// Multiplicity on P^1; std::nullopt stands for +infinity.
using Multiplicity = std::optional<long>;

struct DarmonQuery {
  NumberField field;
  Weight weight;
  PlaceSet S;  // finite places; the infinite places are always included
  FieldElement r;
};

/// Omega_{a,b,c,d,K}: the finite part of S in the parameterized form.
PlaceSet darmon_places(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                       const FieldElement& d);

bool in_darmon(const DarmonQuery& q);
bool in_darmon(const FieldElement& r, const PlaceSet& S, Weight n);

/// Exponent of P in (x1)(x0, x1)^{-1}; infinite when x1 = 0.
Multiplicity intersection_multiplicity(const FieldElement& x0, const FieldElement& x1,
                                       const PrimeIdeal& P);

bool is_darmon_point(const FieldElement& x0, const FieldElement& x1, Weight n0, Weight n1,
                     const PlaceSet& S);

/// r = a / b^n with gcd(a, b) = 1, decided with integer arithmetic only.
bool rational_power_oracle(const Rational& r, unsigned long n);
/// Same, for an element of Q; throws for any other field.
bool rational_power_oracle(const FieldElement& r, unsigned long n);

}  // namespace darmonlab
