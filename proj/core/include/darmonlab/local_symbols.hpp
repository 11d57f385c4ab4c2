#pragma once

// Quadratic Hilbert symbols, local squares and ramification sets of quaternion algebras.

#include "darmonlab/number_field.hpp"

#include <utility>
#include <vector>

namespace darmonlab {

/// +1 iff z^2 - a x^2 - b y^2 has a nontrivial zero over K_v.
int hilbert(const FieldElement& a, const FieldElement& b, const Place& v);

/// True iff x is a square in the completion K_v.
bool local_square(const FieldElement& x, const Place& v);

/// Real places plus every finite place where a or b has nonzero valuation, plus every place over 2.
PlaceSet candidate_places(const FieldElement& a, const FieldElement& b);

/// (place, symbol) for every candidate place.
std::vector<std::pair<Place, int>> symbol_table(const FieldElement& a, const FieldElement& b);

PlaceSet delta(const FieldElement& a, const FieldElement& b);
PlaceSet delta_upper(const FieldElement& a, const FieldElement& b);
PlaceSet omega(const FieldElement& a, const FieldElement& b, const FieldElement& c,
               const FieldElement& d);

bool reciprocity_check(const FieldElement& a, const FieldElement& b);

/// -4 <= sigma(x) <= 4 at the given real place.
bool archimedean_box(const FieldElement& x, std::size_t real_index);

/// Isotropy over K_P of z^2 - a x^2 - b y^2 at a place over 2 (a, b nonzero).
bool dyadic_isotropic(const FieldElement& a, const FieldElement& b, const PrimeIdeal& P);

/// Size of K_P^x / (K_P^x)^2 as computed by the dyadic machinery (P over 2).
std::size_t dyadic_square_class_count(const NumberField& K, const PrimeIdeal& P);

bool contains(const PlaceSet& S, const Place& v);
PlaceSet intersect(const PlaceSet& S, const PlaceSet& T);

}  // namespace darmonlab
