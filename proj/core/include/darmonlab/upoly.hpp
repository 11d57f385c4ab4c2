#pragma once

// Dense univariate polynomials over Q, coefficients stored low degree first.
// The zero polynomial is the empty vector.

#include "darmonlab/integer.hpp"

#include <vector>

namespace darmonlab::upoly {

using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

void trim(QPoly& f);
int degree(const QPoly& f);  // -1 for zero
inline bool is_zero(const QPoly& f) { return f.empty(); }

QPoly from_integers(const ZPoly& f);
QPoly add(const QPoly& f, const QPoly& g);
QPoly sub(const QPoly& f, const QPoly& g);
QPoly mul(const QPoly& f, const QPoly& g);
QPoly scale(const QPoly& f, const Rational& c);
QPoly neg(const QPoly& f);
/// Quotient and remainder; g nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g);
QPoly rem(const QPoly& f, const QPoly& g);
QPoly monic(const QPoly& f);
QPoly gcd(const QPoly& f, const QPoly& g);
QPoly derivative(const QPoly& f);
Rational eval(const QPoly& f, const Rational& x);
/// f(-x)
QPoly reflect(const QPoly& f);
/// f / gcd(f, f'), monic.
QPoly squarefree_part(const QPoly& f);

/// Resultant via the Euclidean algorithm over Q.
Rational resultant(const QPoly& f, const QPoly& g);
/// Discriminant of a monic polynomial (sign convention (-1)^{n(n-1)/2} Res(f, f')).
Rational discriminant(const QPoly& f);

/// Rational roots, each once, ascending.
std::vector<Rational> rational_roots(const QPoly& f);

/// Multiply by the lcm of denominators and divide by content: primitive integer polynomial.
ZPoly primitive_integer(const QPoly& f);

/// True iff a monic integer polynomial is irreducible over Q.
bool is_irreducible(const ZPoly& f);

}  // namespace darmonlab::upoly
