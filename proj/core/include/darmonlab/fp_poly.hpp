#pragma once

// Polynomials over the prime field F_p (p < 2^63), low degree first.

#include "darmonlab/integer.hpp"
#include "darmonlab/upoly.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace darmonlab::fp {

using Poly = std::vector<std::uint64_t>;

struct Field {
  std::uint64_t p;
};

void trim(Poly& f);
int degree(const Poly& f);
Poly reduce(const upoly::ZPoly& f, std::uint64_t p);
/// Reduction of a Q-polynomial whose denominators are prime to p.
Poly reduce(const upoly::QPoly& f, std::uint64_t p);
upoly::ZPoly lift(const Poly& f);

Poly add(const Poly& f, const Poly& g, std::uint64_t p);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p);
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p);
Poly rem(const Poly& f, const Poly& g, std::uint64_t p);
Poly monic(const Poly& f, std::uint64_t p);
Poly gcd(const Poly& f, const Poly& g, std::uint64_t p);
/// (g, s, t) with s f + t h = g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& f, const Poly& h, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p);
/// Inverse of a modulo m (gcd must be 1).
Poly invmod(const Poly& a, const Poly& m, std::uint64_t p);
bool is_one(const Poly& f);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). Input must be nonzero.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, std::uint64_t p);

/// Square root in F_p[x]/(g), g irreducible, p odd. Empty optional for nonsquares.
std::optional<Poly> sqrt_in_residue_field(const Poly& a, const Poly& g, std::uint64_t p);

/// Quadratic character of a nonzero element of F_p[x]/(g), g irreducible of degree f.
int quadratic_character(const Poly& a, const Poly& g, std::uint64_t p);

}  // namespace darmonlab::fp
