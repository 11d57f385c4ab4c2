#pragma once
// Integral ideals of Z[theta] as Z-lattices in power-basis coordinates.
#include "darmonlab/number_field.hpp"

#include <vector>

namespace darmonlab {

/// Rows span the lattice; always d rows for a nonzero ideal.
using LatticeBasis = std::vector<std::vector<Integer>>;

/// Row Hermite normal form of the lattice spanned by full-rank generators.
LatticeBasis hermite_normal_form(std::vector<std::vector<Integer>> rows, std::size_t d);
LatticeBasis ideal_product(const NumberField& K, const LatticeBasis& A, const LatticeBasis& B);
LatticeBasis prime_power_lattice(const NumberField& K, const PrimeIdeal& P, long k);
/// The ideal prod P^k over the congruences, LLL-reduced.
LatticeBasis congruence_lattice(const NumberField& K, const std::vector<Congruence>& cong);
/// LLL with delta = 3/4 for the coordinate norm.
LatticeBasis lll_reduce(LatticeBasis b);
/// x minus a lattice vector close to x (nearest plane). x must be integral.
FieldElement reduce_modulo(const FieldElement& x, const LatticeBasis& reduced);
Integer lattice_determinant(const LatticeBasis& b);

}  // namespace darmonlab
