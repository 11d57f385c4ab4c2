#pragma once

// Membership oracles for the sets T, J, J4, J42, K^sf and friends through their
// valuation descriptions, plus local-global oracles used to cross-check them.

#include "darmonlab/local_symbols.hpp"

#include <array>
#include <optional>
#include <vector>

namespace darmonlab {

enum class Tristate { True, False, Unknown };

const char* to_string(Tristate t);

struct OracleResult {
  Tristate status = Tristate::Unknown;
  std::vector<FieldElement> witness;
};

struct ParamTuple {
  FieldElement a, b, c, d;
};

bool in_T(const FieldElement& a, const FieldElement& b, const FieldElement& r);
bool in_J(const FieldElement& a, const FieldElement& b, const FieldElement& r);
bool in_J4(const ParamTuple& t, const FieldElement& r);
bool in_J42(const ParamTuple& t, const FieldElement& r);
/// Rejects r = 0 (valuation undefined).
bool in_Ksf(const FieldElement& a, const FieldElement& b, const FieldElement& r);

bool is_sum_of_four_squares(const FieldElement& lambda);
std::optional<std::array<FieldElement, 4>> four_square_witness(const FieldElement& lambda,
                                                               long height_bound);

struct ArcplacesResult {
  bool condition = false;
  std::optional<FieldElement> certificate;  // c in T with c - 5 totally nonnegative
};
ArcplacesResult arcplaces_condition(const FieldElement& a, const FieldElement& b,
                                    long search_bound = 50);

/// Isotropy of the diagonal form with the given nonzero coefficients at one place.
bool form_isotropic_at(const std::vector<FieldElement>& coeffs, const Place& v);
/// Isotropy over K by the local-global principle.
bool form_isotropic(const std::vector<FieldElement>& coeffs);

bool in_S_oracle(const FieldElement& a, const FieldElement& b, const FieldElement& c);
OracleResult in_T_oracle(const FieldElement& a, const FieldElement& b, const FieldElement& t,
                         long height_bound);

struct DisjointResult {
  bool disjoint = false;
  std::optional<FieldElement> witness;  // x in J4(t1) with 1 - x in J4(t2)
};
DisjointResult disjoint_via_unit(const ParamTuple& t1, const ParamTuple& t2);

/// Elements of bounded height in canonical order: rationals p/q with max(|p|, q) = h for
/// h = 0, 1, ..., then (degree > 1) integral vectors with max |coordinate| = h.
std::vector<FieldElement> height_enumeration(const NumberField& K, long height_bound);

}  // namespace darmonlab
