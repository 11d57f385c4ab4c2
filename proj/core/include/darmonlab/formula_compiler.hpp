#pragma once

// Defining formulas for the auxiliary sets and Darmon sets, assembled from the set
// definitions, together with their quantifier and degree budgets.

#include "darmonlab/formula.hpp"

#include <optional>
#include <string>
#include <vector>

namespace darmonlab {

enum class CombineMode { General, Real };

const char* to_string(CombineMode m);

struct CombineResult {
  Polynomial poly;
  /// "single", "sum-of-squares", "norm-form" or "pairing".
  std::string construction;
  /// m in x^k - m for the norm form, n_K for the pairing fallback.
  Integer parameter = 0;
  std::string certificate;
  unsigned long degree_bound = 0;
};

/// One polynomial whose zero set is the common zero set of the inputs.
CombineResult combine_conjunction(const std::vector<Polynomial>& polys, CombineMode mode,
                                  const NumberField& K);

/// Smallest prime p unramified in K; x^k - p is then Eisenstein at every prime above p.
Integer norm_form_prime(const NumberField& K);

/// exists(vars) (conjunction of atoms), with the combined defining polynomial.
struct Existential {
  std::vector<Variable> vars;
  std::vector<Polynomial> conjuncts;
  Polynomial poly;
  Formula body;  // quantifier-free matrix before combination
  Formula formula() const { return exists(vars, body); }
  /// exists(vars) (poly = 0)
  Formula combined() const { return exists(vars, atom(poly, Relation::Eq)); }
};

/// forall(uvars) exists(evars) (matrix = 0)
struct UniversalExistential {
  std::vector<Variable> uvars;
  std::vector<Variable> evars;
  Polynomial matrix;
  Formula formula;
};

class FormulaBuilder {
 public:
  FormulaBuilder(NumberField K, CombineMode mode);

  const NumberField& field() const { return K_; }
  CombineMode mode() const { return mode_; }
  VariablePool& pool() { return pool_; }
  const Integer& n_K() const { return n_K_; }

  Polynomial param(const std::string& name) { return pool_.parameter(name); }
  Polynomial subject(const std::string& name = "r") { return pool_.subject(name); }

  Existential S(const Polynomial& a, const Polynomial& b, const Polynomial& r);
  Existential T(const Polynomial& a, const Polynomial& b, const Polynomial& r);
  Existential T_units(const Polynomial& a, const Polynomial& b, const Polynomial& r);
  Existential I(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& r);
  Existential J(const Polynomial& a, const Polynomial& b, const Polynomial& r);
  Existential J4(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                 const Polynomial& d, const Polynomial& r);
  Existential J42(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                  const Polynomial& d, const Polynomial& r);
  /// (J42 \ {0})^{-1}
  Existential J42_inverse(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                          const Polynomial& d, const Polynomial& r);
  /// J42 union (J42 \ {0})^{-1}, as a product of the two defining polynomials.
  Existential J42_union(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                        const Polynomial& d, const Polynomial& r);
  /// abcda'b' != 0 and Delta^{a,b} meets Omega_{a',b',c,d} in no place.
  Existential disjoint(const Polynomial& a, const Polynomial& b, const Polynomial& a2,
                       const Polynomial& b2, const Polynomial& c, const Polynomial& d);
  /// abcda'b' = 0 or the disjointness condition.
  Existential disjoint_or_degenerate(const Polynomial& a, const Polynomial& b,
                                     const Polynomial& a2, const Polynomial& b2,
                                     const Polynomial& c, const Polynomial& d);
  UniversalExistential Ksf(const Polynomial& a, const Polynomial& b, const Polynomial& r);
  Existential arcplaces(const Polynomial& a, const Polynomial& b);
  /// Omega_{a,b,c,d} meets Delta^{a',b'} in no place and Delta_{a',b'} has no real place.
  Existential sim(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                  const Polynomial& d, const Polynomial& a2, const Polynomial& b2);
  Existential gcd(const Polynomial& a, const Polynomial& b, const Polynomial& y,
                  const Polynomial& z);
  /// exists y, z in T with gcd(y, z) = 1 and y = x z^n.
  Existential phi(const Polynomial& a, const Polynomial& b, const Polynomial& x, unsigned long n);

  Existential finish(std::vector<Variable> vars, std::vector<Polynomial> conjuncts);

 private:
  NumberField K_;
  CombineMode mode_;
  VariablePool pool_;
  Integer n_K_;
};

/// forall x (P != 0) or exists z (Q = 0)  ->  forall x exists y exists z ((yP - 1)Q = 0)
Formula rewrite_universal_or_exists(const Formula& f, VariablePool& pool);
/// exists x forall y (p != 0) or exists z (q = 0)
///   ->  exists x exists z forall y forall u (p^2 - n_K (u q - 1)^2 != 0)
Formula rewrite_existsforall_or_exists(const Formula& f, const Integer& n_K,
                                       const NumberField& K, VariablePool& pool);

Formula assemble_main(FormulaBuilder& fb, unsigned long n);
Formula assemble_empty(FormulaBuilder& fb, unsigned long n);

struct Budget {
  std::string name;
  QuantifierShape shape;
  unsigned long degree = 0;
  std::optional<unsigned long> real_degree;
  QuantifierShape claimed_shape;
  std::optional<unsigned long> claimed_degree;
  std::optional<unsigned long> claimed_real_degree;
  bool imported = false;

  bool shape_matches() const { return claimed_shape.empty() || shape == claimed_shape; }
  bool degree_matches() const;
  bool matches() const { return shape_matches() && degree_matches(); }
};

const std::vector<std::string>& template_names();
/// Formula with free parameters a, b, c, d, a', b' and subject r (x for phi and psi).
Formula build_template(FormulaBuilder& fb, const std::string& name, unsigned long n = 1);
/// Budget of a template or of an intermediate set (inv, union, D, E), both modes.
Budget template_budget(const NumberField& K, const std::string& name, unsigned long n = 1);
Budget main_budget(const NumberField& K, unsigned long n);
Budget empty_budget(const NumberField& K, unsigned long n);

struct LedgerEntry {
  std::string label;
  std::string expression;
  long computed = 0;
  long claimed = 0;
  /// "pass", "mismatch", "imported", "flagged" (known discrepancy) or "documented".
  std::string status;
  std::string note;
};

std::vector<LedgerEntry> budget_ledger(const NumberField& K, const std::vector<unsigned long>& ns);

}  // namespace darmonlab
