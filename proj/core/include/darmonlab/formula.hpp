#pragma once

// First-order formulas over a field with polynomial atoms, their quantifier shape and a
// bounded semantics used for spot checks.

#include "darmonlab/definable_sets.hpp"
#include "darmonlab/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace darmonlab {

enum class Relation { Eq, Neq };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  enum class Kind { Atom, And, Or, Not, Forall, Exists };
  Kind kind = Kind::Atom;
  Polynomial poly;
  Relation rel = Relation::Eq;
  std::vector<Formula> children;
  std::vector<Variable> vars;  // quantifier blocks
};

Formula atom(Polynomial p, Relation rel);
Formula conj(std::vector<Formula> fs);
Formula disj(std::vector<Formula> fs);
Formula negate(Formula f);
/// Empty blocks are dropped; directly nested blocks of the same kind are merged.
Formula forall(std::vector<Variable> vars, Formula body);
Formula exists(std::vector<Variable> vars, Formula body);

/// Alternating (quantifier, count) list of the prenex prefix, e.g. {('A', 2), ('E', 2266)}.
using QuantifierShape = std::vector<std::pair<char, std::size_t>>;
QuantifierShape quantifier_shape(const Formula& f);
std::string to_string(const QuantifierShape& s);
bool is_quantifier_free(const Formula& f);
bool is_prenex(const Formula& f);
/// Pulls quantifiers outward in left-to-right order; bound variables must already be distinct.
Formula prenex(const Formula& f);
/// Largest structural degree among the atoms.
unsigned long max_degree(const Formula& f);
std::vector<Variable> free_variables(const Formula& f);

/// (forall (x1 ...) (exists (...) (neq POLY 0))); throws std::length_error for atoms too large
/// to expand within max_terms.
std::string to_sexpr(const Formula& f, std::size_t max_terms = 20000);

/// Exact truth value of a quantifier-free formula at a full assignment.
bool evaluate_qf(const Formula& f, const Assignment& values);

/// Rationals of height at most h in canonical order.
std::vector<Rational> rationals_by_height(long h);

/// Three-valued bounded semantics. A quantifier block over atoms is decided by enumerating all
/// but one relevant variable in height order and solving the remaining one exactly through its
/// rational roots; a block with a single relevant variable is therefore decided exactly.
/// Searches that exhaust their range without a decision report Unknown.
Tristate evaluate_bounded(const Formula& f, const Assignment& values, long height);

/// Witness for an existential block (exists vars (conjunction of atoms)) in canonical order.
std::optional<std::vector<Rational>> bounded_search(const Formula& f, const Assignment& values,
                                                    long height);

}  // namespace darmonlab
