#pragma once

// Integer polynomials in many variables, stored as shared expression graphs so that
// formulas of very high degree can be assembled, measured and evaluated without expansion.

#include "darmonlab/integer.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace darmonlab {

enum class VarKind { Parameter, Subject, Bound };

struct Variable {
  std::uint32_t id = 0;
  std::string name;
  VarKind kind = VarKind::Bound;

  bool operator==(const Variable& o) const { return id == o.id; }
  bool operator<(const Variable& o) const { return id < o.id; }
};

/// Hands out variables with distinct ids and readable names.
class VariablePool {
 public:
  Variable parameter(const std::string& name);
  Variable subject(const std::string& name);
  /// Fresh bound variable named prefix + counter.
  Variable fresh(const std::string& prefix);

 private:
  Variable make(const std::string& name, VarKind kind);
  std::uint32_t next_ = 0;
  std::map<std::string, Variable> named_;
  std::map<std::string, unsigned> counters_;
};

/// Sparse expansion: monomial (sorted (variable id, exponent) pairs) to coefficient.
using Monomial = std::vector<std::pair<std::uint32_t, unsigned>>;
using SparsePolynomial = std::map<Monomial, Rational>;

unsigned long total_degree(const SparsePolynomial& p);
unsigned long degree_in(const SparsePolynomial& p, std::uint32_t var);

using Assignment = std::unordered_map<std::uint32_t, Rational>;

namespace detail {
struct PolyNode;
}

/// One step of a straight-line program; operands refer to earlier steps.
struct Instruction {
  enum class Op { Const, Var, Add, Mul, Pow };
  Op op = Op::Const;
  Integer value = 0;
  Variable var;
  std::size_t lhs = 0, rhs = 0;
  unsigned exponent = 0;
};

class Polynomial {
 public:
  Polynomial();  // zero
  Polynomial(long c);
  Polynomial(const Integer& c);
  Polynomial(const Variable& v);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;

  bool is_zero() const;
  bool is_constant() const;
  /// Structural total degree; exact for graphs without cancellation.
  unsigned long degree() const;
  /// Number of distinct graph nodes.
  std::size_t node_count() const;
  std::vector<Variable> variables() const;

  /// Exact value; throws std::out_of_range when a variable is unassigned.
  Rational evaluate(const Assignment& values) const;
  /// Expansion with the assigned variables substituted. Throws std::length_error past max_terms.
  SparsePolynomial expand(const Assignment& partial = {}, std::size_t max_terms = 200000) const;

  /// Shared graph as a straight-line program whose last step is the polynomial itself.
  std::vector<Instruction> program() const;

  const detail::PolyNode* node() const { return n_.get(); }

 private:
  explicit Polynomial(std::shared_ptr<const detail::PolyNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const detail::PolyNode> n_;
};

Polynomial sum(const std::vector<Polynomial>& terms);
Polynomial product(const std::vector<Polynomial>& factors);

/// (poly ((coeff ((var exp) ...)) ...)) with variable names from the pool of the polynomial.
std::string to_sexpr(const SparsePolynomial& p, const std::map<std::uint32_t, std::string>& names);

}  // namespace darmonlab
