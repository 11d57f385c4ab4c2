#include "darmonlab/polynomial.hpp"

#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace darmonlab {

namespace detail {

struct PolyNode {
  enum class Kind { Const, Var, Add, Mul, Pow } kind = Kind::Const;
  Integer c = 0;
  Variable var;
  std::shared_ptr<const PolyNode> a, b;
  unsigned k = 0;
  unsigned long degree = 0;
};

}  // namespace detail

using detail::PolyNode;
using Kind = PolyNode::Kind;

Variable VariablePool::make(const std::string& name, VarKind kind) {
  return Variable{next_++, name, kind};
}

Variable VariablePool::parameter(const std::string& name) {
  auto it = named_.find(name);
  if (it != named_.end()) return it->second;
  return named_[name] = make(name, VarKind::Parameter);
}

Variable VariablePool::subject(const std::string& name) {
  auto it = named_.find(name);
  if (it != named_.end()) return it->second;
  return named_[name] = make(name, VarKind::Subject);
}

Variable VariablePool::fresh(const std::string& prefix) {
  unsigned n = ++counters_[prefix];
  return make(prefix + std::to_string(n), VarKind::Bound);
}

unsigned long total_degree(const SparsePolynomial& p) {
  unsigned long d = 0;
  for (const auto& [m, c] : p) {
    unsigned long s = 0;
    for (const auto& [v, e] : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

unsigned long degree_in(const SparsePolynomial& p, std::uint32_t var) {
  unsigned long d = 0;
  for (const auto& [m, c] : p)
    for (const auto& [v, e] : m)
      if (v == var) d = std::max<unsigned long>(d, e);
  return d;
}

namespace {

std::shared_ptr<const PolyNode> make_const(const Integer& c) {
  auto n = std::make_shared<PolyNode>();
  n->c = c;
  return n;
}

const std::shared_ptr<const PolyNode>& zero_node() {
  static const auto z = make_const(0);
  return z;
}

bool is_const(const PolyNode& n, long v) { return n.kind == Kind::Const && n.c == v; }

SparsePolynomial sparse_add(const SparsePolynomial& x, const SparsePolynomial& y) {
  SparsePolynomial out = x;
  for (const auto& [m, c] : y) {
    auto& slot = out[m];
    slot += c;
    if (slot == 0) out.erase(m);
  }
  return out;
}

Monomial monomial_mul(const Monomial& x, const Monomial& y) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      out.emplace_back(x[i].first, x[i].second + y[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

SparsePolynomial sparse_mul(const SparsePolynomial& x, const SparsePolynomial& y,
                            std::size_t max_terms) {
  SparsePolynomial out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Monomial m = monomial_mul(mx, my);
      auto& slot = out[m];
      slot += cx * cy;
      if (slot == 0) out.erase(m);
      if (out.size() > max_terms) throw std::length_error("expansion exceeds term limit");
    }
  return out;
}

}  // namespace

Polynomial::Polynomial() : n_(zero_node()) {}
Polynomial::Polynomial(long c) : Polynomial(Integer(c)) {}
Polynomial::Polynomial(const Integer& c) : n_(c == 0 ? zero_node() : make_const(c)) {}
Polynomial::Polynomial(const Variable& v) {
  auto n = std::make_shared<PolyNode>();
  n->kind = Kind::Var;
  n->var = v;
  n->degree = 1;
  n_ = n;
}

bool Polynomial::is_zero() const { return is_const(*n_, 0); }
bool Polynomial::is_constant() const { return n_->kind == Kind::Const; }
unsigned long Polynomial::degree() const { return n_->degree; }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_constant() && o.is_constant()) return Polynomial(n_->c + o.n_->c);
  auto n = std::make_shared<PolyNode>();
  n->kind = Kind::Add;
  n->a = n_;
  n->b = o.n_;
  n->degree = std::max(n_->degree, o.n_->degree);
  return Polynomial(std::shared_ptr<const PolyNode>(n));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  if (is_const(*n_, 1)) return o;
  if (is_const(*o.n_, 1)) return *this;
  if (is_constant() && o.is_constant()) return Polynomial(n_->c * o.n_->c);
  auto n = std::make_shared<PolyNode>();
  n->kind = Kind::Mul;
  n->a = n_;
  n->b = o.n_;
  n->degree = n_->degree + o.n_->degree;
  return Polynomial(std::shared_ptr<const PolyNode>(n));
}

Polynomial Polynomial::operator-() const { return Polynomial(-1) * *this; }
Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::pow(unsigned k) const {
  if (k == 0) return Polynomial(1);
  if (k == 1 || is_zero() || is_const(*n_, 1)) return *this;
  if (is_constant()) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), n_->c.get_mpz_t(), k);
    return Polynomial(r);
  }
  auto n = std::make_shared<PolyNode>();
  n->kind = Kind::Pow;
  n->a = n_;
  n->k = k;
  n->degree = n_->degree * k;
  return Polynomial(std::shared_ptr<const PolyNode>(n));
}

Polynomial sum(const std::vector<Polynomial>& terms) {
  if (terms.empty()) return Polynomial();
  std::vector<Polynomial> level = terms;
  while (level.size() > 1) {
    std::vector<Polynomial> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level.swap(next);
  }
  return level[0];
}

Polynomial product(const std::vector<Polynomial>& factors) {
  if (factors.empty()) return Polynomial(1);
  std::vector<Polynomial> level = factors;
  while (level.size() > 1) {
    std::vector<Polynomial> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level.swap(next);
  }
  return level[0];
}

std::size_t Polynomial::node_count() const {
  std::unordered_set<const PolyNode*> seen;
  std::vector<const PolyNode*> stack{n_.get()};
  while (!stack.empty()) {
    const PolyNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->a) stack.push_back(n->a.get());
    if (n->b) stack.push_back(n->b.get());
  }
  return seen.size();
}

std::vector<Variable> Polynomial::variables() const {
  std::unordered_set<const PolyNode*> seen;
  std::set<Variable> vars;
  std::vector<const PolyNode*> stack{n_.get()};
  while (!stack.empty()) {
    const PolyNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->kind == Kind::Var) vars.insert(n->var);
    if (n->a) stack.push_back(n->a.get());
    if (n->b) stack.push_back(n->b.get());
  }
  return {vars.begin(), vars.end()};
}

Rational Polynomial::evaluate(const Assignment& values) const {
  std::unordered_map<const PolyNode*, Rational> memo;
  std::function<Rational(const PolyNode*)> go = [&](const PolyNode* n) -> Rational {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Rational r;
    switch (n->kind) {
      case Kind::Const:
        r = n->c;
        break;
      case Kind::Var: {
        auto v = values.find(n->var.id);
        if (v == values.end()) throw std::out_of_range("unassigned variable " + n->var.name);
        r = v->second;
        break;
      }
      case Kind::Add:
        r = go(n->a.get()) + go(n->b.get());
        break;
      case Kind::Mul:
        r = go(n->a.get()) * go(n->b.get());
        break;
      case Kind::Pow: {
        Rational base = go(n->a.get());
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n->k);
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n->k);
        break;
      }
    }
    memo.emplace(n, r);
    return r;
  };
  return go(n_.get());
}

SparsePolynomial Polynomial::expand(const Assignment& partial, std::size_t max_terms) const {
  std::unordered_map<const PolyNode*, SparsePolynomial> memo;
  std::function<const SparsePolynomial&(const PolyNode*)> go =
      [&](const PolyNode* n) -> const SparsePolynomial& {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    SparsePolynomial r;
    switch (n->kind) {
      case Kind::Const:
        if (n->c != 0) r[{}] = n->c;
        break;
      case Kind::Var: {
        auto v = partial.find(n->var.id);
        if (v == partial.end())
          r[{{n->var.id, 1}}] = 1;
        else if (v->second != 0)
          r[{}] = v->second;
        break;
      }
      case Kind::Add:
        r = sparse_add(go(n->a.get()), go(n->b.get()));
        break;
      case Kind::Mul:
        r = sparse_mul(go(n->a.get()), go(n->b.get()), max_terms);
        break;
      case Kind::Pow: {
        const SparsePolynomial& base = go(n->a.get());
        r[{}] = 1;
        for (unsigned i = 0; i < n->k; ++i) r = sparse_mul(r, base, max_terms);
        break;
      }
    }
    if (r.size() > max_terms) throw std::length_error("expansion exceeds term limit");
    return memo.emplace(n, std::move(r)).first->second;
  };
  return go(n_.get());
}

std::string to_sexpr(const SparsePolynomial& p, const std::map<std::uint32_t, std::string>& names) {
  std::string out = "(poly (";
  bool first = true;
  for (const auto& [m, c] : p) {
    if (!first) out += ' ';
    first = false;
    out += "(" + c.get_str() + " (";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += ' ';
      auto it = names.find(m[i].first);
      out += "(" + (it == names.end() ? "v" + std::to_string(m[i].first) : it->second) + " " +
             std::to_string(m[i].second) + ")";
    }
    out += "))";
  }
  return out + "))";
}

std::vector<Instruction> Polynomial::program() const {
  std::vector<Instruction> out;
  std::unordered_map<const PolyNode*, std::size_t> index;
  std::vector<std::pair<const PolyNode*, bool>> stack{{n_.get(), false}};
  while (!stack.empty()) {
    auto [n, ready] = stack.back();
    stack.pop_back();
    if (index.count(n)) continue;
    if (!ready) {
      stack.push_back({n, true});
      if (n->b) stack.push_back({n->b.get(), false});
      if (n->a) stack.push_back({n->a.get(), false});
      continue;
    }
    Instruction ins;
    switch (n->kind) {
      case Kind::Const: ins.op = Instruction::Op::Const; ins.value = n->c; break;
      case Kind::Var: ins.op = Instruction::Op::Var; ins.var = n->var; break;
      case Kind::Add: ins.op = Instruction::Op::Add; break;
      case Kind::Mul: ins.op = Instruction::Op::Mul; break;
      case Kind::Pow: ins.op = Instruction::Op::Pow; ins.exponent = n->k; break;
    }
    if (n->a) ins.lhs = index.at(n->a.get());
    if (n->b) ins.rhs = index.at(n->b.get());
    index[n] = out.size();
    out.push_back(std::move(ins));
  }
  return out;
}

}  // namespace darmonlab
