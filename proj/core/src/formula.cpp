#include "darmonlab/formula.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace darmonlab {

using Kind = FormulaNode::Kind;

namespace {

Formula make(Kind k, std::vector<Formula> children = {}, std::vector<Variable> vars = {}) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->children = std::move(children);
  n->vars = std::move(vars);
  return n;
}

Formula quantify(Kind k, std::vector<Variable> vars, Formula body) {
  if (vars.empty()) return body;
  if (body->kind == k) {
    vars.insert(vars.end(), body->vars.begin(), body->vars.end());
    return make(k, body->children, std::move(vars));
  }
  return make(k, {std::move(body)}, std::move(vars));
}

bool is_quantifier(Kind k) { return k == Kind::Forall || k == Kind::Exists; }

}  // namespace

Formula atom(Polynomial p, Relation rel) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Atom;
  n->poly = std::move(p);
  n->rel = rel;
  return n;
}

Formula conj(std::vector<Formula> fs) {
  if (fs.size() == 1) return fs[0];
  return make(Kind::And, std::move(fs));
}

Formula disj(std::vector<Formula> fs) {
  if (fs.size() == 1) return fs[0];
  return make(Kind::Or, std::move(fs));
}

Formula negate(Formula f) { return make(Kind::Not, {std::move(f)}); }

Formula forall(std::vector<Variable> vars, Formula body) {
  return quantify(Kind::Forall, std::move(vars), std::move(body));
}

Formula exists(std::vector<Variable> vars, Formula body) {
  return quantify(Kind::Exists, std::move(vars), std::move(body));
}

bool is_quantifier_free(const Formula& f) {
  if (is_quantifier(f->kind)) return false;
  for (const auto& c : f->children)
    if (!is_quantifier_free(c)) return false;
  return true;
}

bool is_prenex(const Formula& f) {
  const FormulaNode* n = f.get();
  while (is_quantifier(n->kind)) n = n->children[0].get();
  for (const auto& c : n->children)
    if (!is_quantifier_free(c)) return false;
  return true;
}

QuantifierShape quantifier_shape(const Formula& f) {
  QuantifierShape shape;
  const FormulaNode* n = f.get();
  while (is_quantifier(n->kind)) {
    char q = n->kind == Kind::Forall ? 'A' : 'E';
    if (!shape.empty() && shape.back().first == q)
      shape.back().second += n->vars.size();
    else
      shape.emplace_back(q, n->vars.size());
    n = n->children[0].get();
  }
  return shape;
}

std::string to_string(const QuantifierShape& s) {
  std::string out;
  for (const auto& [q, k] : s) {
    if (!out.empty()) out += ' ';
    out += (q == 'A' ? "forall^" : "exists^") + std::to_string(k);
  }
  return out.empty() ? "quantifier-free" : out;
}

namespace {

struct Pulled {
  std::vector<std::pair<Kind, std::vector<Variable>>> prefix;
  Formula matrix;
};

Kind dual(Kind k) { return k == Kind::Forall ? Kind::Exists : Kind::Forall; }

Pulled pull(const Formula& f, std::set<std::uint32_t>& bound) {
  switch (f->kind) {
    case Kind::Atom:
      return {{}, f};
    case Kind::Forall:
    case Kind::Exists: {
      for (const auto& v : f->vars)
        if (!bound.insert(v.id).second)
          throw std::invalid_argument("variable bound twice: " + v.name);
      Pulled inner = pull(f->children[0], bound);
      inner.prefix.insert(inner.prefix.begin(), {f->kind, f->vars});
      return inner;
    }
    case Kind::Not: {
      Pulled inner = pull(f->children[0], bound);
      for (auto& [k, vars] : inner.prefix) k = dual(k);
      inner.matrix = negate(inner.matrix);
      return inner;
    }
    case Kind::And:
    case Kind::Or: {
      Pulled out;
      std::vector<Formula> mats;
      for (const auto& c : f->children) {
        Pulled p = pull(c, bound);
        out.prefix.insert(out.prefix.end(), p.prefix.begin(), p.prefix.end());
        mats.push_back(p.matrix);
      }
      out.matrix = f->kind == Kind::And ? conj(mats) : disj(mats);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Formula prenex(const Formula& f) {
  std::set<std::uint32_t> bound;
  Pulled p = pull(f, bound);
  for (const auto& v : free_variables(f))
    if (bound.count(v.id)) throw std::invalid_argument("variable both free and bound: " + v.name);
  Formula out = p.matrix;
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it)
    out = it->first == Kind::Forall ? forall(it->second, out) : exists(it->second, out);
  return out;
}

unsigned long max_degree(const Formula& f) {
  if (f->kind == Kind::Atom) return f->poly.degree();
  unsigned long d = 0;
  for (const auto& c : f->children) d = std::max(d, max_degree(c));
  return d;
}

namespace {

void collect_free(const Formula& f, std::set<std::uint32_t>& bound, std::set<Variable>& out) {
  if (f->kind == Kind::Atom) {
    for (const auto& v : f->poly.variables())
      if (!bound.count(v.id)) out.insert(v);
    return;
  }
  std::vector<std::uint32_t> added;
  for (const auto& v : f->vars)
    if (bound.insert(v.id).second) added.push_back(v.id);
  for (const auto& c : f->children) collect_free(c, bound, out);
  for (auto id : added) bound.erase(id);
}

void collect_names(const Formula& f, std::map<std::uint32_t, std::string>& names) {
  if (f->kind == Kind::Atom) {
    for (const auto& v : f->poly.variables()) names[v.id] = v.name;
    return;
  }
  for (const auto& v : f->vars) names[v.id] = v.name;
  for (const auto& c : f->children) collect_names(c, names);
}

std::string sexpr(const Formula& f, const std::map<std::uint32_t, std::string>& names,
                  std::size_t max_terms) {
  switch (f->kind) {
    case Kind::Atom:
      return std::string("(") + (f->rel == Relation::Eq ? "eq " : "neq ") +
             to_sexpr(f->poly.expand({}, max_terms), names) + " 0)";
    case Kind::Not:
      return "(not " + sexpr(f->children[0], names, max_terms) + ")";
    case Kind::And:
    case Kind::Or: {
      std::string out = f->kind == Kind::And ? "(and" : "(or";
      for (const auto& c : f->children) out += " " + sexpr(c, names, max_terms);
      return out + ")";
    }
    case Kind::Forall:
    case Kind::Exists: {
      std::string out = f->kind == Kind::Forall ? "(forall (" : "(exists (";
      for (std::size_t i = 0; i < f->vars.size(); ++i) out += (i ? " " : "") + f->vars[i].name;
      return out + ") " + sexpr(f->children[0], names, max_terms) + ")";
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<Variable> free_variables(const Formula& f) {
  std::set<std::uint32_t> bound;
  std::set<Variable> out;
  collect_free(f, bound, out);
  return {out.begin(), out.end()};
}

std::string to_sexpr(const Formula& f, std::size_t max_terms) {
  std::map<std::uint32_t, std::string> names;
  collect_names(f, names);
  return sexpr(f, names, max_terms);
}

bool evaluate_qf(const Formula& f, const Assignment& values) {
  switch (f->kind) {
    case Kind::Atom: {
      bool zero = f->poly.evaluate(values) == 0;
      return f->rel == Relation::Eq ? zero : !zero;
    }
    case Kind::Not:
      return !evaluate_qf(f->children[0], values);
    case Kind::And:
      for (const auto& c : f->children)
        if (!evaluate_qf(c, values)) return false;
      return true;
    case Kind::Or:
      for (const auto& c : f->children)
        if (evaluate_qf(c, values)) return true;
      return false;
    default:
      throw std::invalid_argument("evaluate_qf needs a quantifier-free formula");
  }
}

std::vector<Rational> rationals_by_height(long h) {
  std::vector<Rational> out{Rational(0)};
  for (long k = 1; k <= h; ++k)
    for (long q = 1; q <= k; ++q)
      for (long p = (q == k ? 1 : k); p <= k; ++p) {
        if (std::gcd(p, q) != 1) continue;
        out.emplace_back(p, q);
        out.emplace_back(-p, q);
      }
  return out;
}

namespace {

constexpr long kTupleBudget = 200000;

void collect_atoms(const Formula& f, std::vector<const FormulaNode*>& out) {
  if (f->kind == Kind::Atom) {
    out.push_back(f.get());
    return;
  }
  for (const auto& c : f->children) collect_atoms(c, out);
}

upoly::QPoly univariate(const SparsePolynomial& p, std::uint32_t var) {
  upoly::QPoly out;
  for (const auto& [m, c] : p) {
    unsigned e = 0;
    for (const auto& [v, k] : m) {
      if (v != var) throw std::logic_error("polynomial is not univariate");
      e = k;
    }
    if (out.size() <= e) out.resize(e + 1);
    out[e] += c;
  }
  upoly::trim(out);
  return out;
}

struct BlockOutcome {
  Tristate status = Tristate::Unknown;
  Assignment witness;
};

// Decides exists(vars) body for a quantifier-free body under `values`.
BlockOutcome solve_block(const std::vector<Variable>& vars, const Formula& body,
                         const Assignment& values, long height) {
  std::vector<const FormulaNode*> atoms;
  collect_atoms(body, atoms);
  std::vector<SparsePolynomial> expanded;
  for (const auto* a : atoms) expanded.push_back(a->poly.expand(values));

  // Variables of the block that actually occur, with their largest degree.
  std::vector<std::pair<Variable, unsigned long>> relevant;
  Assignment base = values;
  for (const auto& v : vars) {
    unsigned long d = 0;
    for (const auto& p : expanded) d = std::max(d, degree_in(p, v.id));
    if (d == 0)
      base[v.id] = 0;
    else
      relevant.emplace_back(v, d);
  }
  BlockOutcome out;
  if (relevant.empty()) {
    if (evaluate_qf(body, base)) {
      out.status = Tristate::True;
      out.witness = base;
    } else {
      out.status = Tristate::False;
    }
    return out;
  }
  std::size_t si = 0;
  for (std::size_t i = 1; i < relevant.size(); ++i)
    if (relevant[i].second < relevant[si].second) si = i;
  const Variable solve = relevant[si].first;
  std::vector<Variable> outer;
  for (std::size_t i = 0; i < relevant.size(); ++i)
    if (i != si) outer.push_back(relevant[i].first);

  const auto domain = rationals_by_height(height);
  std::vector<std::size_t> level_end;  // domain prefix sizes per height
  for (long h = 0; h <= height; ++h) level_end.push_back(rationals_by_height(h).size());

  auto try_tuple = [&](const Assignment& asg) -> bool {
    std::vector<Rational> candidates;
    for (const auto* a : atoms) {
      upoly::QPoly u = univariate(a->poly.expand(asg), solve.id);
      if (upoly::degree(u) >= 1)
        for (const auto& r : upoly::rational_roots(u)) candidates.push_back(r);
    }
    // A point off every root set stands for the generic case.
    std::set<Rational> roots(candidates.begin(), candidates.end());
    Integer g = 0;
    while (roots.count(Rational(g))) ++g;
    candidates.emplace_back(g);
    for (const auto& c : candidates) {
      Assignment full = asg;
      full[solve.id] = c;
      if (evaluate_qf(body, full)) {
        out.witness = full;
        return true;
      }
    }
    return false;
  };

  const std::size_t k = outer.size();
  long budget = kTupleBudget;
  for (long h = 0; h <= height; ++h) {
    std::vector<std::size_t> idx(k, 0);
    const std::size_t end = level_end[h];
    const std::size_t prev = h == 0 ? 0 : level_end[h - 1];
    while (true) {
      bool top = k == 0 ? h == 0 : false;
      for (auto i : idx) top = top || i >= prev;
      if (top) {
        if (--budget < 0) return out;
        Assignment asg = base;
        for (std::size_t i = 0; i < k; ++i) asg[outer[i].id] = domain[idx[i]];
        if (try_tuple(asg)) {
          out.status = Tristate::True;
          return out;
        }
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] + 1 == end) idx[--i] = 0;
      if (i == 0) break;
      ++idx[i - 1];
    }
  }
  if (k == 0) out.status = Tristate::False;
  return out;
}

Tristate t_not(Tristate t) {
  return t == Tristate::True ? Tristate::False : t == Tristate::False ? Tristate::True : t;
}

Tristate eval3(const Formula& f, const Assignment& values, long height);

Tristate eval_exists(const std::vector<Variable>& vars, const Formula& body,
                     const Assignment& values, long height) {
  if (is_quantifier_free(body)) return solve_block(vars, body, values, height).status;
  const auto domain = rationals_by_height(height);
  const std::size_t k = vars.size();
  std::vector<std::size_t> idx(k, 0);
  long budget = kTupleBudget;
  while (true) {
    if (--budget < 0) return Tristate::Unknown;
    Assignment asg = values;
    for (std::size_t i = 0; i < k; ++i) asg[vars[i].id] = domain[idx[i]];
    if (eval3(body, asg, height) == Tristate::True) return Tristate::True;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] + 1 == domain.size()) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
  return Tristate::Unknown;
}

Tristate eval3(const Formula& f, const Assignment& values, long height) {
  switch (f->kind) {
    case Kind::Atom:
      return evaluate_qf(f, values) ? Tristate::True : Tristate::False;
    case Kind::Not:
      return t_not(eval3(f->children[0], values, height));
    case Kind::And:
    case Kind::Or: {
      const Tristate absorbing = f->kind == Kind::And ? Tristate::False : Tristate::True;
      bool unknown = false;
      for (const auto& c : f->children) {
        Tristate t = eval3(c, values, height);
        if (t == absorbing) return absorbing;
        unknown = unknown || t == Tristate::Unknown;
      }
      return unknown ? Tristate::Unknown : t_not(absorbing);
    }
    case Kind::Exists:
      return eval_exists(f->vars, f->children[0], values, height);
    case Kind::Forall:
      return t_not(eval_exists(f->vars, negate(f->children[0]), values, height));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Tristate evaluate_bounded(const Formula& f, const Assignment& values, long height) {
  return eval3(f, values, height);
}

std::optional<std::vector<Rational>> bounded_search(const Formula& f, const Assignment& values,
                                                    long height) {
  if (f->kind != Kind::Exists || !is_quantifier_free(f->children[0]))
    throw std::invalid_argument("bounded_search needs an existential block");
  BlockOutcome r = solve_block(f->vars, f->children[0], values, height);
  if (r.status != Tristate::True) return std::nullopt;
  std::vector<Rational> w;
  for (const auto& v : f->vars) w.push_back(r.witness.at(v.id));
  return w;
}

}  // namespace darmonlab
