#include "darmonlab/verify.hpp"

#include "darmonlab/darmon.hpp"
#include "darmonlab/formula_compiler.hpp"
#include "darmonlab/local_symbols.hpp"

#include <chrono>
#include <numeric>

namespace darmonlab {

void SuiteReport::fail(std::string what) {
  if (failures.size() < 20) failures.push_back(std::move(what));
  else if (failures.size() == 20) failures.push_back("...");
}

namespace {

class Timer {
 public:
  explicit Timer(SuiteReport& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  SuiteReport& r_;
  std::chrono::steady_clock::time_point t0_;
};

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational random_rational(std::mt19937_64& rng, long h) {
  Rational q(uniform(rng, -h, h), uniform(rng, 1, h));
  q.canonicalize();
  return q;
}

}  // namespace

FieldElement random_element(const NumberField& K, std::mt19937_64& rng, long h) {
  while (true) {
    std::vector<Rational> c;
    for (int i = 0; i < K.degree(); ++i) c.push_back(random_rational(rng, h));
    FieldElement x = K.from_coords(c);
    if (!x.is_zero()) return x;
  }
}

SuiteReport verify_reciprocity(std::uint64_t seed, long q_pairs, long per_field, long height) {
  SuiteReport r{"reciprocity"};
  Timer timer(r);
  std::mt19937_64 rng(seed);
  auto run = [&](const std::string& spec, long count) {
    NumberField K = NumberField::parse(spec);
    for (long i = 0; i < count; ++i) {
      FieldElement a = random_element(K, rng, height), b = random_element(K, rng, height);
      ++r.checked;
      std::string tag = spec + " a=" + a.to_string() + " b=" + b.to_string();
      if (!reciprocity_check(a, b)) r.fail(tag + ": product of symbols is -1");
      else if (delta(a, b).size() % 2 != 0) r.fail(tag + ": odd |Delta|");
      else ++r.passed;
    }
  };
  run("Q", q_pairs);
  for (const char* spec : {"Q(sqrt,-1)", "Q(sqrt,2)", "Q(sqrt,-5)"}) run(spec, per_field);
  return r;
}

SuiteReport verify_darmon_oracle(long bound, const std::vector<unsigned long>& ns) {
  SuiteReport r{"darmon-oracle"};
  Timer timer(r);
  NumberField Q = NumberField::parse("Q");
  std::vector<Rational> values{Rational(0)};
  for (long p = -bound; p <= bound; ++p)
    for (long q = 1; q <= bound; ++q)
      if (p != 0 && std::gcd(p, q) == 1) values.emplace_back(p, q);
  for (unsigned long n : ns) {
    for (const auto& x : values) {
      ++r.checked;
      bool lhs = in_darmon(Q.from_rational(x), {}, Weight::finite(n));
      bool rhs = rational_power_oracle(x, n);
      if (lhs == rhs) ++r.passed;
      else r.fail("n=" + std::to_string(n) + " x=" + x.get_str());
    }
  }
  return r;
}

SuiteReport verify_budget(const std::vector<unsigned long>& ns) {
  SuiteReport r{"budget"};
  Timer timer(r);
  for (const char* spec : {"Q", "Q(sqrt,-5)"}) {
    NumberField K = NumberField::parse(spec);
    long flagged = 0;
    for (const auto& e : budget_ledger(K, ns)) {
      ++r.checked;
      if (e.status == "mismatch") {
        r.fail(std::string(spec) + " " + e.label + ": computed " + std::to_string(e.computed) +
               ", claimed " + std::to_string(e.claimed));
        continue;
      }
      if (e.status == "imported" && e.computed != e.claimed)
        r.notes.push_back(std::string(spec) + " " + e.label + " differs from the imported value");
      if (e.status == "flagged") ++flagged;
      ++r.passed;
    }
    if (flagged != long(2 * ns.size()))
      r.fail(std::string(spec) + ": expected " + std::to_string(2 * ns.size()) +
             " flagged rows, found " + std::to_string(flagged));
  }
  return r;
}

namespace {

Polynomial random_linear(std::mt19937_64& rng, const std::vector<Variable>& vars, long h) {
  // Half of the factors get a root of height at most 2 so that searches can reach it.
  if (uniform(rng, 0, 1)) return Polynomial(uniform(rng, 1, 2)) * Polynomial(vars.front()) -
                                 Polynomial(uniform(rng, -2, 2));
  Polynomial p(uniform(rng, -h, h));
  for (const auto& v : vars) p = p + Polynomial(uniform(rng, -h, h)) * Polynomial(v);
  return p;
}

// Product of one or two linear factors, or an irreducible quadratic in the first variable.
Polynomial random_matrix(std::mt19937_64& rng, const std::vector<Variable>& vars, long h) {
  Polynomial lead(vars.front());
  switch (uniform(rng, 0, 2)) {
    case 0:
      return lead * lead + Polynomial(uniform(rng, 1, h));
    case 1:
      return random_linear(rng, vars, h) * random_linear(rng, vars, h);
    default:
      return random_linear(rng, vars, h);
  }
}

void compare(SuiteReport& r, const std::string& rule, long i, Tristate before, Tristate after) {
  ++r.checked;
  if (before == Tristate::Unknown || after == Tristate::Unknown) {
    ++r.inconclusive;
    return;
  }
  if (before == after) ++r.passed;
  else
    r.fail(rule + " instance " + std::to_string(i) + ": before " + to_string(before) +
           ", after " + to_string(after));
}

}  // namespace

SuiteReport verify_rewrites(std::uint64_t seed, long instances, long coeff_height,
                            long search_height) {
  SuiteReport r{"rewrites"};
  Timer timer(r);
  std::mt19937_64 rng(seed);
  NumberField Q = NumberField::parse("Q");
  const Integer n_K = FormulaBuilder(Q, CombineMode::General).n_K();
  auto note = [&](const char* rule, long inconclusive_before) {
    r.notes.push_back(std::string(rule) + ": " +
                      std::to_string(instances - (r.inconclusive - inconclusive_before)) +
                      " of " + std::to_string(instances) + " instances conclusive");
  };
  long mark = r.inconclusive;
  for (long i = 0; i < instances; ++i) {
    VariablePool pool;
    Variable x = pool.fresh("x"), z = pool.fresh("z");
    Polynomial P = random_matrix(rng, {x}, coeff_height);
    Polynomial R = random_matrix(rng, {z}, coeff_height);
    Formula before = disj({forall({x}, atom(P, Relation::Neq)), exists({z}, atom(R, Relation::Eq))});
    Formula after = rewrite_universal_or_exists(before, pool);
    compare(r, "universal-or-exists", i, evaluate_bounded(before, {}, search_height),
            evaluate_bounded(after, {}, search_height));
  }
  note("universal-or-exists", mark);
  mark = r.inconclusive;
  for (long i = 0; i < instances; ++i) {
    VariablePool pool;
    Variable x = pool.fresh("x"), y = pool.fresh("y"), z = pool.fresh("z");
    // Matrices free of y make the inner universal block decidable.
    std::vector<Variable> pv = uniform(rng, 0, 1) ? std::vector<Variable>{x, y}
                                                  : std::vector<Variable>{x};
    Polynomial p = random_matrix(rng, pv, coeff_height);
    Polynomial q = random_matrix(rng, {z}, coeff_height);
    Formula before = disj({exists({x}, forall({y}, atom(p, Relation::Neq))),
                           exists({z}, atom(q, Relation::Eq))});
    Formula after = rewrite_existsforall_or_exists(before, n_K, Q, pool);
    compare(r, "existsforall-or-exists", i, evaluate_bounded(before, {}, search_height),
            evaluate_bounded(after, {}, search_height));
  }
  note("existsforall-or-exists", mark);
  return r;
}

}  // namespace darmonlab
