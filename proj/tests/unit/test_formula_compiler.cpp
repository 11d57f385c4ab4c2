#include "darmonlab/definable_sets.hpp"
#include "darmonlab/formula_compiler.hpp"
#include "doctest.h"

#include <random>

using namespace darmonlab;

namespace {

Assignment bind(FormulaBuilder& fb, std::initializer_list<std::pair<const char*, long>> params,
                Rational r) {
  Assignment a;
  for (const auto& [name, v] : params) a[fb.pool().parameter(name).id] = v;
  a[fb.pool().subject("r").id] = r;
  return a;
}

std::size_t total_quantifiers(const Formula& f) {
  std::size_t n = 0;
  for (const auto& [k, c] : quantifier_shape(f)) n += c;
  return n;
}

}  // namespace

TEST_CASE("polynomial graphs") {
  VariablePool pool;
  Variable x = pool.fresh("x"), y = pool.fresh("y");
  Polynomial p = (Polynomial(x) + Polynomial(y)).pow(3) - Polynomial(x).pow(3);
  CHECK(p.degree() == 3);
  SparsePolynomial e = p.expand();
  CHECK(total_degree(e) == 3);
  CHECK(e.size() == 3);
  CHECK(degree_in(e, y.id) == 3);
  CHECK(p.evaluate({{x.id, 2}, {y.id, Rational(1, 2)}}) == Rational(125, 8) - 8);
  CHECK_THROWS_AS(p.evaluate({{x.id, 1}}), std::out_of_range);
  CHECK((Polynomial(3) * Polynomial(4)).is_constant());
  CHECK(p.variables().size() == 2);

  Polynomial big = sum({Polynomial(x), Polynomial(y), Polynomial(1)}).pow(40);
  CHECK(big.degree() == 40);
  CHECK_THROWS_AS(big.expand({}, 100), std::length_error);
  auto prog = big.program();
  CHECK(prog.back().op == Instruction::Op::Pow);
}

TEST_CASE("formula structure") {
  VariablePool pool;
  Variable x = pool.fresh("x"), y = pool.fresh("y"), r = pool.subject("r");
  Formula f = forall({x}, exists({y}, atom(Polynomial(x) * Polynomial(y) - Polynomial(r),
                                           Relation::Eq)));
  CHECK(to_string(quantifier_shape(f)) == "forall^1 exists^1");
  CHECK(is_prenex(f));
  CHECK(free_variables(f).size() == 1);
  CHECK(max_degree(f) == 2);
  CHECK(to_sexpr(f).rfind("(forall (x1) (exists (y1) (eq (poly", 0) == 0);

  Formula g = conj({exists({x}, atom(Polynomial(x), Relation::Eq)),
                    exists({y}, atom(Polynomial(y) - 1, Relation::Eq))});
  CHECK_FALSE(is_prenex(g));
  Formula pg = prenex(g);
  CHECK(is_prenex(pg));
  CHECK(to_string(quantifier_shape(pg)) == "exists^2");
  CHECK_THROWS(prenex(conj({g, g})));

  CHECK(evaluate_qf(atom(Polynomial(r) - 2, Relation::Eq), {{r.id, 2}}));
  CHECK(rationals_by_height(1).size() == 3);
  CHECK(rationals_by_height(2).size() == 7);
}

TEST_CASE("combining conjunctions") {
  NumberField Q = NumberField::parse("Q");
  VariablePool pool;
  Variable x = pool.fresh("x"), y = pool.fresh("y");
  CombineResult real = combine_conjunction({x, y}, CombineMode::Real, Q);
  CHECK(real.construction == "sum-of-squares");
  CHECK(real.poly.degree() == 2);
  CHECK(real.poly.expand() == (Polynomial(x).pow(2) + Polynomial(y).pow(2)).expand());

  CombineResult gen = combine_conjunction({x, y}, CombineMode::General, Q);
  CHECK(gen.construction == "norm-form");
  CHECK(gen.parameter == 2);
  CHECK_FALSE(gen.certificate.empty());
  CHECK(gen.poly.expand() == (Polynomial(x).pow(2) - Polynomial(2) * Polynomial(y).pow(2)).expand());

  CombineResult single = combine_conjunction({Polynomial(x).pow(3)}, CombineMode::General, Q);
  CHECK(single.construction == "single");
  CHECK(single.poly.degree() == 3);
  CombineResult square = combine_conjunction({Polynomial(x).pow(3)}, CombineMode::Real, Q);
  CHECK(square.construction == "sum-of-squares");
  CHECK(square.poly.degree() == 6);

  NumberField K = NumberField::parse("Q(sqrt,-5)");
  CHECK(norm_form_prime(K) == 3);
  Variable z = pool.fresh("z");
  CombineResult three = combine_conjunction({x, y, z}, CombineMode::General, K);
  CHECK(three.degree_bound == 3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int i = 0; i < 200; ++i) {
    Assignment a{{x.id, d(rng)}, {y.id, d(rng)}, {z.id, d(rng)}};
    bool all_zero = a[x.id] == 0 && a[y.id] == 0 && a[z.id] == 0;
    CHECK((three.poly.evaluate(a) == 0) == all_zero);
  }
}

TEST_CASE("rewrite identities") {
  NumberField Q = NumberField::parse("Q");
  VariablePool pool;
  Variable x = pool.fresh("x"), z = pool.fresh("z");
  Formula f = disj({forall({x}, atom(x, Relation::Neq)), exists({z}, atom(z, Relation::Eq))});
  Formula g = rewrite_universal_or_exists(f, pool);
  CHECK(to_string(quantifier_shape(g)) == "forall^1 exists^2");
  CHECK(max_degree(g) == 3);
  CHECK(evaluate_bounded(g, {}, 3) != Tristate::False);
  CHECK(evaluate_bounded(f, {}, 3) == Tristate::True);

  Formula c = disj({forall({x}, atom(Polynomial(1), Relation::Neq)),
                    exists({z}, atom(Polynomial(z) * Polynomial(z) + 1, Relation::Eq))});
  Formula cr = rewrite_universal_or_exists(c, pool);
  CHECK(evaluate_bounded(c, {}, 3) == Tristate::True);
  CHECK(evaluate_bounded(cr, {}, 3) != Tristate::False);

  Variable y = pool.fresh("y"), w = pool.fresh("w");
  Formula h = disj({exists({}, forall({y}, atom(y, Relation::Neq))),
                    exists({w}, atom(w, Relation::Eq))});
  Formula hr = rewrite_existsforall_or_exists(h, 2, Q, pool);
  CHECK(to_string(quantifier_shape(hr)) == "exists^1 forall^2");
  CHECK(max_degree(hr) == 4);
  CHECK(evaluate_bounded(hr, {}, 3) == Tristate::True);

  Formula bad = disj({atom(x, Relation::Eq), atom(z, Relation::Eq)});
  CHECK_THROWS_AS(rewrite_universal_or_exists(bad, pool), std::invalid_argument);
  CHECK_THROWS_AS(rewrite_existsforall_or_exists(bad, 2, Q, pool), std::invalid_argument);
  CHECK_THROWS_AS(rewrite_existsforall_or_exists(h, 4, Q, pool), std::invalid_argument);
}

TEST_CASE("template semantics") {
  NumberField Q = NumberField::parse("Q");
  FormulaBuilder fb(Q, CombineMode::General);
  Existential S = fb.S(fb.param("a"), fb.param("b"), fb.subject("r"));
  CHECK(S.vars.size() == 4);
  auto w = bounded_search(S.formula(), bind(fb, {{"a", -1}, {"b", -1}}, 2), 2);
  REQUIRE(w);
  CHECK(*w == std::vector<Rational>{1, 0, 0, 0});
  CHECK(evaluate_bounded(S.combined(), bind(fb, {{"a", -1}, {"b", -1}}, 2), 2) ==
        Tristate::True);

  Existential T = fb.T(fb.param("a"), fb.param("b"), fb.subject("r"));
  CHECK(T.vars.size() == 7);
  Assignment half = bind(fb, {{"a", -1}, {"b", -1}}, Rational(1, 2));
  CHECK_FALSE(bounded_search(T.formula(), half, 1).has_value());
  CHECK_FALSE(in_T(Q.from_rational(-1), Q.from_rational(-1), Q.from_rational(Rational(1, 2))));
  CHECK(bounded_search(T.formula(), bind(fb, {{"a", -1}, {"b", -1}}, 4), 1).has_value());

  Existential gcd = fb.gcd(fb.param("a"), fb.param("b"), fb.subject("y"), fb.subject("z"));
  CHECK(gcd.vars.size() == 16);
}

TEST_CASE("structural degrees agree with expansion") {
  NumberField Q = NumberField::parse("Q");
  for (const char* name : {"S", "T", "Tx", "arcplaces"}) {
    for (CombineMode mode : {CombineMode::General, CombineMode::Real}) {
      FormulaBuilder fb(Q, mode);
      Formula f = build_template(fb, name, 1);
      const FormulaNode* node = f.get();
      while (node->kind != FormulaNode::Kind::Atom) node = node->children[0].get();
      CHECK(total_degree(node->poly.expand({}, 2000000)) == node->poly.degree());
    }
  }
}

TEST_CASE("template budgets") {
  NumberField Q = NumberField::parse("Q");
  for (const auto& name : template_names()) {
    Budget b = template_budget(Q, name, 1);
    INFO(name);
    CHECK(b.matches());
  }
  Budget J = template_budget(Q, "J", 1);
  CHECK(J.imported);
  CHECK(J.degree == 384);
  CHECK(total_quantifiers(build_template(*std::make_unique<FormulaBuilder>(Q, CombineMode::General),
                                         "J", 1)) == 138);
  Budget ksf = template_budget(Q, "Ksf", 1);
  CHECK(to_string(ksf.shape) == "forall^1117 exists^418");
  CHECK(ksf.degree == 8455);
  CHECK(ksf.real_degree == 903u);
  CHECK_THROWS_AS(template_budget(Q, "nope", 1), std::invalid_argument);

  NumberField K = NumberField::parse("Q(sqrt,-5)");
  Budget kt = template_budget(K, "T", 1);
  CHECK(kt.degree == 8);
  CHECK_FALSE(kt.real_degree.has_value());
}

TEST_CASE("assembled formulas") {
  NumberField Q = NumberField::parse("Q");
  for (unsigned long n : {1ul, 2ul, 10ul, 100ul}) {
    Budget m = main_budget(Q, n);
    CHECK(to_string(m.shape) == "forall^2 exists^2266 forall^1266");
    CHECK(m.degree == std::max(50730ul, 12 * n + 14));
    CHECK(*m.real_degree == std::max(3612ul, 4 * n + 6));
    Budget e = empty_budget(Q, n);
    CHECK(to_string(e.shape) == "forall^15 exists^33");
    CHECK(e.degree == std::max(6 * n + 31, 73ul));
    CHECK(*e.real_degree == std::max(2 * n + 19, 33ul));
  }
  FormulaBuilder fb(Q, CombineMode::General);
  Formula f = assemble_empty(fb, 1);
  auto free = free_variables(f);
  REQUIRE(free.size() == 1);
  CHECK(free[0].name == "r");
}

TEST_CASE("ledger") {
  auto rows = budget_ledger(NumberField::parse("Q"), {1, 100});
  long flagged = 0, documented = 0;
  for (const auto& e : rows) {
    INFO(e.label);
    CHECK(e.status != "mismatch");
    flagged += e.status == "flagged";
    documented += e.status == "documented";
    if (e.status == "pass") CHECK(e.computed == e.claimed);
  }
  CHECK(flagged == 4);
  CHECK(documented == 2);
}
