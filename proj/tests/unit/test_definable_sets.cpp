#include "darmonlab/definable_sets.hpp"
#include "darmonlab/local_symbols.hpp"
#include "doctest.h"

using namespace darmonlab;

namespace {
FieldElement el(const NumberField& K, const char* s) { return parse_element(K, s); }
}  // namespace

TEST_CASE("T membership") {
  NumberField Q = NumberField::parse("Q");
  FieldElement m1 = el(Q, "-1");
  CHECK(in_T(m1, m1, el(Q, "3")));
  CHECK_FALSE(in_T(m1, m1, el(Q, "1/2")));
  CHECK_FALSE(in_T(m1, m1, el(Q, "5")));
  CHECK(in_T(m1, m1, Q.zero()));
}

TEST_CASE("J variants") {
  NumberField Q = NumberField::parse("Q");
  FieldElement two = el(Q, "2"), three = el(Q, "3");
  CHECK(in_J(two, three, el(Q, "6")));
  CHECK_FALSE(in_J(two, three, el(Q, "2")));
  CHECK(in_J(two, three, Q.zero()));
  ParamTuple t{two, three, two, three};
  CHECK(in_J42(t, el(Q, "36")));
  CHECK_FALSE(in_J42(t, el(Q, "6")));
  CHECK(in_J4(t, el(Q, "6")));
}

TEST_CASE("square-free set") {
  NumberField Q = NumberField::parse("Q");
  FieldElement two = el(Q, "2"), three = el(Q, "3");
  CHECK(in_Ksf(two, three, el(Q, "6")));
  CHECK_FALSE(in_Ksf(two, three, el(Q, "4")));
  CHECK_FALSE(in_Ksf(two, three, el(Q, "1/12")));
  CHECK_THROWS_AS(in_Ksf(two, three, Q.zero()), std::domain_error);
}

TEST_CASE("sums of four squares") {
  NumberField Q = NumberField::parse("Q");
  CHECK(is_sum_of_four_squares(el(Q, "7")));
  CHECK_FALSE(is_sum_of_four_squares(el(Q, "-1")));
  auto w = four_square_witness(el(Q, "7"), 10);
  REQUIRE(w);
  FieldElement s = Q.zero();
  for (const auto& x : *w) s += x * x;
  CHECK(s == el(Q, "7"));
  CHECK((*w)[0] == el(Q, "2"));

  auto q = four_square_witness(el(Q, "7/9"), 10);
  REQUIRE(q);

  NumberField K = NumberField::parse("Q(sqrt,2)");
  CHECK_FALSE(is_sum_of_four_squares(el(K, "[1,-1]")));
  auto k = four_square_witness(el(K, "[3,1]"), 6);
  REQUIRE(k);
  FieldElement t = K.zero();
  for (const auto& x : *k) t += x * x;
  CHECK(t == el(K, "[3,1]"));
}

TEST_CASE("real places of Delta") {
  NumberField Q = NumberField::parse("Q");
  ArcplacesResult yes = arcplaces_condition(el(Q, "2"), el(Q, "3"));
  CHECK(yes.condition);
  CHECK(yes.certificate.has_value());
  CHECK_FALSE(arcplaces_condition(el(Q, "-1"), el(Q, "-1")).condition);
  NumberField K = NumberField::parse("Q(sqrt,-5)");
  CHECK(arcplaces_condition(el(K, "-1"), el(K, "-1")).condition);
}

TEST_CASE("isotropy and trace sets") {
  NumberField Q = NumberField::parse("Q");
  FieldElement m1 = el(Q, "-1");
  CHECK(in_S_oracle(el(Q, "5"), el(Q, "7"), el(Q, "2")));
  CHECK(in_S_oracle(m1, m1, Q.zero()));
  // Norm one with trace 6 forces 9 + x2^2 + x3^2 + x4^2 = 1.
  CHECK_FALSE(in_S_oracle(m1, m1, el(Q, "6")));
  CHECK(in_S_oracle(el(Q, "3"), el(Q, "5"), el(Q, "2")));

  CHECK(form_isotropic({el(Q, "1"), el(Q, "-1")}));
  CHECK_FALSE(form_isotropic({el(Q, "1"), el(Q, "1"), el(Q, "1")}));
  CHECK(form_isotropic({el(Q, "1"), el(Q, "1"), el(Q, "1"), el(Q, "1"), el(Q, "-7")}));
}

TEST_CASE("T oracle") {
  NumberField Q = NumberField::parse("Q");
  FieldElement m1 = el(Q, "-1");
  OracleResult r4 = in_T_oracle(m1, m1, el(Q, "4"), 20);
  CHECK(r4.status == Tristate::True);
  REQUIRE(r4.witness.size() == 2);
  CHECK(r4.witness[0] + r4.witness[1] == el(Q, "4"));
  CHECK(in_T_oracle(m1, m1, el(Q, "1/2"), 20).status == Tristate::False);
  OracleResult r3 = in_T_oracle(m1, m1, el(Q, "3"), 20);
  CHECK(r3.status == Tristate::True);
  for (const auto& w : r3.witness) CHECK(in_S_oracle(m1, m1, w));
}

TEST_CASE("disjointness via a unit") {
  NumberField Q = NumberField::parse("Q");
  ParamTuple t1{el(Q, "2"), el(Q, "3"), el(Q, "2"), el(Q, "3")};
  ParamTuple t2{el(Q, "5"), el(Q, "7"), el(Q, "5"), el(Q, "7")};
  // Delta of (5,7) is {5,7} since (5,7)_5 = (7/5) = -1.
  CHECK(delta_upper(t2.a, t2.b).size() == 2);
  DisjointResult d = disjoint_via_unit(t1, t2);
  CHECK(d.disjoint);
  CHECK(d.witness.has_value());
  CHECK_FALSE(disjoint_via_unit(t1, t1).disjoint);
  ParamTuple trivial{Q.one(), Q.one(), Q.one(), Q.one()};
  CHECK(disjoint_via_unit(t1, trivial).disjoint);
}

TEST_CASE("height enumeration") {
  NumberField Q = NumberField::parse("Q");
  auto e = height_enumeration(Q, 2);
  REQUIRE(e.size() >= 5);
  CHECK(e[0] == Q.zero());
  NumberField K = NumberField::parse("Q(sqrt,2)");
  auto k = height_enumeration(K, 1);
  bool has_generator = false;
  for (const auto& x : k) has_generator = has_generator || x == K.generator();
  CHECK(has_generator);
}
