#include "darmonlab/number_field.hpp"
#include "doctest.h"

using namespace darmonlab;

namespace {
FieldElement el(const NumberField& K, const char* s) { return parse_element(K, s); }
}  // namespace

TEST_CASE("field construction") {
  NumberField Q = NumberField::parse("Q");
  CHECK(Q.degree() == 1);
  CHECK(Q.discriminant() == 1);
  CHECK(Q.real_place_count() == 1);

  NumberField K = NumberField::parse("Q(sqrt,-5)");
  CHECK(K.degree() == 2);
  CHECK(K.discriminant() == -20);
  CHECK(K.real_place_count() == 0);
  CHECK(K.complex_place_count() == 1);

  NumberField C = NumberField::parse("poly:[-1,-1,0,1]");
  CHECK(C.degree() == 3);
  CHECK(C.real_place_count() == 1);
  CHECK(C.complex_place_count() == 1);

  CHECK_THROWS_AS(NumberField::parse("Q(sqrt,4)"), UnsupportedField);
  CHECK_THROWS_AS(NumberField::parse("nonsense"), UnsupportedField);
}

TEST_CASE("prime decomposition") {
  NumberField K = NumberField::parse("Q(sqrt,-5)");
  auto two = K.primes_above(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].ramification == 2);
  CHECK(two[0].residue_degree == 1);

  auto seven = NumberField::parse("Q").primes_above(7);
  REQUIRE(seven.size() == 1);
  CHECK(seven[0].ramification == 1);

  // -5 is not a square mod 11, so 11 stays prime; 7 splits since -5 = 3^2 mod 7.
  auto eleven = K.primes_above(11);
  REQUIRE(eleven.size() == 1);
  CHECK(eleven[0].residue_degree == 2);
  auto sev = K.primes_above(7);
  REQUIRE(sev.size() == 2);
  CHECK(sev[0].ramification == 1);
  CHECK(sev[1].residue_degree == 1);

  for (long p : {2, 3, 5, 7, 11, 13, 29}) {
    unsigned total = 0;
    for (const auto& P : K.primes_above(p)) total += P.ramification * P.residue_degree;
    CHECK(total == 2);
  }
}

TEST_CASE("valuations and ideals") {
  NumberField Q = NumberField::parse("Q");
  auto P2 = Q.primes_above(2)[0];
  CHECK(valuation(el(Q, "5/8"), P2) == -3);
  CHECK(valuation(el(Q, "1"), P2) == 0);

  NumberField K = NumberField::parse("Q(sqrt,-5)");
  FieldElement x = el(K, "[1,1]");
  auto P = K.primes_above(2)[0];
  CHECK(valuation(x, P) == 1);
  for (long p : {2, 3, 5})
    for (const auto& Pp : K.primes_above(p)) CHECK(valuation(K.one(), Pp) == 0);

  FractionalIdeal I = ideal_of(x);
  long total = 0;
  for (const auto& [prime, e] : I) {
    CHECK(e == 1);
    total += long(prime.p);
  }
  CHECK(I.size() == 2);
  CHECK(total == 5);

  FractionalIdeal eight = ideal_of(el(Q, "8"));
  FractionalIdeal five = ideal_of(el(Q, "5"));
  FractionalIdeal g = ideal_gcd(five, eight);
  CHECK(ideal_exponent(ideal_product(eight, ideal_inverse(g)), P2) == 3);
  CHECK(ideal_gcd(I, I) == I);
}

TEST_CASE("weak approximation and signs") {
  NumberField Q = NumberField::parse("Q");
  auto P2 = Q.primes_above(2)[0];
  FieldElement y = weak_approximate(Q, {{P2, el(Q, "2"), 3}}, {{0, +1}});
  CHECK(((y - el(Q, "2")).is_zero() || valuation(y - el(Q, "2"), P2) >= 3));
  CHECK(real_sign(y, 0) == 1);
  CHECK(weak_approximate(Q, {}, {}) == Q.one());

  NumberField K = NumberField::parse("Q(sqrt,2)");
  FieldElement z = weak_approximate(K, {}, {{0, +1}, {1, -1}});
  CHECK(real_signs(z) == std::vector<int>{1, -1});

  // Real places are listed in ascending order of the embedded generator.
  CHECK(real_signs(el(K, "[1,-1]")) == std::vector<int>{1, -1});
  CHECK(real_signs(el(K, "4")) == std::vector<int>{1, 1});
  CHECK(real_signs(el(NumberField::parse("Q(sqrt,-5)"), "[3,1]")).empty());
}

TEST_CASE("global squares") {
  CHECK(find_nonsquare_integer(NumberField::parse("Q")) == 2);
  CHECK(find_nonsquare_integer(NumberField::parse("Q(sqrt,2)")) == 3);
  for (const char* spec : {"Q", "Q(sqrt,2)", "Q(sqrt,-5)"}) {
    NumberField K = NumberField::parse(spec);
    CHECK(is_global_square(el(K, "4")));
    auto r = square_root(el(K, "9/4"));
    REQUIRE(r);
    CHECK(*r * *r == el(K, "9/4"));
  }
  NumberField K = NumberField::parse("Q(sqrt,2)");
  CHECK(is_global_square(el(K, "2")));
  CHECK_FALSE(is_global_square(el(K, "3")));
}

TEST_CASE("element parsing and arithmetic") {
  NumberField K = NumberField::parse("Q(sqrt,-5)");
  FieldElement t = K.generator();
  CHECK(t * t == el(K, "-5"));
  CHECK(el(K, "[1,1]").norm() == 6);
  CHECK((el(K, "[1,1]") * el(K, "[1,1]").inverse()) == K.one());
  CHECK_THROWS(parse_element(K, "[1,2,3]"));
  CHECK_THROWS(parse_element(K, "abc"));
}
