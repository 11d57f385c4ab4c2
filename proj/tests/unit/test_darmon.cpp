#include "darmonlab/darmon.hpp"
#include "doctest.h"

using namespace darmonlab;

namespace {
FieldElement el(const NumberField& K, const char* s) { return parse_element(K, s); }
}  // namespace

TEST_CASE("weights") {
  CHECK(Weight::parse("3").n == 3);
  CHECK(Weight::parse("inf").infinite);
  CHECK(Weight::parse("oo").infinite);
  CHECK(Weight::finite(4).coefficient() == Rational(3, 4));
  CHECK(Weight::infinity().coefficient() == 1);
  CHECK(Weight::parse("7").to_string() == "7");
  CHECK_THROWS(Weight::parse("0"));
  CHECK_THROWS(Weight::parse("-2"));
  CHECK_THROWS(Weight::finite(0));
}

TEST_CASE("Darmon sets over Q") {
  NumberField Q = NumberField::parse("Q");
  Weight three = Weight::finite(3);
  CHECK(in_darmon(el(Q, "5/8"), {}, three));
  CHECK_FALSE(in_darmon(el(Q, "8/5"), {}, three));
  CHECK_FALSE(in_darmon(el(Q, "5/4"), {}, three));
  CHECK(in_darmon(el(Q, "7"), {}, Weight::finite(9)));
  CHECK(in_darmon(Q.zero(), {}, three));
  CHECK(in_darmon(Q.zero(), {}, Weight::infinity()));

  PlaceSet S{Place::finite(Q.primes_above(5)[0])};
  CHECK(in_darmon(el(Q, "8/5"), S, three));
  CHECK(in_darmon(DarmonQuery{Q, three, S, el(Q, "8/5")}));
}

TEST_CASE("Darmon sets over Q(sqrt -5)") {
  NumberField K = NumberField::parse("Q(sqrt,-5)");
  PrimeIdeal P2 = K.primes_above(2)[0];
  // The prime over 2 has ramification 2, so 1/2 has valuation -2 there.
  CHECK(in_darmon(el(K, "1/2"), {}, Weight::finite(2)));
  CHECK_FALSE(in_darmon(el(K, "1/2"), {}, Weight::finite(3)));
  FieldElement g = el(K, "[1,1]");
  CHECK_FALSE(in_darmon(g.inverse(), {}, Weight::finite(2)));
  CHECK(in_darmon(g.inverse(), {Place::finite(P2), Place::finite(K.primes_above(3)[0])},
                  Weight::finite(2)));
}

TEST_CASE("parameterized place sets") {
  NumberField Q = NumberField::parse("Q");
  PlaceSet S = darmon_places(el(Q, "2"), el(Q, "3"), el(Q, "2"), el(Q, "3"));
  REQUIRE(S.size() == 2);
  CHECK(in_darmon(el(Q, "1/6"), S, Weight::finite(5)));
}

TEST_CASE("intersection multiplicities") {
  NumberField Q = NumberField::parse("Q");
  PrimeIdeal P2 = Q.primes_above(2)[0];
  CHECK(intersection_multiplicity(el(Q, "5"), el(Q, "8"), P2) == 3);
  CHECK(intersection_multiplicity(Q.zero(), Q.one(), P2) == 0);
  CHECK_FALSE(intersection_multiplicity(Q.one(), Q.zero(), P2).has_value());
  CHECK(intersection_multiplicity(el(Q, "4"), el(Q, "8"), P2) == 1);
}

TEST_CASE("Darmon points") {
  NumberField Q = NumberField::parse("Q");
  Weight one = Weight::finite(1), three = Weight::finite(3), inf = Weight::infinity();
  CHECK(is_darmon_point(el(Q, "5"), el(Q, "8"), one, three, {}));
  CHECK_FALSE(is_darmon_point(el(Q, "5"), el(Q, "4"), one, three, {}));
  for (long a : {-3, 2, 5})
    CHECK(is_darmon_point(Q.from_rational(Rational(a * a * a)), Q.one(), three, inf, {}));
  // Infinite weight forbids any contact with the divisor outside S.
  CHECK_FALSE(is_darmon_point(el(Q, "2"), el(Q, "3"), inf, inf, {}));
  CHECK_FALSE(is_darmon_point(el(Q, "1"), el(Q, "2"), inf, inf, {}));
  CHECK(is_darmon_point(el(Q, "1"), el(Q, "-1"), inf, inf, {}));
  PlaceSet S{Place::finite(Q.primes_above(2)[0]), Place::finite(Q.primes_above(3)[0])};
  CHECK(is_darmon_point(el(Q, "2"), el(Q, "3"), inf, inf, S));
}

TEST_CASE("power oracle") {
  CHECK(rational_power_oracle(Rational(5, 8), 3));
  CHECK_FALSE(rational_power_oracle(Rational(5, 4), 3));
  CHECK(rational_power_oracle(Rational(-7, 1), 9));
  CHECK(rational_power_oracle(Rational(0), 2));
  NumberField K = NumberField::parse("Q(sqrt,2)");
  CHECK_THROWS(rational_power_oracle(K.generator(), 2));
}
