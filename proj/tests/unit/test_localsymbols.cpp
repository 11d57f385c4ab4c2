#include "darmonlab/local_symbols.hpp"
#include "doctest.h"

#include <random>

using namespace darmonlab;

namespace {
FieldElement el(const NumberField& K, const char* s) { return parse_element(K, s); }
Place over(const NumberField& K, long p) { return Place::finite(K.primes_above(p).at(0)); }
}  // namespace

TEST_CASE("local squares") {
  NumberField Q = NumberField::parse("Q");
  CHECK(local_square(el(Q, "17"), over(Q, 2)));
  CHECK_FALSE(local_square(el(Q, "5"), over(Q, 2)));
  CHECK(local_square(el(Q, "2"), over(Q, 7)));
  CHECK_FALSE(local_square(el(Q, "3"), over(Q, 7)));
  CHECK_FALSE(local_square(el(Q, "-1"), Place::real(0)));
  CHECK(local_square(el(Q, "1/4"), Place::real(0)));
}

TEST_CASE("Hilbert symbols over Q") {
  NumberField Q = NumberField::parse("Q");
  FieldElement m1 = el(Q, "-1");
  CHECK(hilbert(m1, m1, over(Q, 2)) == -1);
  CHECK(hilbert(m1, m1, Place::real(0)) == -1);
  for (long p : {3, 5, 7, 11}) CHECK(hilbert(m1, m1, over(Q, p)) == 1);
  CHECK(hilbert(el(Q, "2"), el(Q, "3"), over(Q, 3)) == -1);
  CHECK(hilbert(el(Q, "2"), el(Q, "3"), Place::real(0)) == 1);
  for (const char* b : {"-7", "3/5", "12"})
    for (long p : {2, 3, 5})
      CHECK(hilbert(Q.one(), el(Q, b), over(Q, p)) == 1);
  CHECK_THROWS_AS(hilbert(Q.zero(), m1, over(Q, 2)), std::domain_error);
}

TEST_CASE("symbol identities") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-30, 30);
  for (const char* spec : {"Q", "Q(sqrt,-1)", "Q(sqrt,2)"}) {
    NumberField K = NumberField::parse(spec);
    for (int i = 0; i < 15; ++i) {
      long x = d(rng), y = d(rng), z = d(rng);
      if (x == 0 || y == 0 || z == 0) continue;
      FieldElement a = K.from_rational(x), b = K.from_rational(y), c = K.from_rational(z);
      for (const auto& v : candidate_places(a * c, b)) {
        CHECK(hilbert(a, b, v) == hilbert(b, a, v));
        CHECK(hilbert(a, -a, v) == 1);
        CHECK(hilbert(a * c, b, v) == hilbert(a, b, v) * hilbert(c, b, v));
        CHECK(hilbert(a, b * b, v) == 1);
      }
    }
  }
}

TEST_CASE("ramification sets") {
  NumberField Q = NumberField::parse("Q");
  FieldElement m1 = el(Q, "-1");
  PlaceSet D = delta(m1, m1);
  REQUIRE(D.size() == 2);
  CHECK(D[0] == over(Q, 2));
  CHECK(D[1] == Place::real(0));
  CHECK(delta_upper(m1, m1).empty());

  PlaceSet D23 = delta(el(Q, "2"), el(Q, "3"));
  CHECK(D23 == PlaceSet{over(Q, 2), over(Q, 3)});
  CHECK(delta_upper(el(Q, "2"), el(Q, "3")) == D23);

  FieldElement a = el(Q, "6"), b = el(Q, "-5");
  CHECK(omega(a, b, a, b) == delta_upper(a, b));
  CHECK(reciprocity_check(m1, m1));
  CHECK(reciprocity_check(Q.one(), el(Q, "7")));
  CHECK(delta(Q.one(), el(Q, "7")).empty());
}

TEST_CASE("reciprocity over quadratic fields") {
  NumberField K = NumberField::parse("Q(sqrt,-5)");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-20, 20);
  int checked = 0;
  while (checked < 40) {
    FieldElement a = K.from_coords({Rational(d(rng)), Rational(d(rng))});
    FieldElement b = K.from_coords({Rational(d(rng)), Rational(d(rng), 3)});
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(reciprocity_check(a, b));
    CHECK(delta(a, b).size() % 2 == 0);
    ++checked;
  }
}

TEST_CASE("dyadic square classes") {
  for (const char* spec : {"Q", "Q(sqrt,-1)", "Q(sqrt,2)", "Q(sqrt,-5)", "Q(sqrt,-7)"}) {
    NumberField K = NumberField::parse(spec);
    for (const auto& P : K.primes_above(2)) {
      std::size_t local_degree = P.ramification * P.residue_degree;
      CHECK(dyadic_square_class_count(K, P) == (std::size_t(1) << (local_degree + 2)));
    }
  }
}

TEST_CASE("archimedean box") {
  NumberField Q = NumberField::parse("Q");
  CHECK(archimedean_box(el(Q, "4"), 0));
  CHECK(archimedean_box(el(Q, "-4"), 0));
  CHECK_FALSE(archimedean_box(el(Q, "9/2"), 0));
  NumberField K = NumberField::parse("Q(sqrt,2)");
  FieldElement x = el(K, "[3,1]");
  CHECK(archimedean_box(x, 0));
  CHECK_FALSE(archimedean_box(x, 1));
}

TEST_CASE("place set helpers") {
  NumberField Q = NumberField::parse("Q");
  PlaceSet S{over(Q, 2), over(Q, 3), Place::real(0)};
  PlaceSet T{over(Q, 3), over(Q, 5)};
  CHECK(contains(S, over(Q, 3)));
  CHECK_FALSE(contains(S, over(Q, 5)));
  CHECK(intersect(S, T) == PlaceSet{over(Q, 3)});
}
