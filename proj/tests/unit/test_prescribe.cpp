#include "darmonlab/prescribe.hpp"
#include "doctest.h"

#include <algorithm>

using namespace darmonlab;

namespace {
FieldElement el(const NumberField& K, const char* s) { return parse_element(K, s); }
Place over(const NumberField& K, long p, std::size_t i = 0) {
  return Place::finite(K.primes_above(p).at(i));
}

void check_small_valuations(const PrescriptionResult& r, const PlaceSet& S) {
  for (const auto& v : S) {
    if (!v.is_finite()) continue;
    CHECK(std::abs(valuation(r.a, v.prime)) <= 1);
    CHECK(std::abs(valuation(r.b, v.prime)) <= 1);
  }
}
}  // namespace

TEST_CASE("finite prescriptions over Q") {
  NumberField Q = NumberField::parse("Q");
  PlaceSet S{over(Q, 2), over(Q, 3)};
  PrescriptionResult r = realize_finite(Q, S);
  CHECK(delta(r.a, r.b) == S);
  CHECK(delta_upper(r.a, r.b) == S);
  CHECK(r.realized_delta == S);
  check_small_valuations(r, S);

  PlaceSet T{over(Q, 5), over(Q, 13), over(Q, 29), over(Q, 47)};
  PrescriptionResult t = realize_finite(Q, T);
  CHECK(delta(t.a, t.b) == T);
  check_small_valuations(t, T);

  PrescriptionResult e = realize_finite(Q, {});
  CHECK(e.a == Q.one());
  CHECK(e.b == Q.one());
}

TEST_CASE("finite prescriptions over Q(sqrt -5)") {
  NumberField K = NumberField::parse("Q(sqrt,-5)");
  PlaceSet S{over(K, 2), over(K, 3, 0)};
  PrescriptionResult r = realize_finite(K, S);
  CHECK(delta(r.a, r.b) == S);
  check_small_valuations(r, S);

  PlaceSet T{over(K, 3, 1), over(K, 7, 0), over(K, 11), over(K, 5)};
  std::sort(T.begin(), T.end());
  PrescriptionResult t = realize_finite(K, T);
  CHECK(delta(t.a, t.b) == T);
}

TEST_CASE("prescriptions with real places") {
  NumberField Q = NumberField::parse("Q");
  PlaceSet S{over(Q, 2), Place::real(0)};
  PrescriptionResult r = realize_with_real(Q, S);
  CHECK(delta(r.a, r.b) == S);

  NumberField K = NumberField::parse("Q(sqrt,2)");
  PlaceSet R{Place::real(0), Place::real(1)};
  PrescriptionResult k = realize_with_real(K, R);
  CHECK(delta(k.a, k.b) == R);

  PrescriptionResult e = realize_with_real(K, {});
  CHECK(delta(e.a, e.b).empty());
}

TEST_CASE("prescription errors") {
  NumberField Q = NumberField::parse("Q");
  try {
    realize_finite(Q, {over(Q, 2)});
    FAIL("odd set accepted");
  } catch (const Unsatisfiable& e) {
    CHECK(e.condition() == 'b');
  }
  CHECK_THROWS_AS(realize_finite(Q, {over(Q, 2), over(Q, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(realize_finite(Q, {over(Q, 2), Place::real(0)}), std::invalid_argument);
  NumberField K = NumberField::parse("Q(sqrt,-5)");
  CHECK_THROWS_AS(realize_with_real(K, {over(K, 2), Place::complex(0)}), Unsatisfiable);
}

TEST_CASE("prescribed symbols") {
  NumberField Q = NumberField::parse("Q");
  FieldElement six = el(Q, "6");
  SymbolTargets targets{{{0, over(Q, 2)}, -1}, {{0, over(Q, 3)}, -1}};
  SearchLog log;
  FieldElement x = prescribe_symbols({six}, targets, {}, &log);
  CHECK(hilbert(six, x, over(Q, 2)) == -1);
  CHECK(hilbert(six, x, over(Q, 3)) == -1);
  for (const auto& v : candidate_places(six, x))
    if (!(v == over(Q, 2)) && !(v == over(Q, 3))) CHECK(hilbert(six, x, v) == 1);
  CHECK(log.attempts >= 1);

  CHECK(prescribe_symbols({six}, {}) == Q.one());

  try {
    prescribe_symbols({six}, {{{0, over(Q, 2)}, -1}});
    FAIL("parity violation accepted");
  } catch (const Unsatisfiable& e) {
    CHECK(e.condition() == 'b');
  }
  // 4 is a local square everywhere, so no symbol against it can be -1.
  try {
    prescribe_symbols({el(Q, "4")}, {{{0, over(Q, 3)}, -1}, {{0, over(Q, 5)}, -1}});
    FAIL("square parameter accepted");
  } catch (const Unsatisfiable& e) {
    CHECK(e.condition() == 'c');
  }
}
