#include "darmonlab/json_io.hpp"
#include "doctest.h"

using namespace darmonlab;

TEST_CASE("place labels round trip") {
  NumberField Q = NumberField::parse("Q");
  Place two = Place::finite(Q.primes_above(2)[0]);
  CHECK(place_label(two, Q) == "2");
  CHECK(place_label(Place::real(0), Q) == "inf");
  CHECK(parse_place(Q, "2") == two);
  CHECK(parse_place(Q, "oo") == Place::real(0));

  NumberField K = NumberField::parse("Q(sqrt,-5)");
  for (long p : {2, 3, 7}) {
    for (const auto& P : K.primes_above(p)) {
      Place v = Place::finite(P);
      CHECK(parse_place(K, place_label(v, K)) == v);
    }
  }
  CHECK(place_label(Place::complex(0), K) == "complex[0]");
  CHECK(parse_place(K, "3:1") == Place::finite(K.primes_above(3)[1]));
  CHECK_THROWS(parse_place(K, "3"));
  CHECK_THROWS(parse_place(K, "real[0]"));
  CHECK_THROWS(parse_place(Q, "4"));
}

TEST_CASE("element text") {
  NumberField Q = NumberField::parse("Q");
  CHECK(element_text(parse_element(Q, "-3/4")) == "-3/4");
  NumberField K = NumberField::parse("Q(sqrt,2)");
  FieldElement x = parse_element(K, "[1,-1/2]");
  CHECK(parse_element(K, element_text(x)) == x);
}

TEST_CASE("symbol tables and results") {
  NumberField Q = NumberField::parse("Q");
  Json t = symbol_table_json(parse_element(Q, "-1"), parse_element(Q, "-1"));
  CHECK(t["field"].is_string());
  REQUIRE(t["symbols"].is_object());
  CHECK(t["symbols"]["2"] == -1);
  CHECK(t["symbols"]["inf"] == -1);
  CHECK(to_json(Tristate::Unknown) == "unknown");
  CHECK(to_json(PlaceSet{Place::real(0)}, Q).size() == 1);
}

TEST_CASE("formula export") {
  VariablePool pool;
  Variable x = pool.fresh("x"), y = pool.fresh("y");
  Polynomial big = sum({Polynomial(x), Polynomial(y), Polynomial(1)}).pow(30);
  Formula f = exists({x, y}, atom(big, Relation::Eq));
  Json small = formula_json(f);
  Json prog = formula_json(f, 10);
  CHECK(small.dump().find("\"terms\"") != std::string::npos);
  CHECK(prog.dump().find("\"program\"") != std::string::npos);
  CHECK(formula_sexpr(f, 10).find("(program") != std::string::npos);
  CHECK(formula_sexpr(f).find("(poly") != std::string::npos);
}

TEST_CASE("ledger json") {
  auto rows = budget_ledger(NumberField::parse("Q"), {1});
  Json j = to_json(rows);
  REQUIRE(j.contains("rows"));
  REQUIRE(j.contains("summary"));
  CHECK(j["rows"].size() == rows.size());
}
