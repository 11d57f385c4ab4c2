#include "darmonlab/ideal_lattice.hpp"
#include "doctest.h"

#include <random>

using namespace darmonlab;

TEST_CASE("prime power lattices have the right index") {
  NumberField K = NumberField::parse("Q(sqrt,-5)");
  for (long p : {2, 3, 7, 11}) {
    for (const auto& P : K.primes_above(p)) {
      for (long k : {1, 2, 3}) {
        Integer expected = 1;
        for (long i = 0; i < k; ++i) expected *= P.norm();
        CHECK(lattice_determinant(prime_power_lattice(K, P, k)) == expected);
      }
    }
  }
  NumberField Q = NumberField::parse("Q");
  CHECK(lattice_determinant(prime_power_lattice(Q, Q.primes_above(5)[0], 3)) == 125);
}

TEST_CASE("reduction preserves congruences") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (const char* spec : {"Q", "Q(sqrt,-5)", "Q(sqrt,2)", "poly:[-1,-1,0,1]"}) {
    NumberField K = NumberField::parse(spec);
    std::vector<Congruence> cong;
    for (long p : {2, 3, 7})
      for (const auto& P : K.primes_above(p)) cong.push_back({P, K.one(), 2});
    LatticeBasis L = congruence_lattice(K, cong);
    Integer det = lattice_determinant(L);
    for (int i = 0; i < 20; ++i) {
      std::vector<Integer> c;
      for (int j = 0; j < K.degree(); ++j) c.push_back(Integer(d(rng)) * d(rng));
      FieldElement x = K.from_integers(c);
      FieldElement y = reduce_modulo(x, L);
      for (const auto& cg : cong) {
        FieldElement diff = x - y;
        if (!diff.is_zero()) CHECK(valuation(diff, cg.prime) >= cg.exponent);
      }
      // Reduced representatives are no larger than the index of the lattice in each coordinate.
      for (const auto& ci : y.integer_coords()) CHECK(abs(ci) <= det);
    }
  }
}

TEST_CASE("hermite normal form") {
  LatticeBasis h = hermite_normal_form({{Integer(4), Integer(6)}, {Integer(6), Integer(4)}, {Integer(0), Integer(0)}}, 2);
  CHECK(h[0][0] == 2);
  CHECK(lattice_determinant(h) == 20);
  CHECK_THROWS(hermite_normal_form({{Integer(1), Integer(1)}}, 2));
}
