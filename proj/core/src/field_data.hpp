#pragma once

#include "darmonlab/number_field.hpp"

#include <mutex>

namespace darmonlab::detail {

struct FieldData {
  upoly::ZPoly f;
  upoly::QPoly fq;
  int d = 1;
  Integer disc;
  std::string spec;
  std::vector<real::Interval> real_roots;
  std::size_t complex_count = 0;
  std::vector<Integer> certificate;

  mutable std::mutex cache_mutex;
  mutable std::map<Integer, std::vector<std::pair<PrimeIdeal, unsigned>>> prime_cache;
};

// Reduce a polynomial with rational coefficients modulo the monic f.
std::vector<Rational> reduce_mod_f(std::vector<Rational> c, const upoly::ZPoly& f);

}  // namespace darmonlab::detail
