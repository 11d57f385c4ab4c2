#pragma once

// Quaternion algebras with a prescribed ramification set, and elements with prescribed
// Hilbert symbols against a list of parameters.

#include "darmonlab/local_symbols.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace darmonlab {

/// A prescription that can never be met. condition() is 'a', 'b' or 'c'.
class Unsatisfiable : public std::invalid_argument {
 public:
  Unsatisfiable(char condition, const std::string& what)
      : std::invalid_argument(what), condition_(condition) {}
  char condition() const { return condition_; }

 private:
  char condition_;
};

struct SearchLog {
  long attempts = 0;
  long height_bound = 0;     // height of the local representatives
  long progression_bound = 0;  // cube radius reached in the lattice search
};

struct PrescriptionResult {
  FieldElement a, b;
  PlaceSet realized_delta;
  PlaceSet realized_delta_upper;
  SearchLog log;
};

using SymbolTargets = std::map<std::pair<std::size_t, Place>, int>;

struct PrescribeOptions {
  long local_height = 6;
  long progression_bound = 20000;  // about 2x this many candidates are tried
};

/// x with (a_i, x)_v equal to the target at every listed (i, v) and +1 everywhere else.
FieldElement prescribe_symbols(const std::vector<FieldElement>& a_list,
                               const SymbolTargets& targets, const PrescribeOptions& opt = {},
                               SearchLog* log = nullptr);

/// (a, b) with Delta^{a,b} = Delta_{a,b} = S for a set S of finite places of even size.
PrescriptionResult realize_finite(const NumberField& K, const PlaceSet& S,
                                  const PrescribeOptions& opt = {});

/// (a, b) with Delta_{a,b} = S; S may contain real places but no complex ones.
PrescriptionResult realize_with_real(const NumberField& K, const PlaceSet& S,
                                     const PrescribeOptions& opt = {});

}  // namespace darmonlab
