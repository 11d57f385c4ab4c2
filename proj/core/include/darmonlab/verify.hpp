#pragma once
// Randomized and exhaustive self-checks shared by the command-line tool and the test suites.
#include "darmonlab/number_field.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace darmonlab {

struct SuiteReport {
  std::string name;
  long checked = 0;
  long passed = 0;
  long inconclusive = 0;
  std::vector<std::string> failures;  // first few failing cases
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return checked == passed + inconclusive && failures.empty(); }
  void fail(std::string what);
};

/// Random nonzero element whose coordinates are rationals of height at most h.
FieldElement random_element(const NumberField& K, std::mt19937_64& rng, long h);

/// Product formula and even |Delta| on q_pairs pairs over Q and per_field pairs over
/// Q(i), Q(sqrt 2) and Q(sqrt -5).
SuiteReport verify_reciprocity(std::uint64_t seed, long q_pairs = 1000, long per_field = 200,
                               long height = 100);
/// in_darmon over Q with S empty against the power oracle on all reduced fractions with
/// numerator and denominator bounded by `bound`.
SuiteReport verify_darmon_oracle(long bound = 200, const std::vector<unsigned long>& ns = {1, 2, 3, 4});
/// Ledger rows and assembled shapes over Q and Q(sqrt -5).
SuiteReport verify_budget(const std::vector<unsigned long>& ns = {1, 2, 10, 100});
/// Both rewrite identities on random instances under the bounded three-valued semantics.
SuiteReport verify_rewrites(std::uint64_t seed, long instances = 100, long coeff_height = 10,
                            long search_height = 3);

}  // namespace darmonlab
