#include "darmonlab/prescribe.hpp"

#include "darmonlab/definable_sets.hpp"
#include "darmonlab/ideal_lattice.hpp"

#include <set>

namespace darmonlab {

namespace {

int target_of(const SymbolTargets& targets, std::size_t i, const Place& v) {
  auto it = targets.find({i, v});
  return it == targets.end() ? 1 : it->second;
}

// Dyadic places, target places and places where some a_i has odd valuation. Elsewhere every
// a_i is a unit up to squares, so the symbol only depends on the parity of v(x).
std::vector<Place> controlled_places(const NumberField& K, const std::vector<FieldElement>& a_list,
                                     const SymbolTargets& targets) {
  std::set<Place> out;
  for (const auto& P : K.primes_above(2)) out.insert(Place::finite(P));
  for (const auto& a : a_list)
    for (const auto& p : support_primes(a))
      for (const auto& P : K.primes_above(p))
        if (valuation(a, P) % 2 != 0) out.insert(Place::finite(P));
  for (const auto& [key, s] : targets)
    if (key.second.is_finite()) out.insert(key.second);
  return {out.begin(), out.end()};
}

bool verify_symbols(const std::vector<FieldElement>& a_list, const SymbolTargets& targets,
                    const FieldElement& x) {
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    std::set<Place> places;
    for (const auto& v : candidate_places(a_list[i], x)) places.insert(v);
    for (const auto& [key, s] : targets)
      if (key.first == i) places.insert(key.second);
    for (const auto& v : places)
      if (hilbert(a_list[i], x, v) != target_of(targets, i, v)) return false;
  }
  return true;
}

// Symbols at places of x outside the controlled set must all be trivial.
bool new_places_trivial(const std::vector<FieldElement>& a_list, const std::set<PrimeIdeal>& known,
                        const FieldElement& x) {
  const NumberField& K = x.field();
  for (const auto& p : support_primes(x)) {
    if (!p.fits_ulong_p()) return false;
    for (const auto& P : K.primes_above(p)) {
      if (known.count(P) || valuation(x, P) % 2 == 0) continue;
      for (const auto& a : a_list)
        if (hilbert(a, x, Place::finite(P)) != 1) return false;
    }
  }
  return true;
}

// The part of N(x) outside the known primes must split quickly into primes that fit in 64 bits.
// Candidates with large or hard-to-split norms are skipped instead of factored.
bool norm_factors_quickly(const FieldElement& x, const std::set<Integer>& known) {
  Rational N = x.norm();
  Integer n = abs(N.get_num()) * N.get_den();
  for (const auto& p : known)
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
  auto f = factor_integer_bounded(n, 30000, 128);
  if (!f) return false;
  for (const auto& [p, e] : *f)
    if (!p.fits_ulong_p()) return false;
  return true;
}

void check_conditions(const std::vector<FieldElement>& a_list, const SymbolTargets& targets) {
  std::map<std::size_t, int> product;
  for (const auto& [key, s] : targets) {
    if (key.first >= a_list.size()) throw Unsatisfiable('a', "target index out of range");
    if (s != 1 && s != -1) throw Unsatisfiable('a', "targets must be +1 or -1");
    product.emplace(key.first, 1).first->second *= s;
  }
  for (const auto& [i, s] : product)
    if (s != 1)
      throw Unsatisfiable('b', "targets for index " + std::to_string(i) + " have product -1");
  for (const auto& [key, s] : targets)
    if (s == -1 && local_square(a_list[key.first], key.second))
      throw Unsatisfiable('c', "parameter " + std::to_string(key.first) +
                                   " is a local square at " + key.second.to_string());
}

bool signs_hold(const FieldElement& x, const std::vector<SignConstraint>& signs) {
  if (x.is_zero()) return signs.empty();
  for (const auto& s : signs)
    if (real_sign(x, s.real_index) != s.sign) return false;
  return true;
}

// Visits y + sum c_i b_i over integer vectors c in cubes of growing radius, skipping zero and
// points with the wrong signs, until `accept` returns true or `limit` points have been tried.
template <class F>
std::optional<FieldElement> lattice_search(const FieldElement& y, const LatticeBasis& L,
                                           const std::vector<SignConstraint>& signs, long limit,
                                           long* radius, F&& accept) {
  const NumberField& K = y.field();
  const std::size_t d = L.size();
  long tried = 0;
  for (long R = 0; tried < limit; ++R) {
    std::vector<long> c(d, -R);
    while (true) {
      long top = 0;
      for (long ci : c) top = std::max(top, std::labs(ci));
      if (top == R) {
        std::vector<Integer> v = y.integer_coords();
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t t = 0; t < d; ++t) v[t] += c[i] * L[i][t];
        FieldElement x = K.from_integers(v);
        if (!x.is_zero() && signs_hold(x, signs)) {
          ++tried;
          if (radius) *radius = R;
          if (accept(x)) return x;
          if (tried >= limit) return std::nullopt;
        }
      }
      std::size_t i = 0;
      while (i < d && c[i] == R) c[i++] = -R;
      if (i == d) break;
      ++c[i];
    }
  }
  return std::nullopt;
}

// Small integral element satisfying the congruences and signs.
FieldElement small_solution(const NumberField& K, const std::vector<Congruence>& cong,
                            const std::vector<SignConstraint>& signs) {
  LatticeBasis L = congruence_lattice(K, cong);
  FieldElement y = reduce_modulo(weak_approximate(K, cong, signs), L);
  auto x = lattice_search(y, L, signs, 1000000, nullptr, [](const FieldElement&) { return true; });
  if (!x) throw SearchExhausted("no small element with the requested signs", 1000000);
  return *x;
}

}  // namespace

FieldElement prescribe_symbols(const std::vector<FieldElement>& a_list,
                               const SymbolTargets& targets, const PrescribeOptions& opt,
                               SearchLog* log) {
  if (a_list.empty()) throw std::invalid_argument("empty parameter list");
  for (const auto& a : a_list)
    if (a.is_zero()) throw std::domain_error("parameter must be nonzero");
  check_conditions(a_list, targets);
  const NumberField& K = a_list[0].field();
  SearchLog local;
  SearchLog& lg = log ? *log : local;
  lg.height_bound = opt.local_height;

  bool trivial = true;
  for (const auto& [key, s] : targets) trivial = trivial && s == 1;
  if (trivial) {
    ++lg.attempts;
    return K.one();
  }

  // Local square-class representatives at each controlled finite place.
  auto reps = height_enumeration(K, opt.local_height);
  std::vector<Congruence> cong;
  std::set<Integer> known;
  std::set<PrimeIdeal> controlled;
  for (const auto& v : controlled_places(K, a_list, targets)) {
    const PrimeIdeal& P = v.prime;
    std::optional<FieldElement> rep;
    for (const auto& r : reps) {
      if (r.is_zero() || valuation(r, P) < 0) continue;
      bool ok = true;
      for (std::size_t i = 0; i < a_list.size() && ok; ++i)
        ok = hilbert(a_list[i], r, v) == target_of(targets, i, v);
      if (ok) {
        rep = r;
        break;
      }
    }
    if (!rep) throw SearchExhausted("no local representative at " + v.to_string(), opt.local_height);
    long two = P.p == 2 ? long(P.ramification) : 0;
    long k = valuation(*rep, P) + 2 * two + 1;
    cong.push_back({P, *rep, k});
    known.insert(P.characteristic());
    controlled.insert(P);
  }

  std::vector<SignConstraint> signs;
  for (const auto& v : K.real_places()) {
    int want = 0;  // 0 = any
    for (std::size_t i = 0; i < a_list.size(); ++i) {
      int t = target_of(targets, i, v);
      bool neg = real_sign(a_list[i], v.index) < 0;
      int need = t == -1 ? -1 : (neg ? 1 : 0);
      if (need == 0) continue;
      if (want != 0 && want != need)
        throw Unsatisfiable('c', "incompatible targets at " + v.to_string());
      want = need;
    }
    if (want != 0) signs.push_back({v.index, want});
  }

  const LatticeBasis L = congruence_lattice(K, cong);
  const FieldElement y = reduce_modulo(weak_approximate(K, cong, signs), L);
  long radius = 0;
  auto found = lattice_search(y, L, signs, 2 * opt.progression_bound + 1, &radius,
                              [&](const FieldElement& x) {
                                ++lg.attempts;
                                return norm_factors_quickly(x, known) &&
                                       new_places_trivial(a_list, controlled, x) &&
                                       verify_symbols(a_list, targets, x);
                              });
  lg.progression_bound = radius;
  if (found) return *found;
  throw SearchExhausted("prescribe_symbols: progression search exhausted", opt.progression_bound);
}

namespace {

PlaceSet sorted_unique(PlaceSet S) {
  std::sort(S.begin(), S.end());
  if (std::adjacent_find(S.begin(), S.end()) != S.end())
    throw std::invalid_argument("place listed twice");
  return S;
}

// b / y^2 with |v_P| <= 1 on the finite places of S.
FieldElement reduce_squarefree(const NumberField& K, const PlaceSet& S, const FieldElement& b) {
  std::vector<Congruence> cong;
  bool needed = false;
  for (const auto& v : S) {
    if (!v.is_finite()) continue;
    long nu = valuation(b, v.prime);
    long m = nu >= 0 ? nu / 2 : -((-nu + 1) / 2);
    if (m < 0) throw std::logic_error("unexpected negative valuation");
    if (m != 0) needed = true;
    cong.push_back({v.prime, uniformizer(K, v.prime).pow(m), m + 1});
  }
  if (!needed) return b;
  FieldElement y = small_solution(K, cong, {});
  return b / (y * y);
}

// Every prime in the support of a becomes a congruence condition on b, so a is picked with the
// part of its norm outside S free of primes above 10^4 when such a small solution exists.
FieldElement smooth_solution(const NumberField& K, const PlaceSet& S,
                             const std::vector<Congruence>& cong,
                             const std::vector<SignConstraint>& signs) {
  std::set<Integer> in_S;
  for (const auto& v : S)
    if (v.is_finite()) in_S.insert(v.prime.characteristic());
  auto smooth = [&](const FieldElement& x) {
    Rational N = x.norm();
    Integer n = abs(N.get_num()) * N.get_den();
    for (const auto& p : in_S)
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    for (unsigned long p = 2; p < 10000 && n > 1; ++p)
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    return n == 1;
  };
  LatticeBasis L = congruence_lattice(K, cong);
  FieldElement y = reduce_modulo(weak_approximate(K, cong, signs), L);
  if (auto a = lattice_search(y, L, signs, 2000, nullptr, smooth)) return *a;
  return small_solution(K, cong, signs);
}

PrescriptionResult realize(const NumberField& K, const PlaceSet& S_in,
                           const PrescribeOptions& opt) {
  PlaceSet S = sorted_unique(S_in);
  if (S.size() % 2 != 0)
    throw Unsatisfiable('b', "a ramification set must have even cardinality");
  for (const auto& v : S)
    if (v.kind == Place::Kind::Complex)
      throw Unsatisfiable('c', "complex places never ramify");
  PrescriptionResult res{K.one(), K.one(), {}, {}, {}};
  if (!S.empty()) {
    std::vector<Congruence> cong;
    std::vector<SignConstraint> signs;
    for (const auto& v : S)
      if (v.is_finite()) cong.push_back({v.prime, uniformizer(K, v.prime), 2});
    for (const auto& v : K.real_places())
      signs.push_back({v.index, contains(S, v) ? -1 : 1});
    res.a = smooth_solution(K, S, cong, signs);
    SymbolTargets targets;
    for (const auto& v : S) targets[{0, v}] = -1;
    FieldElement b = prescribe_symbols({res.a}, targets, opt, &res.log);
    res.b = reduce_squarefree(K, S, b);
  }
  res.realized_delta = delta(res.a, res.b);
  res.realized_delta_upper = delta_upper(res.a, res.b);
  if (res.realized_delta != S) throw std::logic_error("realized ramification set differs");
  return res;
}

}  // namespace

PrescriptionResult realize_finite(const NumberField& K, const PlaceSet& S,
                                  const PrescribeOptions& opt) {
  for (const auto& v : S)
    if (!v.is_finite()) throw std::invalid_argument("realize_finite takes finite places only");
  PrescriptionResult res = realize(K, S, opt);
  if (res.realized_delta_upper != res.realized_delta)
    throw std::logic_error("odd-valuation filter dropped a place");
  return res;
}

PrescriptionResult realize_with_real(const NumberField& K, const PlaceSet& S,
                                     const PrescribeOptions& opt) {
  return realize(K, S, opt);
}

}  // namespace darmonlab
