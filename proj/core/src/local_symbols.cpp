#include "darmonlab/local_symbols.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace darmonlab {

namespace {

Integer power(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// O_K / P^N with canonical labels; elements are integral coordinate vectors mod p^(N+1).
class LocalRing {
 public:
  LocalRing(const NumberField& K, const PrimeIdeal& P, unsigned N)
      : K_(K), f_(K.minimal_polynomial()), P_(P), N_(N), d_(static_cast<std::size_t>(K.degree())) {
    p_ = P.characteristic();
    modulus_ = power(p_, N + 1);
    q_ = to_u64(P.norm());
    e_ = P.ramification;
    for (std::uint64_t idx = 0; idx < q_; ++idx) residues_.push_back(residue_poly(idx));
    gamma_ = anti_uniformizer(K, P);
    auto z = uniformizer(K, P).integer_coords();
    unsigned digits = std::max(N - e_, 2 * e_ + 1);
    std::vector<integral::Vec> zpow{unit()};
    for (unsigned i = 1; i < digits; ++i)
      zpow.push_back(integral::mul_mod(zpow.back(), z, f_, modulus_));
    std::uint64_t count = ipow(q_, digits);
    elements_.reserve(count);
    for (std::uint64_t label = 0; label < count; ++label) {
      integral::Vec x(d_);
      std::uint64_t t = label;
      for (unsigned i = 0; i < digits; ++i) {
        auto r = lift(residues_[t % q_]);
        t /= q_;
        auto term = integral::mul(r, zpow[i], f_);
        for (std::size_t j = 0; j < d_; ++j) x[j] += term[j];
      }
      elements_.push_back(integral::reduce(x, modulus_));
    }
    // Squares modulo P^N only depend on the root modulo P^(N-e).
    search_size_ = ipow(q_, N - e_);
    for (std::uint64_t i = 0; i < search_size_; ++i)
      squares_.insert(label(mul(elements_[i], elements_[i])));
    build_unit_classes();
    build_basis();
  }

  integral::Vec unit() const {
    integral::Vec one(d_);
    one[0] = 1;
    return one;
  }
  integral::Vec mul(const integral::Vec& a, const integral::Vec& b) const {
    return integral::mul_mod(a, b, f_, modulus_);
  }
  integral::Vec add(const integral::Vec& a, const integral::Vec& b) const {
    integral::Vec out(d_);
    for (std::size_t i = 0; i < d_; ++i) out[i] = a[i] + b[i];
    return integral::reduce(out, modulus_);
  }
  integral::Vec sub(const integral::Vec& a, const integral::Vec& b) const {
    integral::Vec out(d_);
    for (std::size_t i = 0; i < d_; ++i) out[i] = a[i] - b[i];
    return integral::reduce(out, modulus_);
  }
  integral::Vec from(const FieldElement& x) const {
    return integral::reduce(x.integer_coords(), modulus_);
  }

  /// Digits r_0, r_1, ... of x with x_{i+1} = (x_i - r_i) * gamma, packed base q.
  std::uint64_t label(integral::Vec x, unsigned digits = 0) const {
    if (digits == 0) digits = N_;
    std::uint64_t out = 0, weight = 1;
    for (unsigned i = 0; i < digits; ++i) {
      fp::Poly r = fp::rem(fp::reduce(x, P_.p), P_.generator, P_.p);
      out += weight * residue_index(r);
      weight *= q_;
      if (i + 1 == digits) break;
      auto lr = lift(r);
      for (std::size_t j = 0; j < d_; ++j) x[j] -= lr[j];
      x = integral::mul(x, P_.beta, f_);
      for (auto& c : x) {
        if (!mpz_divisible_p(c.get_mpz_t(), p_.get_mpz_t()))
          throw std::logic_error("LocalRing::label lost integrality");
        c /= p_;
      }
    }
    return out;
  }

  /// Square class of x != 0 as (valuation parity, unit class).
  std::pair<int, int> square_class(const FieldElement& x) const {
    Integer den = x.denominator();
    FieldElement y = x * Rational(den * den);
    long v = valuation(y, P_);
    FieldElement u = y * gamma_.pow(v);
    int cls = unit_class_.at(label(from(u), 2 * e_ + 1));
    return {static_cast<int>(v % 2), cls};
  }

  std::size_t class_count() const { return std::size_t{1} << basis_.size(); }

  /// Isotropy of z^2 - a x^2 - b y^2 for a, b in the given square classes.
  /// The symbol is bimultiplicative, so it is read off a Gram matrix on a basis.
  bool isotropic(std::pair<int, int> ca, std::pair<int, int> cb) const {
    std::uint32_t x = coordinates(ca), y = coordinates(cb);
    int sign = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!((x >> i) & 1)) continue;
      for (std::size_t j = 0; j < basis_.size(); ++j)
        if (((y >> j) & 1) && !gram(i, j)) sign = -sign;
    }
    return sign == 1;
  }

 private:
  static std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
  }

  void build_unit_classes() {
    unsigned k = 2 * e_ + 1;
    std::uint64_t count = ipow(q_, k);
    std::vector<integral::Vec> unit_squares;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < ipow(q_, e_ + 1); ++i) {
      if (i % q_ == 0) continue;  // not a unit
      auto s = mul(elements_[i], elements_[i]);
      if (seen.insert(label(s, k)).second) unit_squares.push_back(s);
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      if (i % q_ == 0) continue;
      std::uint64_t l = label(elements_[i], k);
      if (unit_class_.count(l)) continue;
      int id = static_cast<int>(class_reps_.size());
      class_reps_.push_back(elements_[i]);
      for (const auto& s : unit_squares) unit_class_[label(mul(elements_[i], s), k)] = id;
    }
  }

  int class_of_product(int i, int j) const {
    return unit_class_.at(label(mul(class_reps_[static_cast<std::size_t>(i)],
                                    class_reps_[static_cast<std::size_t>(j)]),
                                2 * e_ + 1));
  }

  void build_basis() {
    const int n = static_cast<int>(class_reps_.size());
    unit_coords_.assign(static_cast<std::size_t>(n), -1);
    int one = unit_class_.at(label(unit(), 2 * e_ + 1));
    unit_coords_[static_cast<std::size_t>(one)] = 0;
    std::vector<int> known{one};
    for (int c = 0; c < n; ++c) {
      if (unit_coords_[static_cast<std::size_t>(c)] >= 0) continue;
      int bit = static_cast<int>(basis_.size());
      basis_.push_back({0, c});
      std::vector<int> fresh;
      for (int k : known) {
        int prod = class_of_product(k, c);
        unit_coords_[static_cast<std::size_t>(prod)] =
            unit_coords_[static_cast<std::size_t>(k)] | (1 << bit);
        fresh.push_back(prod);
      }
      known.insert(known.end(), fresh.begin(), fresh.end());
    }
    unit_dim_ = basis_.size();
    basis_.push_back({1, one});
    gram_.assign(basis_.size() * basis_.size(), -1);
  }

  std::uint32_t coordinates(std::pair<int, int> c) const {
    std::uint32_t x = static_cast<std::uint32_t>(unit_coords_.at(static_cast<std::size_t>(c.second)));
    if (c.first) x |= 1u << unit_dim_;
    return x;
  }

  bool gram(std::size_t i, std::size_t j) const {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    int& g = gram_[i * basis_.size() + j];
    if (g < 0) {
      g = search(representative(basis_[i]), representative(basis_[j])) ? 1 : 0;
      gram_[j * basis_.size() + i] = g;
    }
    return g == 1;
  }

  // Integral element of valuation parity.first with unit part in class parity.second.
  integral::Vec representative(std::pair<int, int> c) const {
    integral::Vec u = class_reps_.at(static_cast<std::size_t>(c.second));
    if (c.first == 0) return u;
    // The class convention divides by gamma, and u / gamma = u * z * (z * gamma)^(-1).
    FieldElement z = uniformizer(K_, P_);
    FieldElement w = z * gamma_;
    return mul(u, mul(from(z), from(w)));
  }

  bool search(const integral::Vec& a, const integral::Vec& b) const {
    std::unordered_set<std::uint64_t> a_sq;
    std::vector<integral::Vec> b_sq;
    for (std::uint64_t i = 0; i < search_size_; ++i) {
      auto xx = mul(elements_[i], elements_[i]);
      a_sq.insert(label(mul(a, xx)));
      b_sq.push_back(mul(b, xx));
    }
    const integral::Vec one = unit();
    // z = 1: a x^2 + b y^2 = 1.  x = 1: z^2 - b y^2 = a.
    for (const auto& by2 : b_sq) {
      if (a_sq.count(label(sub(one, by2)))) return true;
      if (squares_.count(label(add(a, by2)))) return true;
    }
    // y = 1: z^2 - a x^2 = b.
    for (std::uint64_t i = 0; i < search_size_; ++i) {
      if (squares_.count(label(add(b, mul(a, mul(elements_[i], elements_[i])))))) return true;
    }
    return false;
  }

  fp::Poly residue_poly(std::uint64_t idx) const {
    fp::Poly r;
    for (unsigned i = 0; i < P_.residue_degree; ++i) {
      r.push_back(idx % P_.p);
      idx /= P_.p;
    }
    fp::trim(r);
    return r;
  }
  std::uint64_t residue_index(const fp::Poly& r) const {
    std::uint64_t idx = 0;
    for (std::size_t i = r.size(); i-- > 0;) idx = idx * P_.p + r[i];
    return idx;
  }
  integral::Vec lift(const fp::Poly& r) const {
    integral::Vec v = fp::lift(r);
    v.resize(d_);
    return v;
  }

  NumberField K_;
  upoly::ZPoly f_;
  PrimeIdeal P_;
  unsigned N_;
  std::size_t d_;
  Integer p_;
  Integer modulus_;
  std::uint64_t q_;
  unsigned e_;
  FieldElement gamma_{NumberField::parse("Q"), {}};
  std::vector<fp::Poly> residues_;
  std::vector<integral::Vec> elements_;
  std::uint64_t search_size_ = 0;
  std::unordered_set<std::uint64_t> squares_;
  std::unordered_map<std::uint64_t, int> unit_class_;
  std::vector<integral::Vec> class_reps_;
  std::vector<int> unit_coords_;
  std::vector<std::pair<int, int>> basis_;
  std::size_t unit_dim_ = 0;
  mutable std::mutex memo_mutex_;
  mutable std::vector<int> gram_;
};

const LocalRing& dyadic_ring(const NumberField& K, const PrimeIdeal& P) {
  static std::mutex mu;
  static std::map<std::pair<upoly::ZPoly, PrimeIdeal>, std::unique_ptr<LocalRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(K.minimal_polynomial(), P);
  auto it = cache.find(key);
  if (it == cache.end()) {
    unsigned N = 2 * P.ramification + 3;
    it = cache.emplace(key, std::make_unique<LocalRing>(K, P, N)).first;
  }
  return *it->second;
}

int quadratic_char(const fp::Poly& r, const PrimeIdeal& P) {
  return fp::quadratic_character(r, P.generator, P.p);
}

int tame_symbol(const FieldElement& a, const FieldElement& b, const PrimeIdeal& P) {
  const NumberField& K = a.field();
  long alpha = valuation(a, P), beta = valuation(b, P);
  FieldElement gamma = anti_uniformizer(K, P);
  fp::Poly u = residue(a * gamma.pow(alpha), P);
  fp::Poly w = residue(b * gamma.pow(beta), P);
  int s = 1;
  if ((alpha * beta) % 2 != 0) {
    Integer q = P.norm();
    if (mpz_tstbit(Integer((q - 1) / 2).get_mpz_t(), 0)) s = -s;
  }
  if (beta % 2 != 0) s *= quadratic_char(u, P);
  if (alpha % 2 != 0) s *= quadratic_char(w, P);
  return s;
}

}  // namespace

bool dyadic_isotropic(const FieldElement& a, const FieldElement& b, const PrimeIdeal& P) {
  const LocalRing& R = dyadic_ring(a.field(), P);
  return R.isotropic(R.square_class(a), R.square_class(b));
}

std::size_t dyadic_square_class_count(const NumberField& K, const PrimeIdeal& P) {
  if (P.p != 2) throw std::invalid_argument("not a place over 2");
  return dyadic_ring(K, P).class_count();
}

int hilbert(const FieldElement& a, const FieldElement& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert symbol of zero");
  switch (v.kind) {
    case Place::Kind::Complex:
      return 1;
    case Place::Kind::Real:
      return (real_sign(a, v.index) < 0 && real_sign(b, v.index) < 0) ? -1 : 1;
    case Place::Kind::Finite:
      if (v.prime.p == 2) return dyadic_isotropic(a, b, v.prime) ? 1 : -1;
      return tame_symbol(a, b, v.prime);
  }
  return 1;
}

bool local_square(const FieldElement& x, const Place& v) {
  if (x.is_zero()) throw std::domain_error("local_square of zero");
  switch (v.kind) {
    case Place::Kind::Complex:
      return true;
    case Place::Kind::Real:
      return real_sign(x, v.index) > 0;
    case Place::Kind::Finite:
      break;
  }
  const PrimeIdeal& P = v.prime;
  long nu = valuation(x, P);
  if (nu % 2 != 0) return false;
  if (P.p != 2) {
    fp::Poly u = residue(x * anti_uniformizer(x.field(), P).pow(nu), P);
    return quadratic_char(u, P) == 1;
  }
  const LocalRing& R = dyadic_ring(x.field(), P);
  return R.square_class(x) == R.square_class(x.field().one());
}

PlaceSet candidate_places(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("candidate_places of zero");
  const NumberField& K = a.field();
  std::set<Integer> primes{Integer(2)};
  for (const auto& p : support_primes(a)) primes.insert(p);
  for (const auto& p : support_primes(b)) primes.insert(p);
  PlaceSet out;
  for (const auto& p : primes)
    for (const auto& P : K.primes_above(p)) {
      if (p == 2 || valuation(a, P) != 0 || valuation(b, P) != 0) out.push_back(Place::finite(P));
    }
  for (const auto& v : K.real_places()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Place, int>> symbol_table(const FieldElement& a, const FieldElement& b) {
  std::vector<std::pair<Place, int>> out;
  for (const auto& v : candidate_places(a, b)) out.emplace_back(v, hilbert(a, b, v));
  return out;
}

PlaceSet delta(const FieldElement& a, const FieldElement& b) {
  PlaceSet out;
  for (const auto& [v, s] : symbol_table(a, b))
    if (s == -1) out.push_back(v);
  return out;
}

PlaceSet delta_upper(const FieldElement& a, const FieldElement& b) {
  PlaceSet out;
  for (const auto& v : delta(a, b)) {
    if (!v.is_finite()) continue;
    if (valuation(a, v.prime) % 2 != 0 || valuation(b, v.prime) % 2 != 0) out.push_back(v);
  }
  return out;
}

PlaceSet omega(const FieldElement& a, const FieldElement& b, const FieldElement& c,
               const FieldElement& d) {
  return intersect(delta_upper(a, b), delta_upper(c, d));
}

bool reciprocity_check(const FieldElement& a, const FieldElement& b) {
  int prod = 1;
  for (const auto& [v, s] : symbol_table(a, b)) prod *= s;
  return prod == 1;
}

bool archimedean_box(const FieldElement& x, std::size_t real_index) {
  return compare_at_real(x, real_index, 4) <= 0 && compare_at_real(x, real_index, -4) >= 0;
}

bool contains(const PlaceSet& S, const Place& v) {
  return std::find(S.begin(), S.end(), v) != S.end();
}

PlaceSet intersect(const PlaceSet& S, const PlaceSet& T) {
  PlaceSet out;
  for (const auto& v : S)
    if (contains(T, v)) out.push_back(v);
  return out;
}

}  // namespace darmonlab
