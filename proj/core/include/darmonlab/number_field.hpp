#pragma once

// Monogenic number fields K = Q(theta) whose ring of integers is Z[theta].

#include "darmonlab/fp_poly.hpp"
#include "darmonlab/integer.hpp"
#include "darmonlab/real_roots.hpp"
#include "darmonlab/upoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace darmonlab {

namespace detail {
struct FieldData;
}

class FieldElement;

/// Raised when the field spec is malformed or the field is outside the supported class.
class UnsupportedField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by bounded searches that ran out of room. Carries the bound that was tried.
class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, long bound)
      : std::runtime_error(what), bound_(bound) {}
  long bound() const { return bound_; }

 private:
  long bound_;
};

struct PrimeIdeal {
  std::uint64_t p = 0;
  fp::Poly generator;        // monic, divides f mod p
  unsigned ramification = 1;  // e
  unsigned residue_degree = 1;
  std::vector<Integer> beta;  // integral element with beta/p of valuation -1 here and integral elsewhere

  Integer characteristic() const { return Integer(std::to_string(p)); }
  /// q = p^f
  Integer norm() const;
  bool operator==(const PrimeIdeal& o) const { return p == o.p && generator == o.generator; }
  bool operator<(const PrimeIdeal& o) const {
    if (p != o.p) return p < o.p;
    if (generator.size() != o.generator.size()) return generator.size() < o.generator.size();
    return std::lexicographical_compare(generator.rbegin(), generator.rend(),
                                        o.generator.rbegin(), o.generator.rend());
  }
  std::string to_string() const;
};

struct Place {
  enum class Kind { Finite, Real, Complex };
  Kind kind = Kind::Finite;
  PrimeIdeal prime;       // finite places
  std::size_t index = 0;  // real/complex places

  static Place finite(PrimeIdeal P) { return {Kind::Finite, std::move(P), 0}; }
  static Place real(std::size_t i) { return {Kind::Real, {}, i}; }
  static Place complex(std::size_t i) { return {Kind::Complex, {}, i}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_real() const { return kind == Kind::Real; }
  bool operator==(const Place& o) const;
  bool operator<(const Place& o) const;
  std::string to_string() const;
};

using PlaceSet = std::vector<Place>;

/// Factored fractional ideal; zero exponents are never stored.
using FractionalIdeal = std::map<PrimeIdeal, long>;

class NumberField {
 public:
  /// "Q", "Q(sqrt,d)" or "poly:[c0,...,1]".
  static NumberField parse(std::string_view spec);
  static NumberField from_polynomial(const upoly::ZPoly& f, std::string spec = {});

  int degree() const;
  const upoly::ZPoly& minimal_polynomial() const;
  const upoly::QPoly& minimal_polynomial_q() const;
  const Integer& discriminant() const;
  const std::string& spec() const;
  std::size_t real_place_count() const;
  std::size_t complex_place_count() const;
  const std::vector<real::Interval>& real_intervals() const;
  /// Primes at which the Dedekind criterion was checked.
  const std::vector<Integer>& monogenic_certificate() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_coords(std::vector<Rational> coords) const;
  FieldElement from_integers(const std::vector<Integer>& coords) const;
  FieldElement generator() const;

  /// Primes above p with ramification indices, sorted.
  std::vector<PrimeIdeal> primes_above(const Integer& p) const;
  std::vector<Place> real_places() const;
  std::vector<Place> infinite_places() const;

  bool operator==(const NumberField& o) const;
  bool operator!=(const NumberField& o) const { return !(*this == o); }

  const detail::FieldData& data() const { return *data_; }

 private:
  explicit NumberField(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement(NumberField K, std::vector<Rational> coords);

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Coordinates as an integer vector; requires all denominators 1.
  std::vector<Integer> integer_coords() const;
  bool is_integral() const;
  /// Least common denominator of the coordinates.
  Integer denominator() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const Rational& q) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;
  FieldElement pow(long k) const;
  Rational norm() const;
  Rational trace() const;
  /// Rational value; requires is_rational().
  Rational rational_value() const;
  upoly::QPoly as_poly() const;
  std::string to_string() const;

 private:
  NumberField field_;
  std::vector<Rational> c_;
};

/// Parse "p/q" as a rational element or "[c0,c1,...]" as coordinates.
FieldElement parse_element(const NumberField& K, std::string_view text);

std::vector<std::pair<PrimeIdeal, unsigned>> factor_rational_prime(const NumberField& K,
                                                                   const Integer& p);

long valuation(const FieldElement& x, const PrimeIdeal& P);
/// Residue class in F_p[x]/(g) of a P-integral element.
fp::Poly residue(const FieldElement& x, const PrimeIdeal& P);
/// gamma = beta / p, valuation -1 at P and integral at every other prime.
FieldElement anti_uniformizer(const NumberField& K, const PrimeIdeal& P);
/// Integral element of valuation exactly 1 at P.
FieldElement uniformizer(const NumberField& K, const PrimeIdeal& P);
/// Lift of a residue-field element to an integral element.
FieldElement lift_residue(const NumberField& K, const fp::Poly& r);

/// Rational primes dividing numerator or denominator data of x (x != 0).
std::vector<Integer> support_primes(const FieldElement& x);

FractionalIdeal ideal_of(const FieldElement& x);
FractionalIdeal ideal_gcd(const FractionalIdeal& I, const FractionalIdeal& J);
FractionalIdeal ideal_product(const FractionalIdeal& I, const FractionalIdeal& J);
FractionalIdeal ideal_inverse(const FractionalIdeal& I);
long ideal_exponent(const FractionalIdeal& I, const PrimeIdeal& P);

struct Congruence {
  PrimeIdeal prime;
  FieldElement target;
  long exponent;
};

struct SignConstraint {
  std::size_t real_index;
  int sign;  // +1 or -1
};

/// y with v_P(y - target) >= k for each congruence and the requested real signs.
FieldElement weak_approximate(const NumberField& K, const std::vector<Congruence>& congruences,
                              const std::vector<SignConstraint>& signs, long search_bound = 64);

/// Signs of sigma(x) at every real place, ascending root order. Throws on zero.
std::vector<int> real_signs(const FieldElement& x);
int real_sign(const FieldElement& x, std::size_t real_index);
bool is_totally_nonnegative(const FieldElement& x);
/// Exact comparison of sigma(x) against a rational: sign of sigma(x) - q.
int compare_at_real(const FieldElement& x, std::size_t real_index, const Rational& q);

bool is_global_square(const FieldElement& x);
std::optional<FieldElement> square_root(const FieldElement& x);
Integer find_nonsquare_integer(const NumberField& K);

namespace integral {
// Integral elements as coordinate vectors, arithmetic modulo f and optionally modulo m.
using Vec = std::vector<Integer>;
Vec mul(const Vec& a, const Vec& b, const upoly::ZPoly& f);
Vec mul_mod(const Vec& a, const Vec& b, const upoly::ZPoly& f, const Integer& m);
Vec pow_mod(const Vec& a, const Integer& e, const upoly::ZPoly& f, const Integer& m);
Vec reduce(const Vec& a, const Integer& m);
bool divisible(const Vec& a, const Integer& m);
}  // namespace integral

}  // namespace darmonlab
