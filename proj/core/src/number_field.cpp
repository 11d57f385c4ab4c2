#include "darmonlab/number_field.hpp"

#include "field_data.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace darmonlab {

namespace detail {

std::vector<Rational> reduce_mod_f(std::vector<Rational> c, const upoly::ZPoly& f) {
  const std::size_t d = f.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    Rational t = c[i];
    for (std::size_t j = 0; j <= d; ++j) c[i - d + j] -= t * f[j];
  }
  c.resize(d);
  return c;
}

}  // namespace detail

namespace {

using detail::FieldData;

std::string poly_string(const fp::Poly& g) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = g.size(); i-- > 0;) {
    if (g[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || g[i] != 1) os << g[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

upoly::ZPoly parse_int_list(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw UnsupportedField("expected a bracketed coefficient list: " + s);
  s = s.substr(1, s.size() - 2);
  upoly::ZPoly out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational q = parse_rational(item);
    if (q.get_den() != 1) throw UnsupportedField("non-integer coefficient: " + item);
    out.push_back(q.get_num());
  }
  return out;
}

bool squarefree_integer(const Integer& d) {
  for (const auto& [p, e] : factor_integer(d))
    if (e > 1) return false;
  return true;
}

// Dedekind criterion: is Z[theta] maximal at p?
bool dedekind_maximal(const upoly::ZPoly& f, std::uint64_t p) {
  fp::Poly fbar = fp::reduce(f, p);
  auto factors = fp::factor(fbar, p);
  fp::Poly gbar{1};
  for (const auto& [g, e] : factors) gbar = fp::mul(gbar, g, p);
  fp::Poly hbar = fp::divmod(fbar, gbar, p).first;
  upoly::QPoly G = upoly::from_integers(fp::lift(gbar));
  upoly::QPoly H = upoly::from_integers(fp::lift(hbar));
  upoly::QPoly F = upoly::sub(upoly::mul(G, H), upoly::from_integers(f));
  Integer pp(std::to_string(p));
  for (auto& c : F) c /= pp;
  fp::Poly Fbar = fp::reduce(F, p);
  fp::Poly t = fp::gcd(fp::gcd(Fbar, gbar, p), hbar, p);
  return fp::degree(t) == 0;
}

std::vector<Rational> pad(std::vector<Rational> c, int d) {
  c.resize(static_cast<std::size_t>(d));
  return c;
}

Integer lcm_denominators(const std::vector<Rational>& c) {
  Integer l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

}  // namespace

Integer PrimeIdeal::norm() const {
  Integer q;
  Integer pp(std::to_string(p));
  mpz_pow_ui(q.get_mpz_t(), pp.get_mpz_t(), residue_degree);
  return q;
}

std::string PrimeIdeal::to_string() const {
  return "(" + std::to_string(p) + ", " + poly_string(generator) + ")";
}

bool Place::operator==(const Place& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Finite) return prime == o.prime;
  return index == o.index;
}

bool Place::operator<(const Place& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  if (kind == Kind::Finite) return prime < o.prime;
  return index < o.index;
}

std::string Place::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return prime.to_string();
    case Kind::Real:
      return "real[" + std::to_string(index) + "]";
    case Kind::Complex:
      return "complex[" + std::to_string(index) + "]";
  }
  return {};
}

NumberField NumberField::parse(std::string_view spec_in) {
  std::string spec(spec_in);
  spec.erase(std::remove_if(spec.begin(), spec.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             spec.end());
  if (spec == "Q") return from_polynomial({0, 1}, "Q");
  const std::string sq = "Q(sqrt,";
  if (spec.rfind(sq, 0) == 0 && spec.back() == ')') {
    Rational d = parse_rational(spec.substr(sq.size(), spec.size() - sq.size() - 1));
    if (d.get_den() != 1 || d == 0) throw UnsupportedField("Q(sqrt,d) needs a nonzero integer d");
    Integer n = d.get_num();
    if (!squarefree_integer(n)) throw UnsupportedField("d must be squarefree: " + n.get_str());
    if (n == 1) throw UnsupportedField("Q(sqrt,1) is not a quadratic field");
    Integer r = mod_floor(n, 4);
    upoly::ZPoly f = (r == 1) ? upoly::ZPoly{(1 - n) / 4, -1, 1} : upoly::ZPoly{-n, 0, 1};
    return from_polynomial(f, "Q(sqrt," + n.get_str() + ")");
  }
  const std::string pp = "poly:";
  if (spec.rfind(pp, 0) == 0) return from_polynomial(parse_int_list(spec.substr(pp.size())), spec);
  throw UnsupportedField("unrecognized field spec: " + spec);
}

NumberField NumberField::from_polynomial(const upoly::ZPoly& f_in, std::string spec) {
  upoly::ZPoly f = f_in;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) throw UnsupportedField("minimal polynomial must have degree >= 1");
  if (f.back() != 1) throw UnsupportedField("minimal polynomial must be monic");
  if (!upoly::is_irreducible(f)) throw UnsupportedField("polynomial is reducible over Q");
  auto data = std::make_shared<FieldData>();
  data->f = f;
  data->fq = upoly::from_integers(f);
  data->d = static_cast<int>(f.size()) - 1;
  Rational disc = upoly::discriminant(data->fq);
  data->disc = disc.get_num();
  if (spec.empty()) {
    spec = "poly:[";
    for (std::size_t i = 0; i < f.size(); ++i) spec += (i ? "," : "") + f[i].get_str();
    spec += "]";
  }
  data->spec = spec;
  if (data->d > 1) {
    for (const auto& [p, e] : factor_integer(data->disc)) {
      if (e < 2) continue;
      data->certificate.push_back(p);
      if (!dedekind_maximal(f, to_u64(p)))
        throw UnsupportedField("unsupported field: Z[theta] is not maximal at " + p.get_str());
    }
  }
  data->real_roots = real::isolate_real_roots(data->fq);
  data->complex_count = (data->d - data->real_roots.size()) / 2;
  return NumberField(std::move(data));
}

int NumberField::degree() const { return data_->d; }
const upoly::ZPoly& NumberField::minimal_polynomial() const { return data_->f; }
const upoly::QPoly& NumberField::minimal_polynomial_q() const { return data_->fq; }
const Integer& NumberField::discriminant() const { return data_->disc; }
const std::string& NumberField::spec() const { return data_->spec; }
std::size_t NumberField::real_place_count() const { return data_->real_roots.size(); }
std::size_t NumberField::complex_place_count() const { return data_->complex_count; }
const std::vector<real::Interval>& NumberField::real_intervals() const {
  return data_->real_roots;
}
const std::vector<Integer>& NumberField::monogenic_certificate() const {
  return data_->certificate;
}

FieldElement NumberField::zero() const { return from_rational(0); }
FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  c[0] = q;
  return FieldElement(*this, std::move(c));
}

FieldElement NumberField::from_coords(std::vector<Rational> coords) const {
  if (coords.size() > static_cast<std::size_t>(degree()))
    return FieldElement(*this, detail::reduce_mod_f(std::move(coords), data_->f));
  return FieldElement(*this, pad(std::move(coords), degree()));
}

FieldElement NumberField::from_integers(const std::vector<Integer>& coords) const {
  return from_coords(std::vector<Rational>(coords.begin(), coords.end()));
}

FieldElement NumberField::generator() const { return from_coords({Rational(0), Rational(1)}); }

std::vector<PrimeIdeal> NumberField::primes_above(const Integer& p) const {
  std::vector<PrimeIdeal> out;
  for (auto& [P, e] : factor_rational_prime(*this, p)) out.push_back(P);
  return out;
}

std::vector<Place> NumberField::real_places() const {
  std::vector<Place> out;
  for (std::size_t i = 0; i < real_place_count(); ++i) out.push_back(Place::real(i));
  return out;
}

std::vector<Place> NumberField::infinite_places() const {
  auto out = real_places();
  for (std::size_t i = 0; i < complex_place_count(); ++i) out.push_back(Place::complex(i));
  return out;
}

bool NumberField::operator==(const NumberField& o) const {
  return data_ == o.data_ || data_->f == o.data_->f;
}

FieldElement::FieldElement(NumberField K, std::vector<Rational> coords)
    : field_(std::move(K)), c_(std::move(coords)) {
  c_.resize(static_cast<std::size_t>(field_.degree()));
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

std::vector<Integer> FieldElement::integer_coords() const {
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& q : c_) {
    if (q.get_den() != 1) throw std::domain_error("element is not integral: " + to_string());
    out.push_back(q.get_num());
  }
  return out;
}

bool FieldElement::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Integer FieldElement::denominator() const { return lcm_denominators(c_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  std::vector<Rational> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  std::vector<Rational> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const std::size_t d = c_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  return FieldElement(field_, detail::reduce_mod_f(std::move(prod), field_.minimal_polynomial()));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& q : c) q = -q;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const Rational& q) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= q;
  return FieldElement(field_, std::move(c));
}

bool FieldElement::operator==(const FieldElement& o) const { return c_ == o.c_; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return field_.from_rational(1 / c_[0]);
  // Extended Euclid for h and f over Q.
  upoly::QPoly r0 = field_.minimal_polynomial_q(), r1 = as_poly();
  upoly::QPoly s0{}, s1{Rational(1)};
  while (upoly::degree(r1) > 0) {
    auto [q, r] = upoly::divmod(r0, r1);
    upoly::QPoly s2 = upoly::sub(s0, upoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("inverse: minimal polynomial is not irreducible");
  return field_.from_coords(upoly::scale(s1, 1 / r1[0]));
}

FieldElement FieldElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement result = field_.one(), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Rational FieldElement::norm() const {
  if (is_rational()) {
    Rational r = 1;
    for (int i = 0; i < field_.degree(); ++i) r *= c_[0];
    return r;
  }
  return upoly::resultant(field_.minimal_polynomial_q(), as_poly());
}

Rational FieldElement::trace() const {
  Rational t = 0;
  FieldElement basis = field_.one();
  for (int j = 0; j < field_.degree(); ++j) {
    t += (*this * basis).c_[static_cast<std::size_t>(j)];
    basis *= field_.generator();
  }
  return t;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("element is not rational: " + to_string());
  return c_[0];
}

upoly::QPoly FieldElement::as_poly() const {
  upoly::QPoly p = c_;
  upoly::trim(p);
  return p;
}

std::string FieldElement::to_string() const {
  if (c_.size() == 1) return c_[0].get_str();
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].get_str();
  return s + "]";
}

FieldElement parse_element(const NumberField& K, std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("malformed element: " + s);
    std::vector<Rational> coords;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
    if (coords.size() != static_cast<std::size_t>(K.degree()))
      throw std::invalid_argument("element needs exactly " + std::to_string(K.degree()) +
                                  " coordinates: " + s);
    return K.from_coords(std::move(coords));
  }
  return K.from_rational(parse_rational(s));
}

std::vector<std::pair<PrimeIdeal, unsigned>> factor_rational_prime(const NumberField& K,
                                                                   const Integer& p_in) {
  if (!is_probable_prime(p_in)) throw std::domain_error("not a prime: " + p_in.get_str());
  const auto& data = K.data();
  {
    std::lock_guard<std::mutex> lock(data.cache_mutex);
    auto it = data.prime_cache.find(p_in);
    if (it != data.prime_cache.end()) return it->second;
  }
  std::uint64_t p = to_u64(p_in);
  fp::Poly fbar = fp::reduce(data.f, p);
  std::vector<std::pair<PrimeIdeal, unsigned>> out;
  for (const auto& [g, e] : fp::factor(fbar, p)) {
    PrimeIdeal P;
    P.p = p;
    P.generator = g;
    P.ramification = e;
    P.residue_degree = static_cast<unsigned>(fp::degree(g));
    fp::Poly h = fp::divmod(fbar, g, p).first;
    P.beta = fp::lift(h);
    P.beta.resize(static_cast<std::size_t>(data.d));
    out.emplace_back(std::move(P), e);
  }
  std::lock_guard<std::mutex> lock(data.cache_mutex);
  data.prime_cache.emplace(p_in, out);
  return out;
}

namespace {

long valuation_integral(std::vector<Integer> A, const PrimeIdeal& P, const upoly::ZPoly& f) {
  const Integer p = P.characteristic();
  long content = -1;
  for (const auto& c : A) {
    if (c == 0) continue;
    long v = static_cast<long>(valuation_p(c, p));
    if (content < 0 || v < content) content = v;
  }
  if (content < 0) throw std::domain_error("valuation of zero");
  if (content > 0) {
    Integer pc;
    mpz_pow_ui(pc.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(content));
    for (auto& c : A) c /= pc;
  }
  long v = content * static_cast<long>(P.ramification);
  for (;;) {
    auto B = integral::mul(A, P.beta, f);
    if (!integral::divisible(B, p)) break;
    for (auto& c : B) c /= p;
    A = std::move(B);
    ++v;
  }
  return v;
}

fp::Poly residue_integral(const std::vector<Integer>& A, const PrimeIdeal& P) {
  return fp::rem(fp::reduce(A, P.p), P.generator, P.p);
}

}  // namespace

long valuation(const FieldElement& x, const PrimeIdeal& P) {
  if (x.is_zero()) throw std::domain_error("valuation of zero");
  const Integer p = P.characteristic();
  if (x.is_rational())
    return valuation_p(x.rational_value(), p) * static_cast<long>(P.ramification);
  Integer den = x.denominator();
  FieldElement A = x * Rational(den);
  long v = valuation_integral(A.integer_coords(), P, x.field().minimal_polynomial());
  return v - static_cast<long>(valuation_p(den, p)) * static_cast<long>(P.ramification);
}

FieldElement anti_uniformizer(const NumberField& K, const PrimeIdeal& P) {
  return K.from_integers(P.beta) * Rational(1, P.characteristic());
}

FieldElement uniformizer(const NumberField& K, const PrimeIdeal& P) {
  FieldElement g = K.from_integers(fp::lift(P.generator));
  if (!g.is_zero() && valuation(g, P) == 1) return g;
  FieldElement alt = g + K.from_rational(Rational(P.characteristic()));
  if (valuation(alt, P) != 1) throw std::logic_error("uniformizer construction failed");
  return alt;
}

FieldElement lift_residue(const NumberField& K, const fp::Poly& r) {
  auto z = fp::lift(r);
  return K.from_coords(std::vector<Rational>(z.begin(), z.end()));
}

fp::Poly residue(const FieldElement& x, const PrimeIdeal& P) {
  if (x.is_zero()) return {};
  const NumberField& K = x.field();
  const Integer p = P.characteristic();
  Integer den = x.denominator();
  FieldElement A = x * Rational(den);
  long m = static_cast<long>(valuation_p(den, p));
  Integer den_rest = den;
  for (long i = 0; i < m; ++i) den_rest /= p;
  std::uint64_t inv_rest = invmod(to_u64(mod_floor(den_rest, p)), P.p);
  if (m == 0) return fp::scale(residue_integral(A.integer_coords(), P), inv_rest, P.p);
  FieldElement gm = anti_uniformizer(K, P).pow(static_cast<long>(P.ramification) * m);
  FieldElement num = A * gm;
  FieldElement unit = gm * Rational(den / den_rest);
  if (!num.is_integral() || !unit.is_integral())
    throw std::domain_error("residue of an element that is not P-integral");
  fp::Poly rn = residue_integral(num.integer_coords(), P);
  fp::Poly ru = residue_integral(unit.integer_coords(), P);
  fp::Poly q = fp::mulmod(rn, fp::invmod(ru, P.generator, P.p), P.generator, P.p);
  return fp::scale(q, inv_rest, P.p);
}

std::vector<Integer> support_primes(const FieldElement& x) {
  if (x.is_zero()) throw std::domain_error("support of zero");
  std::vector<Integer> primes;
  auto add = [&](const Integer& n) {
    if (n == 0) return;
    for (const auto& [p, e] : factor_integer(n)) primes.push_back(p);
  };
  if (x.is_rational()) {
    add(x.rational_value().get_num());
    add(x.rational_value().get_den());
  } else {
    Integer den = x.denominator();
    Rational N = (x * Rational(den)).norm();
    add(N.get_num());
    add(den);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

FractionalIdeal ideal_of(const FieldElement& x) {
  FractionalIdeal I;
  for (const auto& p : support_primes(x))
    for (const auto& P : x.field().primes_above(p)) {
      long v = valuation(x, P);
      if (v != 0) I[P] = v;
    }
  return I;
}

FractionalIdeal ideal_gcd(const FractionalIdeal& I, const FractionalIdeal& J) {
  FractionalIdeal out;
  for (const auto& [P, v] : I) {
    long w = ideal_exponent(J, P);
    long m = std::min(v, w);
    if (m != 0) out[P] = m;
  }
  for (const auto& [P, w] : J) {
    if (I.count(P)) continue;
    long m = std::min(0L, w);
    if (m != 0) out[P] = m;
  }
  return out;
}

FractionalIdeal ideal_product(const FractionalIdeal& I, const FractionalIdeal& J) {
  FractionalIdeal out = I;
  for (const auto& [P, w] : J) {
    long s = out[P] + w;
    if (s == 0)
      out.erase(P);
    else
      out[P] = s;
  }
  return out;
}

FractionalIdeal ideal_inverse(const FractionalIdeal& I) {
  FractionalIdeal out;
  for (const auto& [P, v] : I) out[P] = -v;
  return out;
}

long ideal_exponent(const FractionalIdeal& I, const PrimeIdeal& P) {
  auto it = I.find(P);
  return it == I.end() ? 0 : it->second;
}

namespace integral {

Vec mul(const Vec& a, const Vec& b, const upoly::ZPoly& f) {
  const std::size_t d = f.size() - 1;
  Vec prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t i = prod.size(); i-- > d;) {
    if (prod[i] == 0) continue;
    Integer t = prod[i];
    for (std::size_t j = 0; j <= d; ++j) prod[i - d + j] -= t * f[j];
  }
  prod.resize(d);
  return prod;
}

Vec reduce(const Vec& a, const Integer& m) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_floor(a[i], m);
  return out;
}

Vec mul_mod(const Vec& a, const Vec& b, const upoly::ZPoly& f, const Integer& m) {
  return reduce(mul(a, b, f), m);
}

Vec pow_mod(const Vec& a, const Integer& e, const upoly::ZPoly& f, const Integer& m) {
  Vec result(f.size() - 1);
  result[0] = 1;
  result = reduce(result, m);
  Vec base = reduce(a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul_mod(result, result, f, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul_mod(result, base, f, m);
  }
  return result;
}

bool divisible(const Vec& a, const Integer& m) {
  return std::all_of(a.begin(), a.end(),
                     [&](const Integer& c) { return mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()); });
}

}  // namespace integral

}  // namespace darmonlab
