#include "darmonlab/ideal_lattice.hpp"

#include <stdexcept>

namespace darmonlab {

namespace {

using Row = std::vector<Integer>;

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rational> to_q(const Row& r) { return {r.begin(), r.end()}; }

Integer round_nearest(const Rational& q) {
  Integer twice = 2 * q.get_num() + q.get_den();
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), Integer(2 * q.get_den()).get_mpz_t());
  return out;
}

struct GramSchmidt {
  std::vector<std::vector<Rational>> star;
  std::vector<Rational> norms;
  std::vector<std::vector<Rational>> mu;
};

GramSchmidt gram_schmidt(const LatticeBasis& b) {
  const std::size_t n = b.size();
  GramSchmidt g{{}, std::vector<Rational>(n), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v = to_q(b[i]);
    for (std::size_t j = 0; j < i; ++j) {
      g.mu[i][j] = dot(to_q(b[i]), g.star[j]) / g.norms[j];
      for (std::size_t t = 0; t < v.size(); ++t) v[t] -= g.mu[i][j] * g.star[j][t];
    }
    g.norms[i] = dot(v, v);
    g.star.push_back(std::move(v));
  }
  return g;
}

}  // namespace

LatticeBasis hermite_normal_form(std::vector<Row> rows, std::size_t d) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < rows.size(); ++col) {
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col])))
          piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        for (std::size_t t = 0; t < d; ++t) rows[i][t] -= q * rows[r][t];
        done = done && rows[i][col] == 0;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) throw std::invalid_argument("hermite_normal_form: lattice not of full rank");
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      for (std::size_t t = 0; t < d; ++t) rows[i][t] -= q * rows[r][t];
    }
    ++r;
  }
  if (r != d) throw std::invalid_argument("hermite_normal_form: lattice not of full rank");
  rows.resize(d);
  return rows;
}

LatticeBasis ideal_product(const NumberField& K, const LatticeBasis& A, const LatticeBasis& B) {
  std::vector<Row> gens;
  for (const auto& a : A)
    for (const auto& b : B) gens.push_back((K.from_integers(a) * K.from_integers(b)).integer_coords());
  return hermite_normal_form(std::move(gens), K.degree());
}

LatticeBasis prime_power_lattice(const NumberField& K, const PrimeIdeal& P, long k) {
  const std::size_t d = K.degree();
  // P = (p, g(theta)) for the lifted generator g; when g = f mod p this is just (p).
  FieldElement gen = K.zero(), power = K.one();
  for (std::uint64_t c : P.generator) {
    gen += power * Rational(Integer(std::to_string(c)));
    power *= K.generator();
  }
  std::vector<Row> gens;
  FieldElement theta_j = K.one();
  for (std::size_t j = 0; j < d; ++j) {
    gens.push_back((theta_j * Rational(P.characteristic())).integer_coords());
    gens.push_back((gen * theta_j).integer_coords());
    theta_j *= K.generator();
  }
  LatticeBasis base = hermite_normal_form(std::move(gens), d);
  LatticeBasis out = base;
  for (long i = 1; i < k; ++i) out = ideal_product(K, out, base);
  if (k <= 0) {
    out.assign(d, Row(d, 0));
    for (std::size_t i = 0; i < d; ++i) out[i][i] = 1;
  }
  return out;
}

LatticeBasis congruence_lattice(const NumberField& K, const std::vector<Congruence>& cong) {
  const std::size_t d = K.degree();
  LatticeBasis I(d, Row(d, 0));
  for (std::size_t i = 0; i < d; ++i) I[i][i] = 1;
  for (const auto& c : cong) I = ideal_product(K, I, prime_power_lattice(K, c.prime, c.exponent));
  return lll_reduce(std::move(I));
}

LatticeBasis lll_reduce(LatticeBasis b) {
  const std::size_t n = b.size();
  const Rational delta(3, 4);
  std::size_t k = 1;
  GramSchmidt g = gram_schmidt(b);
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Integer q = round_nearest(g.mu[k][j]);
      if (q == 0) continue;
      for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
      g = gram_schmidt(b);
    }
    if (g.norms[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      g = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

FieldElement reduce_modulo(const FieldElement& x, const LatticeBasis& reduced) {
  const NumberField& K = x.field();
  Row v = x.integer_coords();
  GramSchmidt g = gram_schmidt(reduced);
  for (std::size_t i = reduced.size(); i-- > 0;) {
    Integer c = round_nearest(dot(to_q(v), g.star[i]) / g.norms[i]);
    for (std::size_t t = 0; t < v.size(); ++t) v[t] -= c * reduced[i][t];
  }
  return K.from_integers(v);
}

Integer lattice_determinant(const LatticeBasis& b) {
  LatticeBasis h = hermite_normal_form(b, b.size());
  Integer det = 1;
  for (std::size_t i = 0; i < h.size(); ++i) det *= h[i][i];
  return det;
}

}  // namespace darmonlab
