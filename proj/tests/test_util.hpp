#pragma once

#include <random>
#include <string>
#include <vector>

#include "germ/ideal.hpp"
#include "germ/parser.hpp"
#include "germ/polynomial.hpp"

namespace germ::test {

inline const std::vector<std::string>& xy() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}
inline const std::vector<std::string>& xyz() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

inline Polynomial P(const std::string& text, const std::vector<std::string>& vars,
                    MonomialOrder order = MonomialOrder::global()) {
  return parse_polynomial(text, vars, order);
}

inline Ideal I(std::initializer_list<std::string> gens, const std::vector<std::string>& vars) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(P(g, vars, MonomialOrder::local()));
  return Ideal(vars.size(), std::move(polys), MonomialOrder::local());
}

/// Random polynomial with `terms` terms of degree in [min_deg, max_deg] and
/// integer coefficients in [-bound, bound].
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned min_deg,
                                    unsigned max_deg, std::size_t terms, int bound = 5) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::uniform_int_distribution<unsigned> deg(min_deg, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::vector<Term> out;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(nvars);
    const unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i) {
      const std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    out.push_back({m, Rational(coeff(rng))});
  }
  return Polynomial::from_terms(nvars, std::move(out));
}

/// Images of the coordinates under a random unimodular integer matrix built
/// from elementary column operations.
inline std::vector<Polynomial> unimodular_change(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const int k = c(rng);
    for (std::size_t r = 0; r < n; ++r) m[r][i] += k * m[r][j];
  }
  std::vector<Polynomial> images;
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial img(n, MonomialOrder::local());
    for (std::size_t j = 0; j < n; ++j) {
      if (m[r][j] != 0) {
        img += Polynomial::variable(n, j, MonomialOrder::local()).scale(Rational(m[r][j]));
      }
    }
    images.push_back(img);
  }
  return images;
}

}  // namespace germ::test
