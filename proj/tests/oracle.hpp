#pragma once

// Test-only oracle: dim_C K[x]/(I + m^k) by exact linear algebra over Q,
// independent of the standard-basis engine.

#include <map>
#include <optional>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ::test {

inline std::vector<Monomial> monomials_below(std::size_t nvars, unsigned k) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == nvars) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(var, e);
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (k > 0) rec(rec, 0, k - 1);
  return out;
}

/// dim K[x]/(I + m^k).
inline std::size_t truncated_colength(const std::vector<Polynomial>& gens, std::size_t nvars,
                                      unsigned k) {
  const auto monos = monomials_below(nvars, k);
  std::map<std::vector<unsigned>, std::size_t> column;
  auto key = [&](const Monomial& m) {
    std::vector<unsigned> v(nvars);
    for (std::size_t i = 0; i < nvars; ++i) v[i] = m[i];
    return v;
  };
  for (std::size_t i = 0; i < monos.size(); ++i) column[key(monos[i])] = i;
  // Echelon rows keyed by pivot column.
  std::map<std::size_t, std::vector<Rational>> echelon;
  for (const auto& g : gens) {
    for (const auto& shift : monos) {
      std::vector<Rational> row(monos.size());
      bool any = false;
      for (const auto& t : g.terms()) {
        const Monomial m = t.monomial * shift;
        if (m.degree() >= k) continue;
        row[column.at(key(m))] += t.coeff;
        any = true;
      }
      if (!any) continue;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == 0) continue;
        auto it = echelon.find(c);
        if (it == echelon.end()) {
          const Rational inv = 1 / row[c];
          for (auto& x : row) x *= inv;
          echelon.emplace(c, std::move(row));
          break;
        }
        const Rational f = row[c];
        for (std::size_t d = c; d < row.size(); ++d) row[d] -= f * it->second[d];
      }
    }
  }
  return monos.size() - echelon.size();
}

/// Local colength via stabilisation of dim K[x]/(I + m^k); nullopt when no
/// stabilisation happens up to `max_k` (treated as infinite).
inline std::optional<std::size_t> oracle_local_colength(const std::vector<Polynomial>& gens,
                                                        std::size_t nvars, unsigned max_k) {
  std::size_t prev = truncated_colength(gens, nvars, 1);
  for (unsigned k = 2; k <= max_k; ++k) {
    const std::size_t cur = truncated_colength(gens, nvars, k);
    if (cur == prev) return cur;
    prev = cur;
  }
  return std::nullopt;
}

}  // namespace germ::test
