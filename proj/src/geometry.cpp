#include "germ/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "germ/error.hpp"
#include "germ/ideal_ops.hpp"
#include "germ/standard_basis.hpp"

namespace germ {

namespace {

const MonomialOrder kLocal = MonomialOrder::local();

int local_dim(const Ideal& ideal) { return leading_ideal_krull_dim(ideal.with_order(kLocal)); }

bool is_unit_ideal(const Ideal& ideal) {
  if (ideal.has_unit_generator()) return true;
  const auto lms = leading_monomials(ideal.with_order(kLocal));
  return std::any_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_one(); });
}

Polynomial determinant(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                       std::vector<std::size_t> cols, std::size_t nvars) {
  if (rows.empty()) return Polynomial::constant(nvars, Rational(1), kLocal);
  const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  Polynomial det(nvars, kLocal);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial& entry = m[rows.front()][cols[c]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> minor_cols = cols;
    minor_cols.erase(minor_cols.begin() + static_cast<std::ptrdiff_t>(c));
    const Polynomial term = entry * determinant(m, rest, minor_cols, nvars);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// Calls fn on every increasing k-subset of {0, ..., n-1}.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Polynomial> gradient(const Polynomial& p, std::size_t nvars) {
  std::vector<Polynomial> row;
  row.reserve(nvars);
  for (std::size_t v = 0; v < nvars; ++v) row.push_back(p.with_order(kLocal).derivative(v));
  return row;
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& coeffs) {
  BigInt denominator_lcm = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigInt> v;
  BigInt g = 0;
  for (const auto& c : coeffs) {
    const Rational scaled = c * Rational(denominator_lcm);
    v.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
  }
  if (g == 0) throw PreconditionError("linear form is zero");
  for (auto& x : v) x /= g;
  return v;
}

std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range);
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

// Bertini: a generic hyperplane meets X_reg transversally, so the section is
// singular only along Sing(X) ∩ H.
void check_transversal(const GermVariety& x, const GermVariety& section) {
  const int sing = local_dim(singular_locus_ideal(x));
  const int allowed = sing < 0 ? -1 : std::max(sing - 1, 0);
  const int sing_cut = local_dim(singular_locus_ideal(section));
  if (sing_cut > allowed) {
    throw GenericityError("section is singular along a set of dimension " +
                          std::to_string(sing_cut) + " (at most " + std::to_string(allowed) +
                          " for a generic hyperplane)");
  }
}

}  // namespace

GermVariety::GermVariety(std::size_t ambient, Ideal defining, int dim)
    : ambient_(ambient), defining_(defining.with_order(kLocal)), dim_(dim) {
  if (defining_.nvars() != ambient) {
    throw PreconditionError("defining ideal lives in " + std::to_string(defining_.nvars()) +
                            " variables, ambient space has " + std::to_string(ambient));
  }
  if (dim < 0 || static_cast<std::size_t>(dim) > ambient) {
    throw PreconditionError("declared dimension " + std::to_string(dim) +
                            " is outside 0.." + std::to_string(ambient));
  }
  for (const auto& g : defining_.generators()) {
    if (g.constant_term() != 0) {
      throw PreconditionError("defining equation " + g.to_string() + " does not vanish at 0");
    }
  }
  const int computed = local_dim(defining_);
  if (computed != dim) {
    throw PreconditionError("declared dimension " + std::to_string(dim) +
                            " but the germ has dimension " + std::to_string(computed));
  }
}

GermVariety GermVariety::affine_space(std::size_t ambient) {
  return GermVariety(ambient, Ideal::zero(ambient), static_cast<int>(ambient));
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  LinearForm form{std::vector<Rational>(p.nvars(), Rational(0))};
  if (p.is_zero()) throw PreconditionError("linear form is zero");
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() != 1) {
      throw PreconditionError("not a homogeneous linear form: " + p.to_string());
    }
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (t.monomial[v] == 1) form.coefficients[v] = t.coeff;
    }
  }
  return form;
}

Polynomial LinearForm::to_polynomial(MonomialOrder order) const {
  Polynomial p(coefficients.size(), order);
  for (std::size_t v = 0; v < coefficients.size(); ++v) {
    if (coefficients[v] != 0) {
      p += Polynomial::variable(coefficients.size(), v, order).scale(coefficients[v]);
    }
  }
  return p;
}

PolyMatrix jacobian_stack(const GermVariety& x, std::span<const Polynomial> fns) {
  PolyMatrix m;
  const std::size_t n = x.ambient();
  for (const auto& g : x.defining().generators()) m.push_back(gradient(g, n));
  for (const auto& f : fns) {
    if (f.nvars() != n) throw UsageError("function lives in a different ring");
    m.push_back(gradient(f, n));
  }
  return m;
}

Ideal minors_ideal(const PolyMatrix& m, std::size_t k, std::size_t nvars) {
  if (k == 0) return Ideal::unit(nvars);
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  if (k > rows || k > cols) return Ideal::zero(nvars);
  std::vector<Polynomial> gens;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& r) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& c) {
      Polynomial det = determinant(m, r, c, nvars);
      if (!det.is_zero()) gens.push_back(std::move(det));
    });
  });
  return Ideal(nvars, std::move(gens));
}

Ideal singular_locus_ideal(const GermVariety& x) {
  const PolyMatrix jac = jacobian_stack(x, {});
  return x.defining().plus(minors_ideal(jac, x.codim(), x.ambient()));
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  const std::size_t n = ideal.nvars();
  if (by.nvars() != n) throw UsageError("saturation by an ideal of a different ring");
  const Ideal local = ideal.with_order(kLocal);
  if (is_unit_ideal(by) || is_unit_ideal(local)) return local;
  if (by.empty()) return Ideal::unit(n);
  const int dim_i = local_dim(local);
  if (dim_i == 0) return Ideal::unit(n);
  // A complete intersection has no embedded components, so only a
  // component of top dimension could lie inside V(J).
  if (local.size() == n - static_cast<std::size_t>(dim_i) &&
      local_dim(local.plus(by.with_order(kLocal))) < dim_i) {
    return local;
  }
  // Saturation only depends on the radical of J.
  const Ideal j = local_dim(by) == 0 ? Ideal::maximal(n) : by.with_order(kLocal);
  std::optional<Ideal> result;
  for (const auto& h : j.generators()) {
    Ideal part = saturate_by_element(local, h);
    result = result ? intersection(*result, part) : part;
  }
  return standard_basis(*result);
}

Ideal critical_ideal(const GermVariety& x, const Polynomial& f) {
  const std::vector<Polynomial> fns{f};
  const Ideal raw = x.defining().plus(
      minors_ideal(jacobian_stack(x, fns), x.codim() + 1, x.ambient()));
  if (local_dim(raw) <= 0) return raw;
  return saturate(raw, singular_locus_ideal(x));
}

bool has_isolated_critical_point(const GermVariety& x, const Polynomial& f) {
  return local_dim(critical_ideal(x, f)) <= 0;
}

Ideal polar_ideal(const GermVariety& x, const Polynomial& f, const Polynomial& g) {
  const std::vector<Polynomial> fns{f, g};
  const Ideal raw = x.defining().plus(
      minors_ideal(jacobian_stack(x, fns), x.codim() + 2, x.ambient()));
  return saturate(raw, singular_locus_ideal(x));
}

FormStream::FormStream(const GenericityConfig& cfg, std::uint64_t round, std::uint64_t sample,
                       std::string_view stream)
    : bound_(cfg.coefficient_bound) {
  if (bound_ == 0) throw UsageError("coefficient bound must be positive");
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(cfg.seed),
                                   static_cast<std::uint32_t>(cfg.seed >> 32),
                                   static_cast<std::uint32_t>(round),
                                   static_cast<std::uint32_t>(sample)};
  for (unsigned char c : stream) words.push_back(c);
  std::seed_seq seq(words.begin(), words.end());
  rng_.seed(seq);
}

LinearForm FormStream::next(std::size_t nvars) {
  if (nvars == 0) throw UsageError("linear form in zero variables");
  const std::uint64_t range = 2 * bound_ + 1;
  LinearForm form;
  while (true) {
    form.coefficients.assign(nvars, Rational(0));
    bool nonzero = false;
    for (auto& c : form.coefficients) {
      const std::int64_t v = static_cast<std::int64_t>(draw_uniform(rng_, range)) -
                             static_cast<std::int64_t>(bound_);
      c = Rational(static_cast<long>(v));
      nonzero = nonzero || v != 0;
    }
    if (nonzero) return form;
  }
}

std::vector<LinearForm> generic_linear(const GenericityConfig& cfg, std::size_t nvars,
                                       std::size_t count, std::uint64_t round,
                                       std::uint64_t sample) {
  if (count == 0) throw UsageError("at least one linear form must be requested");
  FormStream stream(cfg, round, sample);
  std::vector<LinearForm> forms;
  for (std::size_t i = 0; i < count; ++i) forms.push_back(stream.next(nvars));
  return forms;
}

Polynomial Section::pull_back(const Polynomial& p) const {
  return p.with_order(kLocal).substitute(images).with_order(kLocal);
}

std::vector<std::vector<BigInt>> unimodular_completion(const std::vector<BigInt>& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<BigInt>> c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;
  std::vector<BigInt> w = v;
  // Column operations that run Euclid's algorithm on the entries of w.
  while (true) {
    std::optional<std::size_t> pivot;
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      ++nonzero;
      if (!pivot || abs(w[j]) < abs(w[*pivot])) pivot = j;
    }
    if (!pivot) throw PreconditionError("linear form is zero");
    if (nonzero == 1) break;
    const std::size_t p = *pivot;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == p || w[k] == 0) continue;
      BigInt q;
      mpz_tdiv_q(q.get_mpz_t(), w[k].get_mpz_t(), w[p].get_mpz_t());
      w[k] -= q * w[p];
      for (std::size_t i = 0; i < n; ++i) c[i][k] -= q * c[i][p];
    }
  }
  std::size_t p = 0;
  while (w[p] == 0) ++p;
  if (abs(w[p]) != 1) throw UsageError("unimodular completion needs a primitive vector");
  if (w[p] < 0) {
    for (std::size_t i = 0; i < n; ++i) c[i][p] = -c[i][p];
  }
  for (auto& row : c) std::rotate(row.begin() + static_cast<std::ptrdiff_t>(p),
                                  row.begin() + static_cast<std::ptrdiff_t>(p) + 1, row.end());
  return c;
}

Section section_with_map(const GermVariety& x, const LinearForm& h) {
  const std::size_t n = x.ambient();
  if (h.size() != n) throw UsageError("linear form lives in a different ring");
  if (n == 0 || x.dim() == 0) throw UsageError("cannot cut a point with a hyperplane");
  const auto c = unimodular_completion(primitive_integer_vector(h.coefficients));
  // x = C y with h(x) = y_N; restricting to y_N = 0 drops the last column.
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(n - 1, kLocal);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (c[i][j] != 0) img += Polynomial::variable(n - 1, j, kLocal).scale(Rational(c[i][j]));
    }
    images.push_back(std::move(img));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : x.defining().generators()) gens.push_back(g.substitute(images).with_order(kLocal));
  const Ideal cut(n - 1, std::move(gens));
  const int d = x.dim() - 1;
  const int got = local_dim(cut);
  if (got != d) {
    throw GenericityError("hyperplane section has dimension " + std::to_string(got) +
                          ", expected " + std::to_string(d));
  }
  Section section{GermVariety(n - 1, cut, d), std::move(images)};
  check_transversal(x, section.variety);
  return section;
}

GermVariety cut_by(const GermVariety& x, const Polynomial& g) {
  if (g.nvars() != x.ambient()) throw UsageError("cutting function lives in a different ring");
  if (x.dim() == 0) throw UsageError("cannot cut a point with a hypersurface");
  if (g.constant_term() != 0) throw PreconditionError("cutting function does not vanish at 0");
  const Ideal cut = x.defining().plus(g.with_order(kLocal));
  const int d = x.dim() - 1;
  const int got = local_dim(cut);
  if (got != d) {
    throw GenericityError("section by " + g.to_string() + " has dimension " +
                          std::to_string(got) + ", expected " + std::to_string(d));
  }
  GermVariety result(x.ambient(), cut, d);
  check_transversal(x, result);
  return result;
}

GermVariety hyperplane_section(const GermVariety& x, const LinearForm& h) {
  return section_with_map(x, h).variety;
}

}  // namespace germ
