#include "germ/standard_basis.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <limits>
#include <optional>

#include "germ/error.hpp"

namespace germ {

namespace {

struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  unsigned ecart;
};

// Index of the reducer with minimal ecart whose leading monomial divides m.
std::optional<std::size_t> pick_reducer(const std::vector<Reducer>& set, const Monomial& m) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!set[i].lm.divides(m)) continue;
    if (!best || set[i].ecart < set[*best].ecart) {
      best = i;
      if (set[i].ecart == 0) break;
    }
  }
  return best;
}

Polynomial maybe_truncate(Polynomial p, std::optional<unsigned> bound) {
  if (bound && !p.is_zero() && p.degree() > *bound) return p.truncate(*bound);
  return p;
}

// Core of the weak normal form. `owned` keeps intermediate remainders that
// joined the reducer set alive.
Polynomial nf_mora(Polynomial h, std::vector<Reducer> set, std::optional<unsigned> bound) {
  std::vector<std::unique_ptr<Polynomial>> owned;
  h = maybe_truncate(std::move(h), bound);
  while (!h.is_zero()) {
    const Monomial lm = h.leading_monomial();
    auto pick = pick_reducer(set, lm);
    if (!pick) break;
    const Reducer r = set[*pick];
    const unsigned eh = h.ecart();
    if (r.ecart > eh) {
      owned.push_back(std::make_unique<Polynomial>(h));
      set.push_back({owned.back().get(), lm, eh});
    }
    const Rational c = h.leading_coeff() / r.poly->leading_coeff();
    h = maybe_truncate(std::move(h).sub_scaled(c, r.lm.quotient_of(lm), *r.poly), bound);
  }
  return h;
}

// Reduces the non-leading terms of h by `set` (no ecart bookkeeping). Only
// called where it terminates: global orders, or local orders with a bound.
Polynomial tail_reduce(Polynomial h, const std::vector<Reducer>& set,
                       std::optional<unsigned> bound) {
  if (h.is_zero()) return h;
  std::size_t pos = 1;
  while (pos < h.size()) {
    const Monomial m = h.terms()[pos].monomial;
    auto pick = pick_reducer(set, m);
    if (!pick) {
      ++pos;
      continue;
    }
    const Reducer& r = set[*pick];
    const Rational c = h.terms()[pos].coeff / r.poly->leading_coeff();
    h = maybe_truncate(std::move(h).sub_scaled(c, r.lm.quotient_of(m), *r.poly), bound);
  }
  return h;
}

std::vector<Reducer> make_reducers(std::span<const Polynomial> polys) {
  std::vector<Reducer> set;
  for (const auto& g : polys) {
    if (g.is_zero()) continue;
    set.push_back({&g, g.leading_monomial(), g.ecart()});
  }
  return set;
}

void check_ring(const Polynomial& p, std::span<const Polynomial> reducers) {
  for (const auto& g : reducers) {
    if (g.nvars() != p.nvars()) throw UsageError("normal form operands from different rings");
  }
}

// Degree of m, not counting variable 0 when it is the homogenizing variable.
unsigned x_degree(const Monomial& m, bool skip_first) {
  return m.degree() - (skip_first ? m[0] : 0u);
}

Polynomial truncate_x(const Polynomial& p, unsigned bound, bool skip_first) {
  if (!skip_first) return p.truncate(bound);
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    if (x_degree(t.monomial, true) <= bound) kept.push_back(t);
  }
  return Polynomial::from_terms(p.nvars(), std::move(kept), p.order());
}

// Highest degree of a monomial outside the monomial ideal; every variable
// must have a pure power among `lms`.
unsigned max_standard_degree(const std::vector<Monomial>& lms, std::size_t nvars) {
  unsigned best = 0;
  Monomial m(nvars);
  auto in_ideal = [&](const Monomial& x) {
    return std::any_of(lms.begin(), lms.end(), [&](const Monomial& g) { return g.divides(x); });
  };
  auto dfs = [&](auto&& self, std::size_t var) -> void {
    if (var == nvars) {
      best = std::max(best, m.degree());
      return;
    }
    for (unsigned e = 0;; ++e) {
      m.set(var, e);
      if (in_ideal(m)) break;
      self(self, var + 1);
    }
    m.set(var, 0);
  };
  if (!in_ideal(m)) dfs(dfs, 0);
  return best;
}

bool has_all_pure_powers(const std::vector<Monomial>& lms, std::size_t nvars) {
  std::vector<bool> has_power(nvars, false);
  for (const auto& m : lms) {
    if (m.is_one()) return true;
    if (m.support_size() == 1) {
      for (std::size_t v = 0; v < nvars; ++v) {
        if (m[v] != 0) has_power[v] = true;
      }
    }
  }
  return std::find(has_power.begin(), has_power.end(), false) == has_power.end();
}

// Top-reduction for a well-order, with optional truncation. The result is
// only determined up to a nonzero scalar: h is kept primitive, which avoids
// the growth of rational coefficients.
Polynomial nf_division(Polynomial h, const std::vector<Reducer>& set, std::optional<unsigned> bound,
                       bool skip_first) {
  if (bound) h = truncate_x(h, *bound, skip_first);
  h.make_primitive();
  while (!h.is_zero()) {
    const Monomial lm = h.leading_monomial();
    auto pick = pick_reducer(set, lm);
    if (!pick) break;
    const Reducer& r = set[*pick];
    const Rational c = h.leading_coeff() / r.poly->leading_coeff();
    if (c.get_den() != 1) h = std::move(h).scale(Rational(c.get_den()));
    h = std::move(h).sub_scaled(Rational(c.get_num()), r.lm.quotient_of(lm), *r.poly);
    if (bound) h = truncate_x(h, *bound, skip_first);
    h.make_primitive();
  }
  return h;
}

// Buchberger's algorithm for a well-order with Gebauer-Moeller pair
// management. In corner mode variable 0 homogenizes a local order (Lazard's
// method); once the x-parts of the leading monomials contain a pure power of
// every x-variable, terms of x-degree above the highest corner lie in the
// local ideal and are dropped.
class BuchbergerEngine {
 public:
  BuchbergerEngine(std::vector<Polynomial> inputs, std::size_t nvars, MonomialOrder order,
                   bool corner, bool chain)
      : nvars_(nvars), order_(order), corner_(corner), chain_(chain), inputs_(std::move(inputs)) {
    for (std::size_t j = 0; j < inputs_.size(); ++j) {
      pairs_.push_back({-1, static_cast<int>(j), inputs_[j].leading_monomial(), seq_++});
    }
  }

  /// Surviving basis elements; a single element with constant x-part when
  /// the ideal is the unit ideal.
  std::vector<Polynomial> run() {
    while (!pairs_.empty()) {
      const Pair pair = pop_pair();
      Polynomial s = (pair.i < 0) ? inputs_[pair.j] : spoly(pair.i, pair.j);
      Polynomial h = nf_division(std::move(s), active_reducers(), bound_, corner_);
      if (h.is_zero()) continue;
      add_element(std::move(h));
      if (x_degree(basis_.back().lm, corner_) == 0) return {basis_.back().poly};
    }
    std::vector<Polynomial> out;
    for (const auto& e : basis_) {
      if (e.alive) out.push_back(e.poly);
    }
    return out;
  }

 private:
  struct Element {
    Polynomial poly;
    Monomial lm;
    bool alive = true;
  };
  struct Pair {
    int i;  // -1 marks an input generator with index j
    int j;
    Monomial lcm;
    std::uint64_t seq;
  };

  Pair pop_pair() {
    auto best = pairs_.begin();
    for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
      const unsigned d = it->lcm.degree(), bd = best->lcm.degree();
      if (d < bd || (d == bd && it->seq < best->seq)) best = it;
    }
    Pair p = *best;
    pairs_.erase(best);
    return p;
  }

  Polynomial spoly(int i, int j) const {
    const Element& a = basis_[i];
    const Element& b = basis_[j];
    const Monomial lcm = a.lm.lcm(b.lm);
    const Rational c = a.poly.leading_coeff() / b.poly.leading_coeff();
    Polynomial s = a.poly.times_monomial(a.lm.quotient_of(lcm), Rational(c.get_den()));
    return std::move(s).sub_scaled(Rational(c.get_num()), b.lm.quotient_of(lcm), b.poly);
  }

  std::vector<Reducer> active_reducers() const {
    std::vector<Reducer> set;
    set.reserve(basis_.size());
    for (const auto& e : basis_) {
      if (e.alive) set.push_back({&e.poly, e.lm, 0});
    }
    return set;
  }

  void add_element(Polynomial h) {
    Element e{std::move(h), Monomial(), true};
    e.lm = e.poly.leading_monomial();
    const int k = static_cast<int>(basis_.size());
    update_pairs(e, k);
    basis_.push_back(std::move(e));
    if (corner_) update_bound();
  }

  // Gebauer-Moeller update for a new element with index k.
  void update_pairs(const Element& e, int k) {
    if (chain_) {
      std::erase_if(pairs_, [&](const Pair& p) {
        if (p.i < 0) return false;
        if (!e.lm.divides(p.lcm)) return false;
        return !(basis_[p.i].lm.lcm(e.lm) == p.lcm) && !(basis_[p.j].lm.lcm(e.lm) == p.lcm);
      });
    }
    struct Candidate {
      int i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> fresh;
    for (int i = 0; i < k; ++i) {
      if (!basis_[i].alive) continue;
      fresh.push_back({i, basis_[i].lm.lcm(e.lm), basis_[i].lm.coprime(e.lm)});
    }
    if (chain_) {
      for (auto& c : fresh) {
        for (const auto& d : fresh) {
          if (&c == &d) continue;
          if (d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) {
            c.keep = false;
            break;
          }
        }
      }
      // Among equal lcms keep one; drop the whole class if any member
      // satisfies the product criterion.
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!fresh[a].keep) continue;
        bool any_coprime = fresh[a].coprime;
        for (std::size_t b = a + 1; b < fresh.size(); ++b) {
          if (fresh[b].keep && fresh[b].lcm == fresh[a].lcm) {
            any_coprime = any_coprime || fresh[b].coprime;
            fresh[b].keep = false;
          }
        }
        if (any_coprime) fresh[a].keep = false;
      }
    } else {
      for (auto& c : fresh) c.keep = !c.coprime;
    }
    for (const auto& c : fresh) {
      if (c.keep) pairs_.push_back({c.i, k, c.lcm, seq_++});
    }
  }

  void update_bound() {
    std::vector<Monomial> lms;
    for (const auto& e : basis_) {
      if (e.alive) lms.push_back(e.lm.erase(1u));
    }
    const std::size_t n = nvars_ - 1;
    if (!has_all_pure_powers(lms, n)) return;
    const unsigned bound = max_standard_degree(lms, n) + 1;
    if (bound_ && *bound_ <= bound) return;
    bound_ = bound;
    for (auto& e : basis_) {
      if (!e.alive) continue;
      // Every term has x-degree at least that of the leading monomial.
      if (x_degree(e.lm, true) > bound) {
        e.alive = false;
        continue;
      }
      e.poly = truncate_x(e.poly, bound, true);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (x_degree(p.lcm, true) > bound) return true;
      return p.i >= 0 && (!basis_[p.i].alive || !basis_[p.j].alive);
    });
  }

  std::size_t nvars_;
  MonomialOrder order_;
  bool corner_;
  bool chain_;
  std::vector<Polynomial> inputs_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::optional<unsigned> bound_;
  std::uint64_t seq_ = 0;
};

Polynomial homogenize(const Polynomial& f, MonomialOrder order) {
  const unsigned d = f.degree();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial.insert_zero(0);
    m.set(0, d - t.monomial.degree());
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(f.nvars() + 1, std::move(terms), order);
}

Polynomial dehomogenize(const Polynomial& f, MonomialOrder order) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial.erase(1u), t.coeff});
  return Polynomial::from_terms(f.nvars() - 1, std::move(terms), order);
}

// Minimal, monic, optionally tail-reduced, sorted basis from the raw output.
Ideal finish_basis(std::vector<Polynomial> raw, std::size_t nvars, MonomialOrder order,
                   const StandardBasisOptions& options) {
  for (const auto& g : raw) {
    if (g.leading_monomial().is_one()) return Ideal::unit(nvars, order);
  }
  std::vector<Polynomial> result;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    const Monomial lm = raw[a].leading_monomial();
    bool redundant = false;
    for (std::size_t b = 0; b < raw.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial other = raw[b].leading_monomial();
      // Equal leading monomials: keep the earlier element.
      if (other.divides(lm)) redundant = !(other == lm) || b < a;
    }
    if (!redundant) result.push_back(raw[a].monic());
  }
  std::optional<unsigned> bound;
  if (order.is_local()) {
    std::vector<Monomial> lms;
    for (const auto& g : result) lms.push_back(g.leading_monomial());
    if (has_all_pure_powers(lms, nvars)) bound = max_standard_degree(lms, nvars) + 1;
  }
  if (options.tail_reduce && (order.is_global() || bound)) {
    if (bound) {
      for (auto& g : result) g = g.truncate(*bound);
    }
    for (std::size_t a = 0; a < result.size(); ++a) {
      std::vector<Reducer> others;
      for (std::size_t b = 0; b < result.size(); ++b) {
        // Under a local bound an element may also reduce its own tail: that
        // multiplies it by a unit, and truncation ends the process.
        if (b != a || bound) others.push_back({&result[b], result[b].leading_monomial(), 0});
      }
      result[a] = tail_reduce(result[a], others, bound).monic();
    }
  }
  std::sort(result.begin(), result.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.greater(x.leading_monomial(), y.leading_monomial());
  });
  return Ideal(nvars, std::move(result), order, true);
}

}  // namespace

Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> reducers,
                            MonomialOrder order) {
  check_ring(p, reducers);
  std::vector<Polynomial> sorted;
  sorted.reserve(reducers.size());
  for (const auto& g : reducers) sorted.push_back(g.with_order(order));
  return nf_mora(p.with_order(order), make_reducers(sorted), std::nullopt);
}

StandardRepresentation mora_representation(const Polynomial& p,
                                           std::span<const Polynomial> reducers,
                                           MonomialOrder order) {
  check_ring(p, reducers);
  const std::size_t n = p.nvars();
  const std::size_t k = reducers.size();
  // Every element e of the working set is tracked as e = alpha*p + sum beta_i g_i.
  struct Tracked {
    Polynomial poly;
    Polynomial alpha;
    std::vector<Polynomial> beta;
  };
  std::vector<Tracked> set;
  for (std::size_t i = 0; i < k; ++i) {
    Tracked t{reducers[i].with_order(order), Polynomial(n, order),
              std::vector<Polynomial>(k, Polynomial(n, order))};
    t.beta[i] = Polynomial::constant(n, Rational(1), order);
    if (!t.poly.is_zero()) set.push_back(std::move(t));
  }
  Tracked h{p.with_order(order), Polynomial::constant(n, Rational(1), order),
            std::vector<Polynomial>(k, Polynomial(n, order))};
  while (!h.poly.is_zero()) {
    const Monomial lm = h.poly.leading_monomial();
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (!set[i].poly.leading_monomial().divides(lm)) continue;
      if (!best || set[i].poly.ecart() < set[*best].poly.ecart()) best = i;
    }
    if (!best) break;
    if (set[*best].poly.ecart() > h.poly.ecart()) {
      set.push_back(h);
    }
    const Tracked& r = set[*best];
    const Rational c = h.poly.leading_coeff() / r.poly.leading_coeff();
    const Monomial m = r.poly.leading_monomial().quotient_of(lm);
    h.poly = h.poly.sub_scaled(c, m, r.poly);
    h.alpha = h.alpha.sub_scaled(c, m, r.alpha);
    for (std::size_t i = 0; i < k; ++i) h.beta[i] = h.beta[i].sub_scaled(c, m, r.beta[i]);
  }
  StandardRepresentation rep{h.alpha, {}, h.poly};
  for (auto& b : h.beta) rep.cofactors.push_back(-b);
  return rep;
}

Ideal standard_basis(const Ideal& ideal, const StandardBasisOptions& options) {
  if (ideal.is_standard_basis()) return ideal;
  const std::size_t n = ideal.nvars();
  const MonomialOrder order = ideal.order();
  if (ideal.generators().empty()) return Ideal::zero(n, order);
  if (order.is_well_order()) {
    BuchbergerEngine engine(ideal.generators(), n, order, false, options.chain_criterion);
    return finish_basis(engine.run(), n, order, options);
  }
  // Lazard: a Groebner basis of the homogenized generators for the
  // homogenized order dehomogenizes to a standard basis.
  if (n + 1 > kMaxVariables) throw UsageError("too many variables for a standard basis");
  const MonomialOrder h_order = MonomialOrder::homogenized(order);
  std::vector<Polynomial> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(homogenize(g, h_order));
  BuchbergerEngine engine(std::move(inputs), n + 1, h_order,
                          options.highest_corner && order.is_local(), options.chain_criterion);
  std::vector<Polynomial> raw;
  for (const auto& g : engine.run()) raw.push_back(dehomogenize(g, order));
  return finish_basis(std::move(raw), n, order, options);
}

std::vector<Monomial> leading_monomials(const Ideal& ideal) {
  const Ideal sb = standard_basis(ideal);
  std::vector<Monomial> lms;
  for (const auto& g : sb.generators()) lms.push_back(g.leading_monomial());
  return lms;
}

std::int64_t count_standard_monomials(std::span<const Monomial> monomials, std::size_t nvars) {
  std::int64_t count = 0;
  Monomial m(nvars);
  auto in_ideal = [&](const Monomial& x) {
    return std::any_of(monomials.begin(), monomials.end(),
                       [&](const Monomial& g) { return g.divides(x); });
  };
  for (std::size_t v = 0; v < nvars; ++v) {
    const bool has_power = std::any_of(monomials.begin(), monomials.end(), [&](const Monomial& g) {
      return g.support_size() == 1 && g[v] != 0;
    });
    if (!has_power) throw UsageError("monomial ideal is not of finite colength");
  }
  auto dfs = [&](auto&& self, std::size_t var) -> void {
    if (var == nvars) {
      ++count;
      return;
    }
    for (unsigned e = 0;; ++e) {
      m.set(var, e);
      if (in_ideal(m)) break;
      self(self, var + 1);
    }
    m.set(var, 0);
  };
  if (!in_ideal(m)) dfs(dfs, 0);
  return count;
}

InvariantValue local_quotient_dim(const Ideal& ideal) {
  const Ideal local = ideal.order().is_local() ? ideal : ideal.with_order(MonomialOrder::local());
  const auto lms = leading_monomials(local);
  const std::size_t n = local.nvars();
  for (const auto& m : lms) {
    if (m.is_one()) return InvariantValue::finite(0);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const bool has_power = std::any_of(lms.begin(), lms.end(), [&](const Monomial& g) {
      return g.support_size() == 1 && g[v] != 0;
    });
    if (!has_power) return InvariantValue::infinite();
  }
  return InvariantValue::finite(count_standard_monomials(lms, n));
}

int monomial_krull_dim(std::span<const Monomial> monomials, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& m : monomials) {
    if (m.is_one()) return -1;
    supports.push_back(m.support_mask());
  }
  int best = -1;
  const std::uint32_t limit = 1u << nvars;
  for (std::uint32_t s = 0; s < limit; ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    const bool free = std::none_of(supports.begin(), supports.end(),
                                   [s](std::uint32_t sup) { return (sup & ~s) == 0; });
    if (free) best = size;
  }
  return best;
}

int leading_ideal_krull_dim(const Ideal& ideal) {
  const auto lms = leading_monomials(ideal);
  return monomial_krull_dim(lms, ideal.nvars());
}

bool ideal_contains(const Ideal& basis, const Polynomial& p) {
  if (!basis.is_standard_basis()) return ideal_contains(standard_basis(basis), p);
  if (p.nvars() != basis.nvars()) throw UsageError("membership test across different rings");
  if (p.is_zero()) return true;
  const MonomialOrder order = basis.order();
  const auto set = make_reducers(basis.generators());
  if (order.is_well_order()) {
    return nf_division(p.with_order(order), set, std::nullopt, false).is_zero();
  }
  std::vector<Monomial> lms;
  for (const auto& r : set) lms.push_back(r.lm);
  if (order.is_local() && has_all_pure_powers(lms, basis.nvars())) {
    const unsigned bound = max_standard_degree(lms, basis.nvars()) + 1;
    return nf_mora(p.with_order(order), set, bound).is_zero();
  }
  // Without a highest corner the weak normal form can take very long; the
  // leading ideal of I + (p) equals that of I exactly when p lies in I.
  const auto extended = leading_monomials(Ideal(basis.nvars(), basis.generators(), order).plus(p));
  return std::all_of(extended.begin(), extended.end(), [&](const Monomial& m) {
    return std::any_of(lms.begin(), lms.end(), [&](const Monomial& g) { return g.divides(m); });
  });
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  const Ideal sb = standard_basis(big);
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return ideal_contains(sb, g); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

}  // namespace germ
