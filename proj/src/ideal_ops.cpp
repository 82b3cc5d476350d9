#include "germ/ideal_ops.hpp"

#include <optional>

#include "germ/error.hpp"
#include "germ/standard_basis.hpp"

namespace germ {

namespace {

Ideal localize(const Ideal& ideal) { return ideal.with_order(MonomialOrder::local()); }

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw UsageError("ideals live in rings with different variable counts");
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  return localize(a).plus(localize(b));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.nvars(), std::move(gens), MonomialOrder::local());
}

Ideal eliminate(const Ideal& ideal, std::uint32_t mask) {
  const MonomialOrder& order = ideal.order();
  if (order.kind() != MonomialOrder::Kind::Block || (mask & ~order.global_mask()) != 0) {
    throw UsageError("elimination requested for a variable outside the global block");
  }
  std::size_t remaining = ideal.nvars();
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    if (mask & (1u << i)) --remaining;
  }
  const Ideal sb = standard_basis(ideal);
  std::vector<Polynomial> kept;
  for (const auto& g : sb.generators()) {
    if (g.leading_monomial().support_mask() & mask) continue;
    // With the eliminated block compared first, a leading monomial free of
    // those variables forces the whole polynomial to be free of them.
    kept.push_back(g.erase_variables(mask, MonomialOrder::local()));
  }
  return Ideal(remaining, std::move(kept), MonomialOrder::local());
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const std::size_t n = a.nvars();
  if (a.empty() || b.empty()) return Ideal::zero(n);
  if (a.has_unit_generator()) return localize(b);
  if (b.has_unit_generator()) return localize(a);
  const MonomialOrder order = MonomialOrder::block(1u);
  const Polynomial t = Polynomial::variable(n + 1, 0, order);
  const Polynomial one_minus_t = Polynomial::constant(n + 1, Rational(1), order) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.insert_variable(0, order));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.insert_variable(0, order));
  return eliminate(Ideal(n + 1, std::move(gens), order), 1u);
}

Ideal quotient_by_element(const Ideal& ideal, const Polynomial& h) {
  const std::size_t n = ideal.nvars();
  if (h.nvars() != n) throw UsageError("quotient by an element of a different ring");
  if (h.is_zero()) return Ideal::unit(n);
  const Polynomial hl = h.with_order(MonomialOrder::local());
  if (hl.constant_term() != 0) return localize(ideal);
  const Ideal sb = standard_basis(localize(ideal));
  if (ideal_contains(sb, hl)) return Ideal::unit(n);
  const Ideal meet = intersection(sb, Ideal(n, {hl}));
  std::vector<Polynomial> gens;
  const std::vector<Polynomial> divisor{hl};
  for (const auto& q : meet.generators()) {
    auto rep = mora_representation(q, divisor, MonomialOrder::local());
    if (!rep.remainder.is_zero() || rep.unit.is_zero() || !rep.unit.leading_monomial().is_one()) {
      throw Error("internal: local division in ideal quotient failed");
    }
    gens.push_back(rep.cofactors.front());
  }
  return Ideal(n, std::move(gens), MonomialOrder::local());
}

Ideal quotient(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal, by);
  if (by.empty()) return Ideal::unit(ideal.nvars());
  std::optional<Ideal> result;
  for (const auto& j : by.generators()) {
    Ideal q = quotient_by_element(ideal, j);
    result = result ? intersection(*result, q) : q;
  }
  return *result;
}

Ideal saturate_by_element(const Ideal& ideal, const Polynomial& h) {
  const std::size_t n = ideal.nvars();
  if (h.nvars() != n) throw UsageError("saturation by an element of a different ring");
  if (h.is_zero()) return Ideal::unit(n);
  const Polynomial hl = h.with_order(MonomialOrder::local());
  if (hl.constant_term() != 0 || ideal.empty()) return localize(ideal);
  const MonomialOrder order = MonomialOrder::block(1u);
  const Polynomial t = Polynomial::variable(n + 1, 0, order);
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.insert_variable(0, order));
  gens.push_back(Polynomial::constant(n + 1, Rational(1), order) - t * hl.insert_variable(0, order));
  return eliminate(Ideal(n + 1, std::move(gens), order), 1u);
}

}  // namespace germ
