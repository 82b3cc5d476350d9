#include "germ/monomial_order.hpp"

#include "germ/error.hpp"

namespace germ {

namespace {

using Kind = MonomialOrder::Kind;

// Reverse-lex tie break restricted to the variables selected by `mask`:
// the monomial with the smaller exponent in the last differing variable wins.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::uint32_t mask) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!(mask & (1u << i))) continue;
    if (a[i] != b[i]) {
      return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

unsigned masked_degree(const Monomial& m, std::uint32_t mask) {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (mask & (1u << i)) d += m[i];
  }
  return d;
}

// Compares on the variables in `active` only; `global` is a subset of it.
std::strong_ordering compare_on(Kind kind, std::uint32_t global, std::uint32_t active,
                                const Monomial& a, const Monomial& b) {
  switch (kind) {
    case Kind::GlobalDegRevLex:
    case Kind::LocalAntiDegRevLex: {
      const unsigned da = masked_degree(a, active), db = masked_degree(b, active);
      if (da != db) return kind == Kind::GlobalDegRevLex ? da <=> db : db <=> da;
      return revlex(a, b, active);
    }
    case Kind::Block: {
      const std::uint32_t g = global & active;
      const std::uint32_t l = active & ~g;
      const unsigned ga = masked_degree(a, g), gb = masked_degree(b, g);
      if (ga != gb) return ga <=> gb;
      if (auto c = revlex(a, b, g); c != 0) return c;
      const unsigned la = masked_degree(a, l), lb = masked_degree(b, l);
      if (la != lb) return lb <=> la;
      return revlex(a, b, l);
    }
    case Kind::Homogenized:
      break;
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::homogenized(MonomialOrder base) {
  if (base.kind_ == Kind::Homogenized) throw UsageError("order is already homogenized");
  return MonomialOrder(Kind::Homogenized, base.global_mask_, base.kind_);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::uint32_t all = (a.size() >= 32) ? ~0u : ((1u << a.size()) - 1);
  if (kind_ == Kind::Homogenized) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    // Equal total degree: the x-parts decide, and they determine the t-power.
    return compare_on(base_kind_, global_mask_ << 1, all & ~1u, a, b);
  }
  return compare_on(kind_, global_mask_, all, a, b);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::GlobalDegRevLex:
      return "GlobalDegRevLex";
    case Kind::LocalAntiDegRevLex:
      return "LocalAntiDegRevLex";
    case Kind::Block:
      return "Block(" + std::to_string(global_mask_) + ")";
    case Kind::Homogenized:
      return "Homogenized(" + base().name() + ")";
  }
  return "?";
}

}  // namespace germ
