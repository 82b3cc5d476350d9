#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "germ/monomial.hpp"

namespace germ {

/// Monomial orderings used by the kernel.
///
///   GlobalDegRevLex     degree first (higher is larger), reverse-lex ties;
///                       a well-order.
///   LocalAntiDegRevLex  degree first with *lower* degree larger, same
///                       reverse-lex ties; 1 is the largest monomial, so the
///                       leading term of a polynomial is a lowest-degree term.
///   Block               the variables in `global_mask` are compared first with
///                       GlobalDegRevLex, ties are broken on the remaining
///                       variables with LocalAntiDegRevLex.
///   Homogenized         order on K[t, x] with t at index 0 built from a base
///                       order on x: total degree first (higher is larger),
///                       ties broken by the base order on the x-part. A
///                       well-order for any base; used for Lazard's method.
///
/// Reverse-lex ties make the first declared variable the largest one among
/// monomials of equal degree: x > y > z.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { GlobalDegRevLex, LocalAntiDegRevLex, Block, Homogenized };

  static constexpr MonomialOrder global() { return MonomialOrder(Kind::GlobalDegRevLex, 0); }
  static constexpr MonomialOrder local() { return MonomialOrder(Kind::LocalAntiDegRevLex, 0); }
  static constexpr MonomialOrder block(std::uint32_t global_mask) {
    return MonomialOrder(Kind::Block, global_mask);
  }
  /// `base` must not itself be homogenized.
  static MonomialOrder homogenized(MonomialOrder base);

  Kind kind() const { return kind_; }
  std::uint32_t global_mask() const { return global_mask_; }

  /// True when every non-constant monomial is smaller than 1 (purely local).
  bool is_local() const { return kind_ == Kind::LocalAntiDegRevLex; }
  bool is_global() const { return kind_ == Kind::GlobalDegRevLex; }
  /// Every monomial is larger than 1 (Buchberger's algorithm applies).
  bool is_well_order() const { return is_global() || kind_ == Kind::Homogenized; }
  /// The order on x that a Homogenized order was built from.
  MonomialOrder base() const { return MonomialOrder(base_kind_, global_mask_); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind kind, std::uint32_t mask, Kind base_kind = Kind::GlobalDegRevLex)
      : kind_(kind), base_kind_(base_kind), global_mask_(mask) {}

  Kind kind_ = Kind::GlobalDegRevLex;
  Kind base_kind_ = Kind::GlobalDegRevLex;
  std::uint32_t global_mask_ = 0;
};

}  // namespace germ
