#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// Finite generator list in a fixed ring. Zero generators are dropped on
/// construction; an empty list is the zero ideal.
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::size_t nvars, std::vector<Polynomial> generators,
        MonomialOrder order = MonomialOrder::local(), bool standard = false);

  static Ideal zero(std::size_t nvars, MonomialOrder order = MonomialOrder::local());
  static Ideal unit(std::size_t nvars, MonomialOrder order = MonomialOrder::local());
  /// (x_1, ..., x_n).
  static Ideal maximal(std::size_t nvars, MonomialOrder order = MonomialOrder::local());

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }

  /// Set when the generators form a standard basis for `order()`.
  bool is_standard_basis() const { return standard_; }

  /// True when some generator has a nonzero constant term; for a local
  /// order this means the ideal is the whole local ring.
  bool has_unit_generator() const;

  Ideal with_order(MonomialOrder order) const;
  Ideal plus(const Ideal& other) const;
  Ideal plus(const Polynomial& p) const;

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::local();
  std::vector<Polynomial> generators_;
  bool standard_ = false;
};

std::ostream& operator<<(std::ostream& os, const Ideal& ideal);

/// Nonnegative integer or Infinite.
class InvariantValue {
 public:
  static InvariantValue finite(std::int64_t v) { return InvariantValue(v); }
  static InvariantValue infinite() { return InvariantValue(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }
  /// Requires is_finite().
  std::int64_t value() const;

  std::string to_string() const;

  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;

 private:
  InvariantValue() = default;
  explicit InvariantValue(std::int64_t v) : value_(v) {}

  std::optional<std::int64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const InvariantValue& v);

}  // namespace germ
