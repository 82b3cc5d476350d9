#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace germ {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector x_1^e_1 ... x_n^e_n of fixed length n <= kMaxVariables.
/// The total degree is cached.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const { return size_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  bool is_one() const { return degree_ == 0; }

  /// Number of variables with positive exponent.
  std::size_t support_size() const;
  /// Bitmask of variables with positive exponent.
  std::uint32_t support_mask() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold for `*this` as the divisor of `other`.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// Drops the variables whose bit is set in `mask`, keeping the order of the rest.
  Monomial erase(std::uint32_t mask) const;
  /// Inserts a zero exponent at position `index`.
  Monomial insert_zero(std::size_t index) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint8_t size_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace germ
