#include "germ/monomial.hpp"

#include <bit>
#include <limits>

#include "germ/error.hpp"

namespace germ {

namespace {

Monomial::Exponent checked_exponent(unsigned long long e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max()) {
    throw UsageError("monomial exponent overflow");
  }
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) {
    throw UsageError("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  }
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exp_[i] = checked_exponent(exponents[i]);
    degree_ += exp_[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  degree_ -= exp_[i];
  exp_[i] = checked_exponent(e);
  degree_ += exp_[i];
}

std::size_t Monomial::support_size() const { return std::popcount(support_mask()); }

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] != 0) mask |= (1u << i);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exp_[i] = checked_exponent(static_cast<unsigned long long>(exp_[i]) + other.exp_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) r.exp_[i] = other.exp_[i] - exp_[i];
  r.degree_ = other.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exp_[i] = exp_[i] > other.exp_[i] ? exp_[i] : other.exp_[i];
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::erase(std::uint32_t mask) const {
  Monomial r(size_ - std::popcount(mask & ((size_ >= 32) ? ~0u : ((1u << size_) - 1))));
  std::size_t k = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (mask & (1u << i)) continue;
    r.exp_[k++] = exp_[i];
    r.degree_ += exp_[i];
  }
  return r;
}

Monomial Monomial::insert_zero(std::size_t index) const {
  Monomial r(size_ + 1u);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r.size_; ++i) {
    r.exp_[i] = (i == index) ? 0 : exp_[k++];
  }
  r.degree_ = degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u + exp_[i];
  return h;
}

}  // namespace germ
