#include "germ/ideal.hpp"

#include <algorithm>

#include "germ/error.hpp"

namespace germ {

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators, MonomialOrder order,
             bool standard)
    : nvars_(nvars), order_(order), standard_(standard) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (g.nvars() != nvars) {
      throw UsageError("ideal generator has " + std::to_string(g.nvars()) +
                       " variables, ring has " + std::to_string(nvars));
    }
    if (g.is_zero()) continue;
    generators_.push_back(g.with_order(order));
  }
}

Ideal Ideal::zero(std::size_t nvars, MonomialOrder order) { return Ideal(nvars, {}, order, true); }

Ideal Ideal::unit(std::size_t nvars, MonomialOrder order) {
  return Ideal(nvars, {Polynomial::constant(nvars, Rational(1), order)}, order, true);
}

Ideal Ideal::maximal(std::size_t nvars, MonomialOrder order) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Polynomial::variable(nvars, i, order));
  return Ideal(nvars, std::move(gens), order, true);
}

bool Ideal::has_unit_generator() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.constant_term() != 0; });
}

Ideal Ideal::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return Ideal(nvars_, generators_, order, false);
}

Ideal Ideal::plus(const Ideal& other) const {
  if (other.nvars_ != nvars_) throw UsageError("ideal sum of different rings");
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(nvars_, std::move(gens), order_);
}

Ideal Ideal::plus(const Polynomial& p) const {
  std::vector<Polynomial> gens = generators_;
  gens.push_back(p);
  return Ideal(nvars_, std::move(gens), order_);
}

std::string Ideal::to_string(std::span<const std::string> names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string(names);
  }
  if (generators_.empty()) out += "0";
  return out + ")";
}

std::string Ideal::to_string() const { return to_string(default_variable_names(nvars_)); }

std::ostream& operator<<(std::ostream& os, const Ideal& ideal) { return os << ideal.to_string(); }

std::int64_t InvariantValue::value() const {
  if (!value_) throw UsageError("value of an infinite invariant requested");
  return *value_;
}

std::string InvariantValue::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("infinite");
}

std::ostream& operator<<(std::ostream& os, const InvariantValue& v) { return os << v.to_string(); }

}  // namespace germ
