#include "germ/polynomial.hpp"

#include <algorithm>
#include <iterator>
#include <utility>
#include <unordered_map>

#include "germ/error.hpp"

namespace germ {

Polynomial::Polynomial(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {
  if (nvars > kMaxVariables) throw UsageError("too many variables");
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, MonomialOrder order) {
  Polynomial p(nvars, order);
  if (c != 0) {
    p.terms_.push_back({Monomial(nvars), c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, MonomialOrder order) {
  if (index >= nvars) throw UsageError("variable index out of range");
  Polynomial p(nvars, order);
  p.terms_.push_back({Monomial::variable(nvars, index), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, MonomialOrder order) {
  Polynomial p(m.size(), order);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms,
                                  MonomialOrder order) {
  Polynomial p(nvars, order);
  for (auto& t : terms) {
    if (t.monomial.size() != nvars) throw UsageError("monomial length does not match ring");
    t.coeff.canonicalize();
  }
  p.terms_ = std::move(terms);
  p.sort_terms();
  return p;
}

void Polynomial::sort_terms() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return order_.greater(a.monomial, b.monomial);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

unsigned Polynomial::low_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.front().monomial.degree();
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return Rational(0);
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial p(nvars_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(), [&order](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  return p;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw UsageError("polynomials live in rings with different variable counts (" +
                     std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + ")");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  *this = sub_scaled(Rational(-1), Monomial(nvars_), other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  *this = sub_scaled(Rational(1), Monomial(nvars_), other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(a.nvars_, std::move(terms), a.order_);
}

Polynomial Polynomial::scale(const Rational& c) const& {
  Polynomial p = *this;
  return std::move(p).scale(c);
}

Polynomial Polynomial::scale(const Rational& c) && {
  if (c == 0) return Polynomial(nvars_, order_);
  Rational k = c;
  k.canonicalize();
  for (auto& t : terms_) t.coeff *= k;
  return std::move(*this);
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (m.size() != nvars_) throw UsageError("monomial length does not match ring");
  if (c == 0) return Polynomial(nvars_, order_);
  Polynomial p(nvars_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::sub_scaled(const Rational& c, const Monomial& m,
                                  const Polynomial& g) const& {
  Polynomial p = *this;
  return std::move(p).sub_scaled(c, m, g);
}

Polynomial Polynomial::sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) && {
  check_compatible(g);
  if (c == 0 || g.is_zero()) return std::move(*this);
  // Multiplication by a monomial preserves every supported order, so a
  // single merge suffices when both operands share the order.
  const Polynomial* gp = &g;
  Polynomial resorted;
  if (!(g.order_ == order_)) {
    resorted = g.with_order(order_);
    gp = &resorted;
  }
  Polynomial r(nvars_, order_);
  r.terms_.reserve(terms_.size() + gp->terms_.size());
  auto it = terms_.begin();
  const auto end = terms_.end();
  Rational tmp;
  for (const auto& gt : gp->terms_) {
    Monomial shifted = gt.monomial * m;
    while (it != end && order_.greater(it->monomial, shifted)) r.terms_.push_back(std::move(*it++));
    tmp = gt.coeff * c;
    if (it != end && it->monomial == shifted) {
      it->coeff -= tmp;
      if (it->coeff != 0) r.terms_.push_back(std::move(*it));
      ++it;
    } else {
      r.terms_.push_back({shifted, -tmp});
    }
  }
  std::move(it, end, std::back_inserter(r.terms_));
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, Rational(1), order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw UsageError("derivative variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  return from_terms(nvars_, std::move(terms), order_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coeff();
  return scale(inv);
}

Polynomial Polynomial::primitive() const {
  Polynomial p = *this;
  return p.make_primitive();
}

Polynomial& Polynomial::make_primitive() {
  if (is_zero()) return *this;
  mpz_class den = 1, num = 0;
  for (const auto& t : terms_) {
    if (t.coeff.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    if (num != 1) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  const bool negate = sgn(leading_coeff()) < 0;
  if (den == 1 && num == 1 && !negate) return *this;
  if (negate) num = -num;
  for (auto& t : terms_) {
    mpz_class& c = t.coeff.get_num();
    if (den != 1) {
      mpz_divexact(t.coeff.get_den_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      c *= t.coeff.get_den();
      t.coeff.get_den() = 1;
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), num.get_mpz_t());
  }
  return *this;
}

Polynomial Polynomial::truncate(unsigned max_degree) const {
  Polynomial p(nvars_, order_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() <= max_degree) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw UsageError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const std::size_t target = images.front().nvars();
  const MonomialOrder order = images.front().order();
  for (const auto& q : images) {
    if (q.nvars() != target) throw UsageError("substitution images live in different rings");
  }
  // Powers of each image are reused across terms.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, Rational(1), order));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target, order);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff, order);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::insert_variable(std::size_t index, MonomialOrder order) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial.insert_zero(index), t.coeff});
  return from_terms(nvars_ + 1, std::move(terms), order);
}

Polynomial Polynomial::erase_variables(std::uint32_t mask, MonomialOrder order) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  std::size_t target = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (mask & (1u << i)) --target;
  }
  for (const auto& t : terms_) {
    if (t.monomial.support_mask() & mask) {
      throw UsageError("cannot drop a variable that occurs in the polynomial");
    }
    terms.push_back({t.monomial.erase(mask), t.coeff});
  }
  return from_terms(target, std::move(terms), order);
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.monomial[var] != 0; });
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) throw UsageError("need one name per variable");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += rational_to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += rational_to_string(c) + "*" + mono;
    }
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(default_variable_names(nvars_)); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace germ
