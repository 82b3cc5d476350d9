#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "germ/monomial.hpp"
#include "germ/monomial_order.hpp"

namespace germ {

using Rational = mpq_class;
using BigInt = mpz_class;

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept sorted in decreasing order for the polynomial's active
/// monomial order, with no zero coefficients; `with_order` re-sorts. Binary
/// operations require equal variable counts and produce a result in the
/// left operand's order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, MonomialOrder order = MonomialOrder::global());

  static Polynomial constant(std::size_t nvars, const Rational& c,
                             MonomialOrder order = MonomialOrder::global());
  static Polynomial variable(std::size_t nvars, std::size_t index,
                             MonomialOrder order = MonomialOrder::global());
  static Polynomial monomial(const Monomial& m, const Rational& c,
                             MonomialOrder order = MonomialOrder::global());
  /// Canonicalises: merges equal monomials, drops zeros, sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::global());

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  /// Highest total degree of a term (0 for the zero polynomial).
  unsigned degree() const;
  /// Lowest total degree of a term (0 for the zero polynomial).
  unsigned low_degree() const;
  /// deg(p) - deg(LM(p)); drives reducer selection in the local normal form.
  unsigned ecart() const { return is_zero() ? 0 : degree() - leading_monomial().degree(); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial with_order(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scale(const Rational& c) const&;
  Polynomial scale(const Rational& c) &&;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  /// this - c * m * g, computed by a single merge.
  Polynomial sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const&;
  /// As above, reusing the terms of this.
  Polynomial sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) &&;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial monic() const;
  /// The scalar multiple with coprime integer coefficients and a positive
  /// leading coefficient.
  Polynomial primitive() const;
  /// In-place form of primitive().
  Polynomial& make_primitive();
  /// Drops every term of total degree > `max_degree`.
  Polynomial truncate(unsigned max_degree) const;

  /// Replaces x_i by images[i]; all images share the target ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Re-embeds into a ring with one more variable inserted at `index`.
  Polynomial insert_variable(std::size_t index, MonomialOrder order) const;
  /// Embeds into a ring without the variables in `mask`; those variables must not occur.
  Polynomial erase_variables(std::uint32_t mask, MonomialOrder order) const;

  bool involves(std::size_t var) const;

  /// Terms in decreasing active order, coefficients as `a` or `a/b`.
  std::string to_string(std::span<const std::string> names) const;
  /// Uses x1, x2, ... as variable names.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;
  void sort_terms();

  std::size_t nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::global();
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

std::string rational_to_string(const Rational& q);

/// Names x1..xn.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace germ
