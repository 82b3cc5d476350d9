#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "germ/ideal.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// Mora's weak normal form: returns r with u*p = sum(a_i g_i) + r for a unit
/// u of the localisation determined by `order`, such that no leading monomial
/// of `reducers` divides LM(r). Reducers are chosen with minimal ecart and
/// the intermediate remainders join the reducer set whenever that keeps the
/// ecart from growing, which guarantees termination for local orders.
Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> reducers,
                            MonomialOrder order);

/// Mora normal form together with its standard representation
/// unit * p = sum(cofactors[i] * reducers[i]) + remainder.
struct StandardRepresentation {
  Polynomial unit;
  std::vector<Polynomial> cofactors;
  Polynomial remainder;
};

StandardRepresentation mora_representation(const Polynomial& p,
                                           std::span<const Polynomial> reducers,
                                           MonomialOrder order);

struct StandardBasisOptions {
  /// For LocalAntiDegRevLex: once every variable has a pure power among the
  /// leading monomials, terms above the highest corner (which lie in the
  /// ideal) are discarded.
  bool highest_corner = true;
  /// Reduce non-leading terms of the final basis where this terminates
  /// (global orders, and local orders under a highest corner bound).
  bool tail_reduce = true;
  /// Gebauer-Moeller chain criterion for discarding pairs.
  bool chain_criterion = true;
};

/// Standard basis for the ideal's own order, using Mora's normal form.
/// s-pairs are processed by increasing degree of their lcm.
Ideal standard_basis(const Ideal& ideal, const StandardBasisOptions& options = {});

/// Leading monomials of a standard basis (computed if not flagged).
std::vector<Monomial> leading_monomials(const Ideal& ideal);

/// dim_C of O_{C^n,0} / I, counting monomials outside the local leading
/// ideal. Infinite when some variable has no pure power among the leading
/// monomials.
InvariantValue local_quotient_dim(const Ideal& ideal);

/// Krull dimension of the monomial ideal generated by `monomials` in `nvars`
/// variables: the size of a largest variable subset S with no generator
/// supported inside S. The unit ideal has dimension -1.
int monomial_krull_dim(std::span<const Monomial> monomials, std::size_t nvars);

/// Krull dimension of the local quotient O/I via its leading ideal.
int leading_ideal_krull_dim(const Ideal& ideal);

/// Counts monomials outside the monomial ideal; requires a pure power of
/// every variable among `monomials`.
std::int64_t count_standard_monomials(std::span<const Monomial> monomials, std::size_t nvars);

/// Membership in the local ring: `basis` must be a standard basis.
bool ideal_contains(const Ideal& basis, const Polynomial& p);
/// I contains every generator of J (I is brought to a standard basis first).
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);

}  // namespace germ
