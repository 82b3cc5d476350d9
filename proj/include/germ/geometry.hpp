#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "germ/ideal.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// A germ (X, 0) ⊂ (C^N, 0) given by its defining ideal and declared
/// dimension. An empty ideal is C^N itself.
class GermVariety {
 public:
  /// Validates that every generator vanishes at 0, that d <= N and that the
  /// leading ideal has Krull dimension d; throws PreconditionError otherwise.
  GermVariety(std::size_t ambient, Ideal defining, int dim);

  static GermVariety affine_space(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  const Ideal& defining() const { return defining_; }
  int dim() const { return dim_; }
  /// N - d, the number of equations of a complete intersection.
  std::size_t codim() const { return ambient_ - static_cast<std::size_t>(dim_); }
  /// Generator count equals N - d.
  bool is_complete_intersection_presentation() const { return defining_.size() == codim(); }

 private:
  std::size_t ambient_;
  Ideal defining_;
  int dim_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct GenericityConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t coefficient_bound = 1000;
  int samples = 3;
  /// Redraw rounds before certification gives up.
  int max_rounds = 10;
};

/// A linear form sum c_i x_i, not all c_i zero.
struct LinearForm {
  std::vector<Rational> coefficients;

  /// Throws PreconditionError unless p is a nonzero homogeneous linear polynomial.
  static LinearForm from_polynomial(const Polynomial& p);
  Polynomial to_polynomial(MonomialOrder order = MonomialOrder::local()) const;
  std::size_t size() const { return coefficients.size(); }
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Rows: gradients of the generators of I_X, then of `fns`.
PolyMatrix jacobian_stack(const GermVariety& x, std::span<const Polynomial> fns);

/// All k x k minors of `m` in a ring with `nvars` variables. k = 0 gives the
/// unit ideal; k beyond either dimension gives the zero ideal.
Ideal minors_ideal(const PolyMatrix& m, std::size_t k, std::size_t nvars);

/// I_X + (N - d)-minors of the Jacobian of I_X; the unit ideal for smooth X.
Ideal singular_locus_ideal(const GermVariety& x);

/// (I : J^∞) in the local ring, as the intersection of (I : j^∞) over the
/// generators j of J.
Ideal saturate(const Ideal& ideal, const Ideal& by);

/// I_X + (N - d + 1)-minors of [Jac(I_X); df], saturated by Sing(X).
Ideal critical_ideal(const GermVariety& x, const Polynomial& f);

/// True when the critical ideal of f on X_reg is zero-dimensional or the unit ideal.
bool has_isolated_critical_point(const GermVariety& x, const Polynomial& f);

/// Closure of the relative polar set of (f, g) on X_reg: I_X + (N - d + 2)-minors
/// of [Jac(I_X); df; dg], saturated by Sing(X).
Ideal polar_ideal(const GermVariety& x, const Polynomial& f, const Polynomial& g);

/// Deterministic forms for (round, sample) with integer coefficients uniform
/// in [-bound, bound]; all-zero draws are redrawn.
std::vector<LinearForm> generic_linear(const GenericityConfig& cfg, std::size_t nvars,
                                       std::size_t count, std::uint64_t round = 0,
                                       std::uint64_t sample = 0);

/// Stream of forms for one certification sample. Distinct `stream` names
/// give independent streams for the same seed, round and sample.
class FormStream {
 public:
  FormStream(const GenericityConfig& cfg, std::uint64_t round, std::uint64_t sample,
             std::string_view stream = {});
  LinearForm next(std::size_t nvars);

 private:
  std::mt19937_64 rng_;
  std::uint64_t bound_;
};

/// A hyperplane section together with the coordinate change used to build
/// it: images[i] expresses the old x_i in the N - 1 new coordinates.
struct Section {
  GermVariety variety;
  std::vector<Polynomial> images;

  Polynomial pull_back(const Polynomial& p) const;
};

/// Unimodular integer matrix C with v*C = e_N for a primitive integer
/// vector v; columns other than the pivot keep their relative order.
std::vector<std::vector<BigInt>> unimodular_completion(const std::vector<BigInt>& v);

/// X ∩ {h = 0} in coordinates where h is the last variable. Throws
/// GenericityError if the section does not have dimension d - 1 or its
/// singular locus is larger than a generic hyperplane allows.
Section section_with_map(const GermVariety& x, const LinearForm& h);
GermVariety hyperplane_section(const GermVariety& x, const LinearForm& h);

/// X ∩ {g = 0} in the same ambient space, with the same dimension and
/// singular-locus checks as section_with_map.
GermVariety cut_by(const GermVariety& x, const Polynomial& g);

}  // namespace germ
