#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germ/geometry.hpp"
#include "germ/ideal.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// dim_C O / (∂f/∂x_1, ..., ∂f/∂x_N); Infinite for a non-isolated critical point.
/// Requires f != 0 and f(0) = 0.
InvariantValue milnor_hypersurface(const Polynomial& f);

/// Milnor number of the ICIS (f_1, ..., f_k) by the recursion
/// μ(f_1..f_j) + μ(f_1..f_{j-1}) = dim O / (f_1..f_{j-1}, j x j minors).
/// Throws PreconditionError naming the first prefix that is not an ICIS.
InvariantValue milnor_icis(const std::vector<Polynomial>& tuple);

/// dim_C O / (curve + (f)). The curve ideal must be one-dimensional; the
/// unit ideal (empty curve) gives 0.
InvariantValue intersection_multiplicity(const Ideal& curve, const Polynomial& f);

/// Forms used by one certification sample and the integers it produced.
struct SampleRecord {
  std::uint64_t sample = 0;
  std::vector<Polynomial> forms;
  std::vector<std::int64_t> values;
};

/// A randomized computation accepted once every sample of one round
/// succeeded and all samples produced the same integers.
struct Certification {
  std::string label;
  /// Rounds drawn, including the accepted one.
  std::uint64_t rounds = 0;
  std::vector<SampleRecord> samples;
};

/// B_{f,X}(0) with its flag breakdown: intersections[i] is
/// I(Γ_f^i, X^f ∩ H^i) and the value is Σ (-1)^{d-i-1} intersections[i].
struct BrasseletResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> intersections;
  Certification certification;
};

/// `pinned`, when given, is the first flag form: the g of the top polar
/// curve and the first hyperplane. A pinned form that fails a genericity
/// check raises GenericityError without redrawing.
BrasseletResult brasselet(const GermVariety& x, const Polynomial& f, const GenericityConfig& cfg,
                          const std::optional<Polynomial>& pinned = std::nullopt);
std::int64_t brasselet_number(const GermVariety& x, const Polynomial& f,
                              const GenericityConfig& cfg);

/// Eu_X(0) = B_{l,X}(0) for a generic linear l; 1 for a point.
BrasseletResult euler_obstruction_details(const GermVariety& x, const GenericityConfig& cfg,
                                          const std::optional<Polynomial>& pinned = std::nullopt);
std::int64_t euler_obstruction(const GermVariety& x, const GenericityConfig& cfg);

struct FunctionObstruction {
  std::int64_t value = 0;
  /// (-1)^d Eu_{f,X}(0), the Morse point count on X_reg.
  std::int64_t n_reg = 0;
  BrasseletResult euler;
  BrasseletResult brasselet;
};

/// Eu_{f,X}(0) = Eu_X(0) - B_{f,X}(0). Throws InconsistencyError if n_reg < 0.
FunctionObstruction euler_obstruction_of_function(
    const GermVariety& x, const Polynomial& f, const GenericityConfig& cfg,
    const std::optional<Polynomial>& pinned = std::nullopt);

struct MilnorFibreChi {
  std::int64_t value = 0;
  BrasseletResult brasselet;
  /// 1 + (-1)^{d-1} μ(defining tuple, f) when X is presented as an ICIS.
  std::optional<std::int64_t> icis_value;
};

/// χ of the Milnor fibre of f on X with an isolated singularity: B_{f,X}(0),
/// cross-checked against the ICIS formula. Throws InconsistencyError when
/// the two disagree.
MilnorFibreChi chi_milnor_fibre_isolated(const GermVariety& x, const Polynomial& f,
                                         const GenericityConfig& cfg,
                                         const std::optional<Polynomial>& pinned = std::nullopt);

struct ReportTerm {
  std::string label;
  std::int64_t value = 0;
};

struct VerificationReport {
  std::string identity;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::vector<ReportTerm> terms;
  std::vector<Certification> certifications;
  std::vector<std::string> notes;
  bool pass = false;
};

/// B_{f,X}(0) - B_{f,X^g}(0) = (-1)^{d-1} I(X^f, Γ_{f,g}). Without g a
/// generic linear form is drawn. Throws PreconditionError for a given g with
/// infinite intersection number; with `g_pinned` the checks on g raise
/// GenericityError instead.
VerificationReport verify_le_greuel(const GermVariety& x, const Polynomial& f,
                                    const std::optional<Polynomial>& g,
                                    const GenericityConfig& cfg, bool g_pinned = false);

/// μ(f) + μ(f|H) = I(Γ_{f,l}, {f = 0}) for a generic hyperplane H = {l = 0}.
/// Rejects N = 1.
VerificationReport verify_teissier_smooth(const Polynomial& f, const GenericityConfig& cfg,
                                          const std::optional<Polynomial>& pinned = std::nullopt);

/// χ(X ∩ f^{-1}(δ)) - χ(X^g ∩ f^{-1}(δ)) = (-1)^{d-1} I(X^f, Γ_{f,g}) for X
/// with an isolated singularity. For an ICIS of dimension >= 2 the report also
/// carries μ(F, f) + μ(F, f, g) = I(X^f, Γ_{f,g}), which must hold for a pass.
VerificationReport verify_int_numb_isolated(const GermVariety& x, const Polynomial& f,
                                            const std::optional<Polynomial>& g,
                                            const GenericityConfig& cfg, bool g_pinned = false);

/// μ(F, f) + μ(F, f, g) = I(X^f, Γ_{f,g}) for X = V(F) an ICIS of dimension >= 2.
VerificationReport verify_icis_corollary(const GermVariety& x, const Polynomial& f,
                                         const std::optional<Polynomial>& g,
                                         const GenericityConfig& cfg, bool g_pinned = false);

struct StratumDatum {
  std::string name;
  /// Closure of the stratum.
  GermVariety closure;
  std::int64_t chi_complex_link = 0;
};

/// Evaluates both sides of
///   Σ (1 - χ_i) [B_{f,V̄_i}(0) - B_{f,V̄_i ∩ {g=0}}(0)]
///     = Σ_{d_i >= 1} (-1)^{d_i - 1} I(X^f, Γ̄^i_{f,g}) (1 - χ_i)
/// from user-supplied strata, with χ_i = χ(lk^C(V_i, X)). The report also
/// carries the Milnor fibre Euler characteristics Σ (1 - χ_i) B_{f,V̄_i}(0)
/// of f on X and on X^g.
VerificationReport evaluate_stratified_chi(const std::vector<StratumDatum>& strata,
                                           const Polynomial& f,
                                           const std::optional<Polynomial>& g,
                                           const GenericityConfig& cfg, bool g_pinned = false);

}  // namespace germ
