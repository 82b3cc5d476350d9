#include "germ/invariants.hpp"

#include <functional>
#include <future>
#include <string>

#include "germ/error.hpp"
#include "germ/standard_basis.hpp"

namespace germ {

namespace {

const MonomialOrder kLocal = MonomialOrder::local();

int local_dim(const Ideal& ideal) { return leading_ideal_krull_dim(ideal.with_order(kLocal)); }

std::int64_t sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

/// A pinned form failed a check; certification must not redraw around it.
class PinnedFormRejected : public GenericityError {
 public:
  using GenericityError::GenericityError;
};

using SampleFn = std::function<std::vector<std::int64_t>(FormStream&, std::vector<Polynomial>&)>;

std::optional<SampleRecord> run_sample(const std::string& label, const GenericityConfig& cfg,
                                       std::uint64_t round, std::uint64_t sample,
                                       const SampleFn& fn) {
  FormStream stream(cfg, round, sample, label);
  SampleRecord record;
  record.sample = sample;
  try {
    record.values = fn(stream, record.forms);
  } catch (const PinnedFormRejected&) {
    throw;
  } catch (const GenericityError&) {
    return std::nullopt;
  }
  return record;
}

Certification certify(const std::string& label, const GenericityConfig& cfg, const SampleFn& fn) {
  if (cfg.samples < 1 || cfg.max_rounds < 1) {
    throw UsageError("certification needs at least one sample and one round");
  }
  for (int round = 0; round < cfg.max_rounds; ++round) {
    const auto r = static_cast<std::uint64_t>(round);
    auto first = run_sample(label, cfg, r, 0, fn);
    if (!first) continue;
    if (first->forms.empty()) return Certification{label, r + 1, {*first}};
    std::vector<std::future<std::optional<SampleRecord>>> pending;
    for (int s = 1; s < cfg.samples; ++s) {
      pending.push_back(std::async(std::launch::async, run_sample, std::cref(label), std::cref(cfg), r,
                                   static_cast<std::uint64_t>(s), std::cref(fn)));
    }
    Certification cert{label, r + 1, {*first}};
    bool accepted = true;
    for (auto& p : pending) {
      auto record = p.get();
      if (!record || record->values != first->values) {
        accepted = false;
      } else {
        cert.samples.push_back(std::move(*record));
      }
    }
    if (accepted) return cert;
  }
  throw GenericityError(label + ": no certified draw after " + std::to_string(cfg.max_rounds) +
                        " rounds");
}

[[noreturn]] void reject(bool pinned, const std::string& why) {
  if (pinned) throw PinnedFormRejected("pinned linear form is not generic: " + why);
  throw GenericityError(why);
}

void require_function(const GermVariety& x, const Polynomial& f, const char* what) {
  if (f.nvars() != x.ambient()) {
    throw UsageError(std::string(what) + " lives in a different ring than X");
  }
  if (f.constant_term() != 0) throw PreconditionError(std::string(what) + " does not vanish at 0");
}

void require_isolated(const GermVariety& x, const Polynomial& f, const char* what = "f") {
  if (!has_isolated_critical_point(x, f)) {
    throw PreconditionError(std::string(what) + " has a non-isolated critical point on X_reg");
  }
}

void require_isolated_singularity(const GermVariety& x) {
  if (local_dim(singular_locus_ideal(x)) > 0) {
    throw PreconditionError("X does not have an isolated singularity at 0");
  }
}

std::optional<LinearForm> as_pinned(const std::optional<Polynomial>& pinned, std::size_t n) {
  if (!pinned) return std::nullopt;
  if (pinned->nvars() != n) throw UsageError("pinned linear form lives in a different ring");
  return LinearForm::from_polynomial(*pinned);
}

std::int64_t alternating_sum(const std::vector<std::int64_t>& levels, int d) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    total += sign_pow(d - static_cast<int>(i) - 1) * levels[i];
  }
  return total;
}

/// I(Γ_f^i, X^f ∩ H^i) for i = 0..d-1 along a flag drawn from `stream`.
/// Forms are drawn in the ambient coordinates of X and restricted to each level.
std::vector<std::int64_t> flag_intersections(const GermVariety& x, const Polynomial& f,
                                             FormStream& stream,
                                             const std::optional<Polynomial>& pinned,
                                             std::vector<Polynomial>& forms) {
  const std::size_t n = x.ambient();
  std::vector<std::int64_t> out;
  GermVariety level = x;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i, kLocal));
  Polynomial fl = f.with_order(kLocal);
  for (int i = 0; i < x.dim(); ++i) {
    const bool is_pinned = i == 0 && pinned.has_value();
    Ideal gamma;
    std::optional<LinearForm> hyperplane;
    if (level.dim() == 1) {
      gamma = saturate(level.defining(), singular_locus_ideal(level));
    } else {
      const Polynomial l = is_pinned ? pinned->with_order(kLocal) : stream.next(n).to_polynomial();
      forms.push_back(l);
      const Polynomial restricted = l.substitute(images).with_order(kLocal);
      if (restricted.is_zero()) reject(is_pinned, "form vanishes on flag level " + std::to_string(i));
      hyperplane = LinearForm::from_polynomial(restricted);
      gamma = polar_ideal(level, fl, restricted);
    }
    if (local_dim(gamma) > 1) {
      reject(is_pinned, "polar set at flag level " + std::to_string(i) + " is not a curve");
    }
    const InvariantValue meet = local_quotient_dim(gamma.plus(fl));
    if (meet.is_infinite()) {
      reject(is_pinned, "polar curve at flag level " + std::to_string(i) + " lies in {f = 0}");
    }
    out.push_back(meet.value());
    if (hyperplane) {
      try {
        Section section = section_with_map(level, *hyperplane);
        for (auto& img : images) img = img.substitute(section.images).with_order(kLocal);
        fl = section.pull_back(fl).with_order(kLocal);
        level = std::move(section.variety);
      } catch (const GenericityError& e) {
        reject(is_pinned, e.what());
      }
    }
  }
  return out;
}

/// I(X^f, Γ_{f,g}) for a user-supplied g; infinite means the pair is not admissible.
std::int64_t admissible_intersection(const GermVariety& x, const Polynomial& f,
                                     const Polynomial& g) {
  const InvariantValue meet = local_quotient_dim(polar_ideal(x, f, g).plus(f.with_order(kLocal)));
  if (meet.is_infinite()) {
    throw PreconditionError("non-admissible pair (f, g): I(X^f, Γ_{f,g}) is infinite");
  }
  return meet.value();
}

std::optional<std::int64_t> icis_route(const GermVariety& x, const Polynomial& f) {
  if (x.dim() == 0 || !x.is_complete_intersection_presentation()) return std::nullopt;
  std::vector<Polynomial> tuple = x.defining().generators();
  tuple.push_back(f.with_order(kLocal));
  try {
    return 1 + sign_pow(x.dim() - 1) * milnor_icis(tuple).value();
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

void cross_check(std::int64_t flag_value, const std::optional<std::int64_t>& icis_value) {
  if (icis_value && *icis_value != flag_value) {
    throw InconsistencyError("Milnor fibre Euler characteristic: flag formula gives " +
                             std::to_string(flag_value) + ", ICIS formula gives " +
                             std::to_string(*icis_value));
  }
}

void add_levels(VerificationReport& report, const std::string& prefix,
                const std::vector<std::int64_t>& levels) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    report.terms.push_back({prefix + ".I" + std::to_string(i), levels[i]});
  }
}

const char* const kSignNote =
    "sign (-1)^(d-1) is used; the (-1)^d variant fails already for X = C^N";

/// Data tied to one choice of g: I(X^f, Γ_{f,g}) and the flag of X^g.
struct CutData {
  std::int64_t intersection = 0;
  std::vector<std::int64_t> levels;
  std::int64_t brasselet = 0;
  std::optional<Polynomial> g;
  std::optional<Certification> certification;
};

CutData random_cut(const GermVariety& x, const Polynomial& f, const GenericityConfig& cfg,
                   const std::string& label) {
  const std::size_t n = x.ambient();
  const Certification cert = certify(label, cfg, [&](FormStream& stream, std::vector<Polynomial>& forms) {
    const Polynomial g = stream.next(n).to_polynomial();
    forms.push_back(g);
    const InvariantValue meet = local_quotient_dim(polar_ideal(x, f, g).plus(f.with_order(kLocal)));
    if (meet.is_infinite()) throw GenericityError("polar curve lies in {f = 0}");
    const GermVariety xg = cut_by(x, g);
    if (!has_isolated_critical_point(xg, f)) throw GenericityError("f not isolated on X^g");
    std::vector<std::int64_t> values{meet.value()};
    const auto levels = flag_intersections(xg, f, stream, std::nullopt, forms);
    values.insert(values.end(), levels.begin(), levels.end());
    return values;
  });
  CutData data;
  const auto& values = cert.samples.front().values;
  data.intersection = values.front();
  data.levels.assign(values.begin() + 1, values.end());
  data.brasselet = alternating_sum(data.levels, x.dim() - 1);
  data.g = cert.samples.front().forms.front();
  data.certification = cert;
  return data;
}

CutData given_cut(const GermVariety& x, const Polynomial& f, const Polynomial& g,
                  const GenericityConfig& cfg, bool pinned) {
  require_function(x, g, "g");
  CutData data;
  try {
    require_isolated(x, g, "g");
    data.intersection = admissible_intersection(x, f, g);
    const GermVariety xg = cut_by(x, g);
    require_isolated(xg, f, "f restricted to X^g");
    const BrasseletResult b = brasselet(xg, f, cfg);
    data.levels = b.intersections;
    data.brasselet = b.value;
    data.certification = b.certification;
  } catch (const PreconditionError& e) {
    if (pinned) throw GenericityError(std::string("pinned linear form is not generic: ") + e.what());
    throw;
  }
  data.g = g;
  return data;
}

CutData make_cut(const GermVariety& x, const Polynomial& f, const std::optional<Polynomial>& g,
                 bool pinned, const GenericityConfig& cfg, const std::string& label) {
  return g ? given_cut(x, f, *g, cfg, pinned) : random_cut(x, f, cfg, label);
}

}  // namespace

InvariantValue milnor_hypersurface(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("Milnor number of the zero function");
  if (f.constant_term() != 0) throw PreconditionError("f does not vanish at 0");
  const std::size_t n = f.nvars();
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(f.derivative(i).with_order(kLocal));
  return local_quotient_dim(Ideal(n, std::move(partials)));
}

InvariantValue milnor_icis(const std::vector<Polynomial>& tuple) {
  if (tuple.empty()) throw UsageError("milnor_icis needs at least one function");
  const std::size_t n = tuple.front().nvars();
  if (tuple.size() > n) {
    throw PreconditionError("an ICIS in " + std::to_string(n) + " variables has at most " +
                            std::to_string(n) + " equations");
  }
  auto prefix_name = [](std::size_t k) {
    return k == 1 ? std::string("(f_1)") : "(f_1, ..., f_" + std::to_string(k) + ")";
  };
  std::vector<Polynomial> prefix;
  std::int64_t mu = 0;
  for (std::size_t k = 1; k <= tuple.size(); ++k) {
    const Polynomial& fk = tuple[k - 1];
    if (fk.nvars() != n) throw UsageError("ICIS equations live in different rings");
    if (fk.constant_term() != 0) {
      throw PreconditionError("equation f_" + std::to_string(k) + " does not vanish at 0");
    }
    prefix.push_back(fk.with_order(kLocal));
    const Ideal zero_set(n, prefix);
    if (local_dim(zero_set) != static_cast<int>(n - k)) {
      throw PreconditionError("not an ICIS along the given order: " + prefix_name(k) +
                              " is not a complete intersection");
    }
    if (k == 1) {
      const InvariantValue m = milnor_hypersurface(fk);
      if (m.is_infinite()) {
        throw PreconditionError("not an ICIS along the given order: " + prefix_name(1) +
                                " has a non-isolated singularity");
      }
      mu = m.value();
      continue;
    }
    PolyMatrix jac;
    for (const auto& p : prefix) {
      std::vector<Polynomial> row;
      for (std::size_t i = 0; i < n; ++i) row.push_back(p.derivative(i).with_order(kLocal));
      jac.push_back(std::move(row));
    }
    const Ideal lower(n, std::vector<Polynomial>(prefix.begin(), prefix.end() - 1));
    const InvariantValue total = local_quotient_dim(lower.plus(minors_ideal(jac, k, n)));
    if (total.is_infinite()) {
      throw PreconditionError("not an ICIS along the given order: " + prefix_name(k) +
                              " has an infinite Lê-Greuel quotient");
    }
    mu = total.value() - mu;
    if (mu < 0) throw InconsistencyError("negative Milnor number for " + prefix_name(k));
  }
  return InvariantValue::finite(mu);
}

InvariantValue intersection_multiplicity(const Ideal& curve, const Polynomial& f) {
  if (f.nvars() != curve.nvars()) throw UsageError("curve and function live in different rings");
  if (f.constant_term() != 0) throw PreconditionError("f does not vanish at 0");
  const int d = local_dim(curve);
  if (d == -1) return InvariantValue::finite(0);
  if (d != 1) {
    throw PreconditionError("intersection multiplicity needs a curve, got dimension " +
                            std::to_string(d));
  }
  return local_quotient_dim(curve.with_order(kLocal).plus(f.with_order(kLocal)));
}

BrasseletResult brasselet(const GermVariety& x, const Polynomial& f, const GenericityConfig& cfg,
                          const std::optional<Polynomial>& pinned) {
  require_function(x, f, "f");
  as_pinned(pinned, x.ambient());
  BrasseletResult result;
  result.certification.label = "brasselet";
  if (x.dim() == 0) return result;
  require_isolated(x, f);
  result.certification = certify("brasselet", cfg, [&](FormStream& stream, std::vector<Polynomial>& forms) {
    return flag_intersections(x, f, stream, pinned, forms);
  });
  result.intersections = result.certification.samples.front().values;
  result.value = alternating_sum(result.intersections, x.dim());
  return result;
}

std::int64_t brasselet_number(const GermVariety& x, const Polynomial& f,
                              const GenericityConfig& cfg) {
  return brasselet(x, f, cfg).value;
}

BrasseletResult euler_obstruction_details(const GermVariety& x, const GenericityConfig& cfg,
                                          const std::optional<Polynomial>& pinned) {
  as_pinned(pinned, x.ambient());
  BrasseletResult result;
  result.certification.label = "euler_obstruction";
  if (x.dim() == 0) {
    result.value = 1;
    return result;
  }
  const std::size_t n = x.ambient();
  result.certification = certify("euler_obstruction", cfg, [&](FormStream& stream, std::vector<Polynomial>& forms) {
    const Polynomial l = stream.next(n).to_polynomial();
    forms.push_back(l);
    if (!has_isolated_critical_point(x, l)) throw GenericityError("linear form not isolated on X");
    return flag_intersections(x, l, stream, pinned, forms);
  });
  result.intersections = result.certification.samples.front().values;
  result.value = alternating_sum(result.intersections, x.dim());
  return result;
}

std::int64_t euler_obstruction(const GermVariety& x, const GenericityConfig& cfg) {
  return euler_obstruction_details(x, cfg).value;
}

FunctionObstruction euler_obstruction_of_function(const GermVariety& x, const Polynomial& f,
                                                  const GenericityConfig& cfg,
                                                  const std::optional<Polynomial>& pinned) {
  FunctionObstruction out;
  out.brasselet = brasselet(x, f, cfg, pinned);
  out.euler = euler_obstruction_details(x, cfg, pinned);
  out.value = out.euler.value - out.brasselet.value;
  out.n_reg = sign_pow(x.dim()) * out.value;
  if (out.n_reg < 0) {
    throw InconsistencyError("negative Morse point count n_reg = " + std::to_string(out.n_reg));
  }
  return out;
}

MilnorFibreChi chi_milnor_fibre_isolated(const GermVariety& x, const Polynomial& f,
                                         const GenericityConfig& cfg,
                                         const std::optional<Polynomial>& pinned) {
  require_isolated_singularity(x);
  MilnorFibreChi out;
  out.brasselet = brasselet(x, f, cfg, pinned);
  out.value = out.brasselet.value;
  out.icis_value = icis_route(x, f);
  cross_check(out.value, out.icis_value);
  return out;
}

VerificationReport verify_le_greuel(const GermVariety& x, const Polynomial& f,
                                    const std::optional<Polynomial>& g,
                                    const GenericityConfig& cfg, bool g_pinned) {
  require_function(x, f, "f");
  if (x.dim() == 0) throw PreconditionError("X is a point");
  require_isolated(x, f);
  const CutData cut = make_cut(x, f, g, g_pinned, cfg, "le_greuel.cut");
  const BrasseletResult bx = brasselet(x, f, cfg);
  VerificationReport report;
  report.identity = "le_greuel";
  report.lhs = bx.value - cut.brasselet;
  report.rhs = sign_pow(x.dim() - 1) * cut.intersection;
  report.terms = {{"B(X,f)", bx.value},
                  {"B(X^g,f)", cut.brasselet},
                  {"I(X^f,polar(f,g))", cut.intersection}};
  add_levels(report, "B(X,f)", bx.intersections);
  add_levels(report, "B(X^g,f)", cut.levels);
  report.certifications = {bx.certification, *cut.certification};
  report.notes.push_back(std::string("sign_convention: ") + kSignNote);
  report.pass = report.lhs == report.rhs;
  return report;
}

VerificationReport verify_teissier_smooth(const Polynomial& f, const GenericityConfig& cfg,
                                          const std::optional<Polynomial>& pinned) {
  const std::size_t n = f.nvars();
  if (n < 2) throw PreconditionError("Teissier's lemma needs a hyperplane section; N = 1 is unsupported");
  as_pinned(pinned, n);
  const InvariantValue mu = milnor_hypersurface(f);
  if (mu.is_infinite()) throw PreconditionError("f has a non-isolated critical point");
  const GermVariety space = GermVariety::affine_space(n);
  const Certification cert = certify("teissier", cfg, [&](FormStream& stream, std::vector<Polynomial>& forms) {
    const Polynomial l = pinned ? pinned->with_order(kLocal) : stream.next(n).to_polynomial();
    forms.push_back(l);
    const InvariantValue meet = local_quotient_dim(polar_ideal(space, f, l).plus(f.with_order(kLocal)));
    if (meet.is_infinite()) reject(pinned.has_value(), "polar curve lies in {f = 0}");
    const Section section = section_with_map(space, LinearForm::from_polynomial(l));
    const Polynomial restricted = section.pull_back(f);
    if (restricted.is_zero()) reject(pinned.has_value(), "f vanishes on the hyperplane");
    const InvariantValue mu_prime = milnor_hypersurface(restricted);
    if (mu_prime.is_infinite()) reject(pinned.has_value(), "restriction of f is not isolated");
    return std::vector<std::int64_t>{mu_prime.value(), meet.value()};
  });
  const auto& values = cert.samples.front().values;
  VerificationReport report;
  report.identity = "teissier";
  report.lhs = mu.value() + values[0];
  report.rhs = values[1];
  report.terms = {{"mu(f)", mu.value()}, {"mu'(f)", values[0]}, {"I(f,polar(f,l))", values[1]}};
  report.certifications = {cert};
  report.pass = report.lhs == report.rhs;
  return report;
}

VerificationReport verify_icis_corollary(const GermVariety& x, const Polynomial& f,
                                         const std::optional<Polynomial>& g,
                                         const GenericityConfig& cfg, bool g_pinned) {
  require_function(x, f, "f");
  if (!x.is_complete_intersection_presentation() || x.dim() < 2) {
    throw PreconditionError("X is not presented as a complete intersection of dimension >= 2");
  }
  require_isolated_singularity(x);
  std::vector<Polynomial> tuple = x.defining().generators();
  tuple.push_back(f.with_order(kLocal));
  const std::int64_t mu_f = milnor_icis(tuple).value();
  const std::size_t n = x.ambient();
  auto evaluate = [&](const Polynomial& gg, bool random) {
    std::vector<Polynomial> longer = tuple;
    longer.push_back(gg.with_order(kLocal));
    std::int64_t mu_fg = 0;
    try {
      mu_fg = milnor_icis(longer).value();
    } catch (const PreconditionError&) {
      if (random) throw GenericityError("(F, f, g) is not an ICIS");
      throw;
    }
    std::int64_t meet = 0;
    if (random) {
      const InvariantValue v = local_quotient_dim(polar_ideal(x, f, gg).plus(f.with_order(kLocal)));
      if (v.is_infinite()) throw GenericityError("polar curve lies in {f = 0}");
      meet = v.value();
    } else {
      meet = admissible_intersection(x, f, gg);
    }
    return std::vector<std::int64_t>{mu_fg, meet};
  };
  VerificationReport report;
  report.identity = "icis_corollary";
  std::vector<std::int64_t> values;
  if (g) {
    require_function(x, *g, "g");
    try {
      values = evaluate(*g, false);
    } catch (const PreconditionError& e) {
      if (g_pinned) throw GenericityError(std::string("pinned linear form is not generic: ") + e.what());
      throw;
    }
  } else {
    const Certification cert = certify("icis_corollary", cfg, [&](FormStream& stream, std::vector<Polynomial>& forms) {
      const Polynomial gg = stream.next(n).to_polynomial();
      forms.push_back(gg);
      return evaluate(gg, true);
    });
    values = cert.samples.front().values;
    report.certifications = {cert};
  }
  report.lhs = mu_f + values[0];
  report.rhs = values[1];
  report.terms = {{"mu(F,f)", mu_f}, {"mu(F,f,g)", values[0]}, {"I(X^f,polar(f,g))", values[1]}};
  report.pass = report.lhs == report.rhs;
  return report;
}

VerificationReport verify_int_numb_isolated(const GermVariety& x, const Polynomial& f,
                                            const std::optional<Polynomial>& g,
                                            const GenericityConfig& cfg, bool g_pinned) {
  require_function(x, f, "f");
  if (x.dim() == 0) throw PreconditionError("X is a point");
  require_isolated_singularity(x);
  require_isolated(x, f);
  const CutData cut = make_cut(x, f, g, g_pinned, cfg, "int_numb.cut");
  const GermVariety xg = cut_by(x, *cut.g);
  const auto chi_g_icis = icis_route(xg, f);
  cross_check(cut.brasselet, chi_g_icis);
  const MilnorFibreChi chi = chi_milnor_fibre_isolated(x, f, cfg);

  VerificationReport report;
  report.identity = "int_numb_isolated";
  report.lhs = chi.value - cut.brasselet;
  report.rhs = sign_pow(x.dim() - 1) * cut.intersection;
  report.terms = {{"chi(X,f)", chi.value},
                  {"chi(X^g,f)", cut.brasselet},
                  {"I(X^f,polar(f,g))", cut.intersection}};
  if (chi.icis_value) report.terms.push_back({"chi(X,f).icis", *chi.icis_value});
  if (chi_g_icis) report.terms.push_back({"chi(X^g,f).icis", *chi_g_icis});
  report.certifications = {chi.brasselet.certification, *cut.certification};
  report.pass = report.lhs == report.rhs;
  if (x.is_complete_intersection_presentation() && x.dim() >= 2) {
    const VerificationReport corollary = verify_icis_corollary(x, f, cut.g, cfg, g_pinned);
    for (const auto& t : corollary.terms) {
      if (t.label != "I(X^f,polar(f,g))") report.terms.push_back(t);
    }
    report.notes.push_back("icis: mu(F,f) + mu(F,f,g) = " + std::to_string(corollary.lhs) +
                           ", I = " + std::to_string(corollary.rhs));
    report.pass = report.pass && corollary.pass;
  }
  return report;
}

VerificationReport evaluate_stratified_chi(const std::vector<StratumDatum>& strata,
                                           const Polynomial& f,
                                           const std::optional<Polynomial>& g,
                                           const GenericityConfig& cfg, bool g_pinned) {
  VerificationReport report;
  report.identity = "stratified";
  report.pass = true;
  if (strata.empty()) return report;
  int top = 0;
  for (const auto& s : strata) top = std::max(top, s.closure.dim());
  for (const auto& s : strata) {
    if (s.closure.dim() == top && s.chi_complex_link != 0) {
      throw PreconditionError("stratum " + s.name +
                              ": the open stratum has an empty complex link (chi 0)");
    }
  }
  auto named = [](const StratumDatum& s, const auto& fn) {
    try {
      return fn();
    } catch (const PreconditionError& e) {
      throw PreconditionError("stratum " + s.name + ": " + e.what());
    }
  };

  std::vector<BrasseletResult> b(strata.size());
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const auto& s = strata[i];
    require_function(s.closure, f, "f");
    if (s.closure.dim() >= 1) b[i] = named(s, [&] { return brasselet(s.closure, f, cfg); });
  }

  std::vector<std::int64_t> meet(strata.size(), 0), bg(strata.size(), 0);
  if (g) {
    for (std::size_t i = 0; i < strata.size(); ++i) {
      const auto& s = strata[i];
      if (s.closure.dim() < 1) continue;
      const CutData cut = named(s, [&] { return given_cut(s.closure, f, *g, cfg, g_pinned); });
      meet[i] = cut.intersection;
      bg[i] = cut.brasselet;
      report.certifications.push_back(*cut.certification);
    }
  } else {
    const std::size_t n = strata.front().closure.ambient();
    const Certification cert = certify("stratified.cut", cfg, [&](FormStream& stream, std::vector<Polynomial>& forms) {
      const Polynomial gg = stream.next(n).to_polynomial();
      forms.push_back(gg);
      std::vector<std::int64_t> values;
      for (const auto& s : strata) {
        if (s.closure.dim() < 1) continue;
        const InvariantValue v =
            local_quotient_dim(polar_ideal(s.closure, f, gg).plus(f.with_order(kLocal)));
        if (v.is_infinite()) throw GenericityError("polar curve lies in {f = 0}");
        const GermVariety cut = cut_by(s.closure, gg);
        if (!has_isolated_critical_point(cut, f)) throw GenericityError("f not isolated on V^g");
        const auto levels = flag_intersections(cut, f, stream, std::nullopt, forms);
        values.push_back(v.value());
        values.push_back(alternating_sum(levels, cut.dim()));
      }
      return values;
    });
    const auto& values = cert.samples.front().values;
    std::size_t k = 0;
    for (std::size_t i = 0; i < strata.size(); ++i) {
      if (strata[i].closure.dim() < 1) continue;
      meet[i] = values[k++];
      bg[i] = values[k++];
    }
    report.certifications.push_back(cert);
  }

  std::int64_t chi_f = 0, chi_fg = 0;
  report.lhs = 0;
  report.rhs = 0;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const auto& s = strata[i];
    const std::int64_t weight = 1 - s.chi_complex_link;
    chi_f += weight * b[i].value;
    chi_fg += weight * bg[i];
    report.lhs += weight * (b[i].value - bg[i]);
    report.terms.push_back({s.name + ".B(V,f)", b[i].value});
    report.terms.push_back({s.name + ".B(V^g,f)", bg[i]});
    if (s.closure.dim() >= 1) {
      report.rhs += sign_pow(s.closure.dim() - 1) * meet[i] * weight;
      report.terms.push_back({s.name + ".I(X^f,polar(f,g))", meet[i]});
      report.certifications.push_back(b[i].certification);
    }
  }
  report.terms.push_back({"chi(X,f)", chi_f});
  report.terms.push_back({"chi(X^g,f)", chi_fg});
  report.pass = report.lhs == report.rhs;
  return report;
}

}  // namespace germ
