#include "app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "germ/error.hpp"
#include "germ/geometry.hpp"
#include "germ/invariants.hpp"
#include "germ/parser.hpp"
#include "germ/standard_basis.hpp"

namespace germcalc {

namespace {

using germ::GenericityConfig;
using germ::GermVariety;
using germ::Polynomial;
using Json = nlohmann::ordered_json;

const germ::MonomialOrder kLocal = germ::MonomialOrder::local();
constexpr const char* kSeedVariable = "GERMCALC_SEED";

/// Unreadable file, malformed JSON or a bad value in the problem file.
class InputError : public germ::Error {
 public:
  using germ::Error::Error;
};

struct Options {
  std::string command;
  std::string target;
  std::string input;
  std::string format = "text";
  std::string linear_form;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<std::uint64_t> bound;
};

struct Stratum {
  std::string name;
  std::vector<std::string> ideal;
  int dim = 0;
  std::int64_t chi = 0;
};

struct Problem {
  std::vector<std::string> variables;
  std::optional<std::vector<std::string>> space_ideal;
  std::optional<int> space_dim;
  std::optional<std::string> f;
  std::optional<std::string> g;
  std::optional<std::vector<Stratum>> strata;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<std::uint64_t> bound;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError(what + " must be a nonnegative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw InputError(what + " does not fit in 64 bits");
  }
}

std::uint64_t json_u64(const Json& v, const std::string& what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) return parse_u64(v.get<std::string>(), what);
  throw InputError(what + " must be a nonnegative integer");
}

std::int64_t json_i64(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    try {
      const long long r = std::stoll(s, &used);
      if (used == s.size()) return r;
    } catch (const std::exception&) {
    }
  }
  throw InputError(what + " must be an integer");
}

std::string json_string(const Json& v, const std::string& what) {
  if (!v.is_string()) throw InputError(what + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> json_strings(const Json& v, const std::string& what) {
  if (!v.is_array()) throw InputError(what + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(json_string(e, what));
  return out;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      throw InputError("unknown key '" + key + "' in " + where);
    }
  }
}

Problem load_problem(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot read problem file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("problem file must hold a JSON object");
  reject_unknown(doc, {"variables", "space", "f", "g", "strata", "seed", "samples", "bound"},
                 "problem file");
  Problem p;
  if (!doc.contains("variables")) throw InputError("problem file needs 'variables'");
  p.variables = json_strings(doc["variables"], "variables");
  if (p.variables.empty()) throw InputError("'variables' must not be empty");
  if (p.variables.size() > 30) throw InputError("at most 30 variables are supported");
  std::set<std::string> seen;
  for (const auto& v : p.variables) {
    if (!germ::is_valid_variable_name(v)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
  if (doc.contains("space")) {
    const Json& space = doc["space"];
    if (!space.is_object()) throw InputError("'space' must be an object");
    reject_unknown(space, {"ideal", "dim"}, "space");
    if (!space.contains("ideal") || !space.contains("dim")) {
      throw InputError("'space' needs 'ideal' and 'dim'");
    }
    p.space_ideal = json_strings(space["ideal"], "space.ideal");
    p.space_dim = static_cast<int>(json_i64(space["dim"], "space.dim"));
  }
  if (doc.contains("f")) p.f = json_string(doc["f"], "f");
  if (doc.contains("g")) p.g = json_string(doc["g"], "g");
  if (doc.contains("strata")) {
    if (!doc["strata"].is_array()) throw InputError("'strata' must be a list");
    std::vector<Stratum> strata;
    for (const auto& s : doc["strata"]) {
      if (!s.is_object()) throw InputError("each stratum must be an object");
      reject_unknown(s, {"name", "ideal", "dim", "chi_complex_link"}, "stratum");
      if (!s.contains("ideal") || !s.contains("dim") || !s.contains("chi_complex_link")) {
        throw InputError("each stratum needs 'ideal', 'dim' and 'chi_complex_link'");
      }
      Stratum st;
      st.name = s.contains("name") ? json_string(s["name"], "stratum name")
                                   : "V" + std::to_string(strata.size());
      st.ideal = json_strings(s["ideal"], "stratum ideal");
      st.dim = static_cast<int>(json_i64(s["dim"], "stratum dim"));
      st.chi = json_i64(s["chi_complex_link"], "chi_complex_link");
      strata.push_back(std::move(st));
    }
    p.strata = std::move(strata);
  }
  if (doc.contains("seed")) p.seed = json_u64(doc["seed"], "seed");
  if (doc.contains("samples")) p.samples = static_cast<int>(json_i64(doc["samples"], "samples"));
  if (doc.contains("bound")) p.bound = json_u64(doc["bound"], "bound");
  return p;
}

GenericityConfig resolve_config(const Options& opt, const Problem& p) {
  GenericityConfig cfg;
  if (opt.seed) {
    cfg.seed = *opt.seed;
  } else if (p.seed) {
    cfg.seed = *p.seed;
  } else if (const char* env = std::getenv(kSeedVariable); env != nullptr && *env != '\0') {
    cfg.seed = parse_u64(env, kSeedVariable);
  }
  cfg.samples = opt.samples.value_or(p.samples.value_or(cfg.samples));
  cfg.coefficient_bound = opt.bound.value_or(p.bound.value_or(cfg.coefficient_bound));
  if (cfg.samples < 1) throw InputError("samples must be at least 1");
  if (cfg.coefficient_bound < 1) throw InputError("bound must be at least 1");
  return cfg;
}

/// Parsed problem in the local ring.
class Context {
 public:
  Context(const Options& opt, Problem problem)
      : opt_(opt), problem_(std::move(problem)), cfg_(resolve_config(opt_, problem_)) {}

  const std::vector<std::string>& names() const { return problem_.variables; }
  std::size_t n() const { return problem_.variables.size(); }
  const GenericityConfig& cfg() const { return cfg_; }
  const Problem& problem() const { return problem_; }

  Polynomial parse(const std::string& text) const {
    return germ::parse_polynomial(text, names(), kLocal);
  }
  std::string show(const Polynomial& p) const {
    return p.with_order(germ::MonomialOrder::global()).to_string(names());
  }

  std::vector<Polynomial> parse_all(const std::vector<std::string>& texts) const {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse(t));
    return out;
  }

  GermVariety space() const {
    if (!problem_.space_ideal) return GermVariety::affine_space(n());
    return GermVariety(n(), germ::Ideal(n(), parse_all(*problem_.space_ideal)), *problem_.space_dim);
  }

  Polynomial f() const {
    if (!problem_.f) throw InputError("command '" + opt_.command + "' needs 'f' in the problem file");
    return parse(*problem_.f);
  }
  std::optional<Polynomial> g() const {
    if (problem_.g) return parse(*problem_.g);
    return std::nullopt;
  }
  std::optional<Polynomial> pinned() const {
    if (opt_.linear_form.empty()) return std::nullopt;
    const Polynomial l = parse(opt_.linear_form);
    germ::LinearForm::from_polynomial(l);
    return l;
  }
  /// g for the verifiers: a pinned form overrides the problem file.
  std::pair<std::optional<Polynomial>, bool> second_function() const {
    if (auto l = pinned()) return {l, true};
    return {g(), false};
  }

  Json echo() const {
    Json in;
    in["variables"] = problem_.variables;
    if (problem_.space_ideal) {
      Json ideal = Json::array();
      for (const auto& p : parse_all(*problem_.space_ideal)) ideal.push_back(show(p));
      in["space"] = {{"ideal", ideal}, {"dim", std::to_string(*problem_.space_dim)}};
    }
    if (problem_.f) in["f"] = show(parse(*problem_.f));
    if (problem_.g) in["g"] = show(parse(*problem_.g));
    if (problem_.strata) {
      Json strata = Json::array();
      for (const auto& s : *problem_.strata) {
        Json ideal = Json::array();
        for (const auto& p : parse_all(s.ideal)) ideal.push_back(show(p));
        strata.push_back({{"name", s.name},
                          {"ideal", ideal},
                          {"dim", std::to_string(s.dim)},
                          {"chi_complex_link", std::to_string(s.chi)}});
      }
      in["strata"] = strata;
    }
    if (!opt_.linear_form.empty()) in["linear_form"] = show(parse(opt_.linear_form));
    return in;
  }

 private:
  Options opt_;
  Problem problem_;
  GenericityConfig cfg_;
};

Json certification_json(const Context& ctx, const germ::Certification& c) {
  Json samples = Json::array();
  for (const auto& s : c.samples) {
    Json forms = Json::array();
    for (const auto& f : s.forms) forms.push_back(ctx.show(f));
    Json values = Json::array();
    for (auto v : s.values) values.push_back(std::to_string(v));
    samples.push_back({{"sample", std::to_string(s.sample)}, {"forms", forms}, {"values", values}});
  }
  return {{"label", c.label}, {"rounds", std::to_string(c.rounds)}, {"samples", samples}};
}

/// Redraw rounds beyond the first, summed over certifications.
std::uint64_t redraws(const std::vector<germ::Certification>& certs) {
  std::uint64_t total = 0;
  for (const auto& c : certs) total += c.rounds > 1 ? c.rounds - 1 : 0;
  return total;
}

struct Outcome {
  Json body = Json::object();
  std::vector<germ::Certification> certifications;
  std::optional<bool> pass;
};

Json levels_json(const std::vector<std::int64_t>& levels) {
  Json out = Json::array();
  for (auto v : levels) out.push_back(std::to_string(v));
  return out;
}

Outcome report_outcome(const germ::VerificationReport& r) {
  Outcome o;
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back({{"label", t.label}, {"value", std::to_string(t.value)}});
  o.body["report"] = {{"identity", r.identity},
                      {"lhs", std::to_string(r.lhs)},
                      {"rhs", std::to_string(r.rhs)},
                      {"pass", r.pass},
                      {"terms", terms},
                      {"notes", r.notes}};
  o.certifications = r.certifications;
  o.pass = r.pass;
  return o;
}

std::int64_t require_finite(const germ::InvariantValue& v, const std::string& what) {
  if (v.is_infinite()) throw germ::PreconditionError(what + " is infinite");
  return v.value();
}

Outcome dispatch(const Options& opt, const Context& ctx) {
  Outcome o;
  const std::string& cmd = opt.command;
  if (cmd == "milnor") {
    const Polynomial f = ctx.f();
    const auto mu = germ::milnor_hypersurface(f);
    o.body["value"] = std::to_string(require_finite(
        mu, "Jacobian quotient O/(df) (non-isolated critical point of " + ctx.show(f) + ")"));
  } else if (cmd == "icis") {
    std::vector<Polynomial> tuple = ctx.space().defining().generators();
    if (ctx.problem().f) tuple.push_back(ctx.f());
    if (tuple.empty()) throw InputError("icis needs equations in 'space' or 'f'");
    o.body["value"] = std::to_string(germ::milnor_icis(tuple).value());
  } else if (cmd == "imult") {
    const GermVariety x = ctx.space();
    const auto v = germ::intersection_multiplicity(x.defining(), ctx.f());
    o.body["value"] = std::to_string(require_finite(v, "intersection multiplicity (f vanishes on a branch)"));
  } else if (cmd == "polar") {
    const GermVariety x = ctx.space();
    const Polynomial f = ctx.f();
    auto g = ctx.second_function().first;
    if (!g) g = germ::generic_linear(ctx.cfg(), ctx.n(), 1).front().to_polynomial();
    const germ::Ideal gamma = germ::standard_basis(germ::polar_ideal(x, f, *g));
    Json gens = Json::array();
    for (const auto& p : gamma.generators()) gens.push_back(ctx.show(p));
    const int dim = germ::leading_ideal_krull_dim(gamma);
    const auto meet = germ::local_quotient_dim(gamma.plus(f));
    o.body["value"] = {{"g", ctx.show(*g)},
                       {"ideal", gens},
                       {"dim", std::to_string(dim)},
                       {"intersection_with_f", meet.to_string()}};
  } else if (cmd == "eu") {
    const auto r = germ::euler_obstruction_details(ctx.space(), ctx.cfg(), ctx.pinned());
    o.body["value"] = std::to_string(r.value);
    o.body["levels"] = levels_json(r.intersections);
    o.certifications = {r.certification};
  } else if (cmd == "brasselet") {
    const auto r = germ::brasselet(ctx.space(), ctx.f(), ctx.cfg(), ctx.pinned());
    o.body["value"] = std::to_string(r.value);
    o.body["levels"] = levels_json(r.intersections);
    o.certifications = {r.certification};
  } else if (cmd == "eu-f") {
    const auto r = germ::euler_obstruction_of_function(ctx.space(), ctx.f(), ctx.cfg(), ctx.pinned());
    o.body["value"] = std::to_string(r.value);
    o.body["n_reg"] = std::to_string(r.n_reg);
    o.body["euler_obstruction"] = std::to_string(r.euler.value);
    o.body["brasselet"] = std::to_string(r.brasselet.value);
    o.certifications = {r.euler.certification, r.brasselet.certification};
  } else if (cmd == "chi") {
    const auto r = germ::chi_milnor_fibre_isolated(ctx.space(), ctx.f(), ctx.cfg(), ctx.pinned());
    o.body["value"] = std::to_string(r.value);
    o.body["levels"] = levels_json(r.brasselet.intersections);
    if (r.icis_value) o.body["icis_value"] = std::to_string(*r.icis_value);
    o.certifications = {r.brasselet.certification};
  } else if (cmd == "verify") {
    const auto [g, pinned] = ctx.second_function();
    if (opt.target == "legreuel") {
      o = report_outcome(germ::verify_le_greuel(ctx.space(), ctx.f(), g, ctx.cfg(), pinned));
    } else if (opt.target == "teissier") {
      if (ctx.problem().space_ideal) throw InputError("teissier works on C^N; drop 'space'");
      o = report_outcome(germ::verify_teissier_smooth(ctx.f(), ctx.cfg(), ctx.pinned()));
    } else if (opt.target == "intnumb") {
      o = report_outcome(germ::verify_int_numb_isolated(ctx.space(), ctx.f(), g, ctx.cfg(), pinned));
    } else {
      if (!ctx.problem().strata) throw InputError("stratified needs 'strata' in the problem file");
      std::vector<germ::StratumDatum> strata;
      for (const auto& s : *ctx.problem().strata) {
        try {
          strata.push_back({s.name, GermVariety(ctx.n(), germ::Ideal(ctx.n(), ctx.parse_all(s.ideal)), s.dim), s.chi});
        } catch (const germ::PreconditionError& e) {
          throw germ::PreconditionError("stratum " + s.name + ": " + e.what());
        }
      }
      o = report_outcome(germ::evaluate_stratified_chi(strata, ctx.f(), g, ctx.cfg(), pinned));
    }
  }
  return o;
}

std::string error_kind(int code) {
  switch (code) {
    case kInputError: return "input";
    case kPrecondition: return "precondition";
    case kGenericity: return "genericity";
    default: return "inconsistency";
  }
}

void print_text(std::ostream& out, const Json& doc, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      print_text(out, value, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ":\n";
      for (const auto& e : value) {
        if (e.is_object()) {
          out << indent << "  -\n";
          print_text(out, e, indent + "    ");
        } else {
          out << indent << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit(std::ostream& out, const Options& opt, const Json& doc) {
  if (opt.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    print_text(out, doc);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"germcalc: local invariants of complex analytic germs"};
  app.set_version_flag("--version", "germcalc 1.0");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", opt.input, "problem file (JSON)");
  app.add_option("--seed", opt.seed, "seed for random linear forms");
  app.add_option("--samples", opt.samples, "independent samples per certification");
  app.add_option("--bound", opt.bound, "coefficient bound for random forms");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--linear-form", opt.linear_form, "pin the first linear form of the flag (or g)");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"milnor", "Milnor number of f"},
      {"icis", "Milnor number of the ICIS given by the space equations and f"},
      {"imult", "intersection multiplicity of the space curve with {f = 0}"},
      {"polar", "relative polar curve of (f, g) on the space"},
      {"eu", "local Euler obstruction of the space"},
      {"brasselet", "Brasselet number B_{f,X}(0)"},
      {"eu-f", "Euler obstruction of f and the Morse point count"},
      {"chi", "Euler characteristic of the Milnor fibre of f"}};
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&opt, name = name] { opt.command = name; });
  }
  auto* verify = app.add_subcommand("verify", "check an identity");
  verify->require_subcommand(1);
  for (const char* target : {"legreuel", "teissier", "intnumb", "stratified"}) {
    verify->add_subcommand(target)->callback([&opt, target] {
      opt.command = "verify";
      opt.target = target;
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string name = opt.target.empty() ? opt.command : opt.command + " " + opt.target;
  Json doc;
  doc["command"] = name;
  int code = kOk;
  std::string message;
  try {
    const Context ctx(opt, load_problem(opt.input));
    doc["inputs"] = ctx.echo();
    Outcome o = dispatch(opt, ctx);
    for (const auto& [key, value] : o.body.items()) doc[key] = value;
    Json certs = Json::array();
    for (const auto& c : o.certifications) certs.push_back(certification_json(ctx, c));
    doc["certificates"] = certs;
    doc["seed"] = std::to_string(ctx.cfg().seed);
    doc["samples"] = std::to_string(ctx.cfg().samples);
    doc["bound"] = std::to_string(ctx.cfg().coefficient_bound);
    doc["redraw_rounds"] = std::to_string(redraws(o.certifications));
    if (o.pass && !*o.pass) code = kIdentityFailed;
  } catch (const InputError& e) {
    code = kInputError;
    message = e.what();
  } catch (const germ::ParseError& e) {
    code = kInputError;
    message = std::string("parse error: ") + e.what();
  } catch (const germ::UsageError& e) {
    code = kInputError;
    message = e.what();
  } catch (const germ::PreconditionError& e) {
    code = kPrecondition;
    message = e.what();
  } catch (const germ::GenericityError& e) {
    code = kGenericity;
    message = std::string("genericity certification failed: ") + e.what();
  } catch (const germ::InconsistencyError& e) {
    code = kIdentityFailed;
    message = std::string("inconsistent computation: ") + e.what();
  }
  if (!message.empty()) {
    err << "germcalc: " << message << "\n";
    doc["error"] = {{"kind", error_kind(code)}, {"message", message}};
  }
  emit(out, opt, doc);
  return code;
}

}  // namespace germcalc
