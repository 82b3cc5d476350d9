#include <random>

#include "doctest.h"
#include "germ/error.hpp"
#include "germ/invariants.hpp"
#include "germ/standard_basis.hpp"
#include "test_util.hpp"

using namespace germ;
using germ::test::I;
using germ::test::P;
using germ::test::unimodular_change;
using germ::test::xy;
using germ::test::xyz;

namespace {

Polynomial L(const std::string& s, const std::vector<std::string>& vars) {
  return P(s, vars, MonomialOrder::local());
}

const std::vector<std::string>& x1() {
  static const std::vector<std::string> v{"x"};
  return v;
}

GermVariety cone() { return GermVariety(3, I({"x*y - z^2"}, xyz()), 2); }
GermVariety quadric() { return GermVariety(3, I({"x^2 + y^2 + z^2"}, xyz()), 2); }
GermVariety cusp() { return GermVariety(2, I({"y^2 - x^3"}, xy()), 1); }

GenericityConfig seeded(std::uint64_t seed) {
  GenericityConfig cfg;
  cfg.seed = seed;
  return cfg;
}

std::int64_t finite(const InvariantValue& v) {
  REQUIRE(v.is_finite());
  return v.value();
}

Polynomial brieskorn(const std::vector<unsigned>& a) {
  const std::size_t n = a.size();
  Polynomial f(n, MonomialOrder::local());
  for (std::size_t i = 0; i < n; ++i) f += Polynomial::variable(n, i, MonomialOrder::local()).pow(a[i]);
  return f;
}

GermVariety transform(const GermVariety& x, const std::vector<Polynomial>& images) {
  std::vector<Polynomial> gens;
  for (const auto& g : x.defining().generators()) gens.push_back(g.substitute(images));
  return GermVariety(x.ambient(), Ideal(x.ambient(), gens), x.dim());
}

}  // namespace

TEST_CASE("milnor number examples") {
  CHECK(finite(milnor_hypersurface(L("x^2 + y^2", xy()))) == 1);
  CHECK(finite(milnor_hypersurface(L("x^3 + y^2", xy()))) == 2);
  CHECK(finite(milnor_hypersurface(L("x^3 + y^3 + z^3", xyz()))) == 8);
  CHECK(milnor_hypersurface(L("x^2*y", xy())).is_infinite());
  CHECK(finite(milnor_hypersurface(L("x + y^2", xy()))) == 0);
  CHECK_THROWS_AS(milnor_hypersurface(L("1 + x^2", xy())), PreconditionError);
}

TEST_CASE("milnor number of an ICIS") {
  CHECK(finite(milnor_icis({L("x*y - z^2", xyz()), L("x + y", xyz())})) == 1);
  CHECK(finite(milnor_icis({L("x", x1())})) == 0);
  CHECK(finite(milnor_icis({L("x^2 + y^2 + z^2", xyz()), L("x", xyz())})) == 1);
  // Zero-dimensional ICIS: μ = dim O/(F) - 1.
  CHECK(finite(milnor_icis({L("x^2", x1())})) == 1);
  CHECK(finite(milnor_icis({L("x^2 + y^3", xy()), L("y", xy())})) == 1);
  CHECK_THROWS_AS(milnor_icis({L("x^2*y", xy()), L("y", xy())}), PreconditionError);
  CHECK_THROWS_AS(milnor_icis({L("x", xy()), L("2*x", xy())}), PreconditionError);
}

TEST_CASE("intersection multiplicity examples") {
  CHECK(finite(intersection_multiplicity(I({"y"}, xy()), L("x", xy()))) == 1);
  CHECK(finite(intersection_multiplicity(I({"6*x^2 - 4*y"}, xy()), L("x^3 + y^2", xy()))) == 3);
  CHECK(finite(intersection_multiplicity(I({"y^2 - x^3"}, xy()), L("5*x - 7*y", xy()))) == 2);
  CHECK(finite(intersection_multiplicity(Ideal::unit(2), L("x", xy()))) == 0);
  CHECK(intersection_multiplicity(I({"y"}, xy()), L("y", xy())).is_infinite());
  CHECK_THROWS_AS(intersection_multiplicity(I({"x", "y"}, xy()), L("x", xy())), PreconditionError);
}

TEST_CASE("brasselet number examples") {
  const GenericityConfig cfg;
  const auto b = brasselet(GermVariety::affine_space(2), L("x^3 + y^2", xy()), cfg);
  CHECK(b.value == -1);
  CHECK(b.intersections == std::vector<std::int64_t>{3, 2});
  CHECK(b.certification.samples.size() == 3);

  const auto c = brasselet(cone(), L("3*x - 5*y + 7*z", xyz()), cfg);
  CHECK(c.value == 0);
  CHECK(c.intersections == std::vector<std::int64_t>{2, 2});

  CHECK(brasselet_number(GermVariety::affine_space(3), L("2*x + y - z", xyz()), cfg) == 1);
  CHECK(brasselet_number(GermVariety(3, I({"x", "y", "z"}, xyz()), 0), L("x", xyz()), cfg) == 0);
  CHECK_THROWS_AS(brasselet(GermVariety::affine_space(2), L("x^2*y", xy()), cfg), PreconditionError);
}

TEST_CASE("euler obstruction examples") {
  const GenericityConfig cfg;
  for (std::size_t n = 1; n <= 4; ++n) CHECK(euler_obstruction(GermVariety::affine_space(n), cfg) == 1);
  CHECK(euler_obstruction(cusp(), cfg) == 2);
  CHECK(euler_obstruction(GermVariety(2, I({"y^2 - x^5"}, xy()), 1), cfg) == 2);
  CHECK(euler_obstruction(cone(), cfg) == 0);
  CHECK(euler_obstruction(GermVariety(2, I({"x", "y"}, xy()), 0), cfg) == 1);
}

TEST_CASE("euler obstruction of a function examples") {
  const GenericityConfig cfg;
  const auto smooth = euler_obstruction_of_function(GermVariety::affine_space(2),
                                                    L("x^3 + y^2", xy()), cfg);
  CHECK(smooth.value == 2);
  CHECK(smooth.n_reg == 2);
  const auto c = euler_obstruction_of_function(cone(), L("3*x - 5*y + 7*z", xyz()), cfg);
  CHECK(c.value == 0);
  CHECK(c.n_reg == 0);
}

TEST_CASE("milnor fibre euler characteristic examples") {
  const GenericityConfig cfg;
  const auto smooth = chi_milnor_fibre_isolated(GermVariety::affine_space(2), L("x^3 + y^2", xy()), cfg);
  CHECK(smooth.value == -1);
  REQUIRE(smooth.icis_value.has_value());
  CHECK(*smooth.icis_value == -1);
  const auto c = chi_milnor_fibre_isolated(cone(), L("3*x - 5*y + 7*z", xyz()), cfg);
  CHECK(c.value == 0);
  CHECK(chi_milnor_fibre_isolated(GermVariety::affine_space(3), L("x", xyz()), cfg).value == 1);
  // Sing(V(x*y)) in C^3 is the z-axis.
  CHECK_THROWS_AS(chi_milnor_fibre_isolated(GermVariety(3, I({"x*y"}, xyz()), 2), L("z", xyz()), cfg),
                  PreconditionError);
}

TEST_CASE("le greuel examples") {
  const GenericityConfig cfg;
  const auto c = verify_le_greuel(cone(), L("3*x - 5*y + 7*z", xyz()), std::nullopt, cfg);
  CHECK(c.pass);
  CHECK(c.lhs == -2);
  CHECK(c.rhs == -2);
  CHECK_FALSE(c.notes.empty());

  const auto s = verify_le_greuel(GermVariety::affine_space(2), L("x^3 + y^2", xy()), std::nullopt, cfg);
  CHECK(s.pass);
  CHECK(s.lhs == -3);
  CHECK(s.rhs == -3);

  const auto lines = verify_le_greuel(GermVariety::affine_space(3), L("x + 2*y", xyz()), L("y - z", xyz()), cfg);
  CHECK(lines.pass);
  CHECK(lines.lhs == 0);
  CHECK(lines.rhs == 0);

  const auto curve = verify_le_greuel(cusp(), L("2*x - 3*y", xy()), std::nullopt, cfg);
  CHECK(curve.pass);
  CHECK(curve.lhs == 2);
}

TEST_CASE("degenerate pairs and forms are rejected") {
  const GenericityConfig cfg;
  const auto f = L("3*x - 5*y + 7*z", xyz());
  CHECK_THROWS_AS(verify_le_greuel(cone(), f, f, cfg), PreconditionError);
  CHECK_THROWS_AS(verify_int_numb_isolated(cone(), f, f, cfg), PreconditionError);
  CHECK_THROWS_AS(euler_obstruction_details(cone(), cfg, L("x", xyz())), GenericityError);
  CHECK_THROWS_AS(verify_le_greuel(cone(), f, L("x", xyz()), cfg), PreconditionError);
  CHECK_THROWS_AS(verify_le_greuel(cone(), f, L("x", xyz()), cfg, true), GenericityError);
  GenericityConfig none = cfg;
  none.samples = 0;
  CHECK_THROWS_AS(euler_obstruction(cone(), none), UsageError);
}

TEST_CASE("teissier examples") {
  const GenericityConfig cfg;
  const auto cusp_report = verify_teissier_smooth(L("x^3 + y^2", xy()), cfg);
  CHECK(cusp_report.pass);
  CHECK(cusp_report.terms[0].value == 2);
  CHECK(cusp_report.terms[1].value == 1);
  CHECK(cusp_report.rhs == 3);
  const auto morse = verify_teissier_smooth(L("x^2 + y^2 + z^2", xyz()), cfg);
  CHECK(morse.pass);
  CHECK(morse.lhs == 2);
  CHECK_THROWS_AS(verify_teissier_smooth(L("x^2", x1()), cfg), PreconditionError);
}

TEST_CASE("isolated intersection number examples") {
  const GenericityConfig cfg;
  const auto c = verify_int_numb_isolated(cone(), L("3*x - 5*y + 7*z", xyz()), std::nullopt, cfg);
  CHECK(c.pass);
  CHECK(c.lhs == -2);
  const auto s = verify_int_numb_isolated(GermVariety::affine_space(2), L("x^3 + y^2", xy()),
                                          std::nullopt, cfg);
  CHECK(s.pass);
  CHECK(s.lhs == -3);
}

TEST_CASE("icis corollary examples") {
  const GenericityConfig cfg;
  for (const auto& x : {cone(), quadric()}) {
    const auto r = verify_icis_corollary(x, L("3*x - 5*y + 7*z", xyz()), std::nullopt, cfg);
    CHECK(r.pass);
    CHECK(r.terms[0].value == 1);
    CHECK(r.terms[1].value == 1);
    CHECK(r.rhs == 2);
  }
}

TEST_CASE("stratified evaluation examples") {
  const GenericityConfig cfg;
  const auto f = L("3*x - 5*y + 7*z", xyz());
  CHECK(evaluate_stratified_chi({}, f, std::nullopt, cfg).pass);
  CHECK(evaluate_stratified_chi({}, f, std::nullopt, cfg).lhs == 0);
  const std::vector<StratumDatum> strata{
      {"origin", GermVariety(3, I({"x", "y", "z"}, xyz()), 0), 2},
      {"regular", cone(), 0}};
  const auto r = evaluate_stratified_chi(strata, f, std::nullopt, cfg);
  CHECK(r.pass);
  CHECK(r.lhs == -2);
  const auto single = evaluate_stratified_chi({{"regular", cone(), 0}}, f, std::nullopt, cfg);
  const auto chi = chi_milnor_fibre_isolated(cone(), f, cfg);
  CHECK(single.terms[single.terms.size() - 2].value == chi.value);
  CHECK_THROWS_AS(evaluate_stratified_chi({{"regular", cone(), 1}}, f, std::nullopt, cfg),
                  PreconditionError);
}

TEST_CASE("property: brieskorn oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<unsigned> a(n, 2);
    while (true) {
      std::int64_t expected = 1;
      for (unsigned e : a) expected *= e - 1;
      CHECK(finite(milnor_hypersurface(brieskorn(a))) == expected);
      std::size_t k = 0;
      while (k < n && a[k] == 5) a[k++] = 2;
      if (k == n) break;
      ++a[k];
    }
  }
}

TEST_CASE("property: seed stability") {
  const auto f = L("x^3 + y^2", xy());
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto cfg = seeded(seed);
    CHECK(euler_obstruction(cone(), cfg) == 0);
    CHECK(euler_obstruction(cusp(), cfg) == 2);
    CHECK(brasselet_number(GermVariety::affine_space(2), f, cfg) == -1);
    CHECK(verify_le_greuel(cone(), L("x + 2*y - z", xyz()), std::nullopt, cfg).lhs == -2);
    CHECK(verify_teissier_smooth(f, cfg).rhs == 3);
  }
}

TEST_CASE("property: two routes agree on ICIS inputs") {
  const GenericityConfig cfg;
  const auto l = L("3*x - 5*y + 7*z", xyz());
  for (const auto& x : {cone(), quadric()}) {
    std::vector<Polynomial> tuple = x.defining().generators();
    tuple.push_back(l);
    CHECK(brasselet_number(x, l, cfg) == 1 - finite(milnor_icis(tuple)));
  }
  for (const auto& f : {"x^3 + y^2", "x^4 + y^3", "x^2 + y^2"}) {
    const auto p = L(f, xy());
    CHECK(brasselet_number(GermVariety::affine_space(2), p, cfg) == 1 - finite(milnor_icis({p})));
  }
}

TEST_CASE("property: curve euler obstruction equals multiplicity") {
  const GenericityConfig cfg;
  const auto l = L("4*x - 9*y", xy());
  for (const auto& eq : {"y^2 - x^3", "y^2 - x^5", "x*y", "y^3 - x^4", "x*y*(x - y)"}) {
    const GermVariety c(2, I({eq}, xy()), 1);
    const Ideal reduced = saturate(c.defining(), singular_locus_ideal(c));
    CHECK(euler_obstruction(c, cfg) == finite(intersection_multiplicity(reduced, l)));
  }
}

TEST_CASE("property: smooth-case bridge") {
  const GenericityConfig cfg;
  for (const auto& f : {"x^3 + y^2", "x^2 + y^2", "x^4 + y^3", "x^2*y + y^4"}) {
    const auto p = L(f, xy());
    CHECK(brasselet_number(GermVariety::affine_space(2), p, cfg) == 1 - finite(milnor_hypersurface(p)));
  }
  for (const auto& f : {"x^2 + y^2 + z^2", "x^3 + y^3 + z^3"}) {
    const auto p = L(f, xyz());
    CHECK(brasselet_number(GermVariety::affine_space(3), p, cfg) == 1 + finite(milnor_hypersurface(p)));
  }
}

TEST_CASE("property: generic linear forms have zero function obstruction") {
  const GenericityConfig cfg;
  const auto l3 = L("3*x - 5*y + 7*z", xyz());
  const auto l2 = L("4*x - 9*y", xy());
  CHECK(euler_obstruction_of_function(cone(), l3, cfg).value == 0);
  CHECK(euler_obstruction_of_function(quadric(), l3, cfg).value == 0);
  CHECK(euler_obstruction_of_function(cusp(), l2, cfg).value == 0);
  CHECK(euler_obstruction_of_function(GermVariety::affine_space(3), l3, cfg).value == 0);
}

TEST_CASE("property: coordinate invariance") {
  const GenericityConfig cfg;
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 3; ++trial) {
    const auto change = unimodular_change(rng, 3);
    CHECK(euler_obstruction(transform(cone(), change), cfg) == 0);
    const auto f = L("x^3 + y^3 + z^3", xyz()).substitute(change);
    CHECK(finite(milnor_hypersurface(f)) == 8);
    const auto l = L("3*x - 5*y + 7*z", xyz()).substitute(change);
    CHECK(verify_le_greuel(transform(cone(), change), l, std::nullopt, cfg).lhs == -2);
    const auto change2 = unimodular_change(rng, 2);
    CHECK(euler_obstruction(transform(cusp(), change2), cfg) == 2);
  }
}
