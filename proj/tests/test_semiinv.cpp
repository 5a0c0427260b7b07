#include <catch2/catch_amalgamated.hpp>

#include "semiinv/semiinv.hpp"
#include "support/fixtures.hpp"
#include "support/test_gen.hpp"

using namespace semiinv;
using namespace semiinv::testing;

namespace {
MPoly bx() { return MPoly::variable(2, 4, 0); }
MPoly by() { return MPoly::variable(2, 4, 1); }

SemiInvariantEngine& b2_engine() {
  static SemiInvariantEngine e(b2());
  return e;
}
SemiInvariantEngine& s2_engine() {
  static SemiInvariantEngine e(s2());
  return e;
}
SemiInvariantEngine& z6_engine() {
  static SemiInvariantEngine e(z6());
  return e;
}
}  // namespace

TEST_CASE("Q polynomials of B2") {
  Character det1 = Character::det_power(b2(), 1);
  MPoly q = q_poly(b2(), det1);
  MPoly expect = bx() * by() * (bx() - by()) * (bx() + by());
  CHECK(q == expect);  // all alphas monic, so the product matches exactly
  CHECK(q_poly(b2(), Character::trivial(b2())) == MPoly::constant(2, 4, Rat(1)));
  // cross-check against the Jacobian of explicit invariants
  MPoly f1 = bx() * bx() + by() * by();
  MPoly f2 = bx() * bx() * by() * by();
  auto w = eq_up_to_scalar(jacobian_det({f1, f2}), q);
  REQUIRE(w.has_value());
  CHECK(!w->is_zero());
  // the explicit-table character with Q_chi = xy
  Character table = Character::from_generator_values(
      b2(), {CycNum(4, Rat(-1)), CycNum(4, Rat(1))}, "b2-sign");
  CHECK(q_poly(b2(), table) == bx() * by());
}

TEST_CASE("Q polynomial of the 1296-element group") {
  MPoly x = MPoly::variable(3, 12, 0), y = MPoly::variable(3, 12, 1), z = MPoly::variable(3, 12, 2);
  auto cube = [](MPoly a, MPoly b) { return a * a * a - b * b * b; };
  MPoly q3 = q_poly(g26(), Character::det_power(g26(), 3));
  CHECK(q3 == cube(x, y) * cube(x, z) * cube(y, z));
  // deg Q_{det^k} for k = 0..5
  std::vector<int> expect_deg{0, 33, 12, 9, 24, 21};
  for (long k = 0; k < 6; ++k) {
    MPoly q = q_poly(g26(), Character::det_power(g26(), k));
    CHECK(q.degree() == expect_deg[static_cast<std::size_t>(k)]);
    CHECK(q.is_homogeneous());
  }
}

TEST_CASE("recurrence for a_H under det twists") {
  for (const ReflectionGroup* g : {&b2(), &s2(), &z6()}) {
    for (long k = 0; k < 6; ++k) {
      Character chi = Character::det_power(*g, k);
      for (const auto& h : g->arrangement()) {
        auto r = ah_recurrence_check(*g, h, chi);
        CHECK(r.pass);
        CHECK(r.a_chi_det == r.expected);
      }
    }
  }
  // the cyclic example: chi = det^2 has a = 4, chi det has a = 3
  Character chi2 = Character::det_power(z6(), 2);
  auto r = ah_recurrence_check(z6(), z6().arrangement()[0], chi2);
  CHECK(r.a_chi == 4);
  CHECK(r.a_chi_det == 3);
}

TEST_CASE("group action on forms") {
  const ReflectionGroup& g = b2();
  DiffForm dx1 = DiffForm::basis_covector(2, 4, 0);
  DiffForm dx2 = DiffForm::basis_covector(2, 4, 1);
  // identity acts trivially
  CHECK(group_action(g, 0, dx1) == dx1);
  // s = diag(-1,1): s^{-1} dx1 = -dx1
  int s = -1;
  for (int i = 0; i < g.size(); ++i) {
    CMatrix expect = CMatrix::identity(2, 4);
    expect.at(0, 0) = CycNum(4, Rat(-1));
    if (g.matrix(i) == expect) s = i;
  }
  REQUIRE(s >= 0);
  CHECK(group_action(g, g.inverse_index(s), dx1) == dx1 * CycNum(4, Rat(-1)));
  // swap sends x dy to y dx
  int sw = -1;
  for (int i = 0; i < g.size(); ++i) {
    CMatrix expect(2, 2, 4);
    expect.at(0, 1) = CycNum::one(4);
    expect.at(1, 0) = CycNum::one(4);
    if (g.matrix(i) == expect) sw = i;
  }
  REQUIRE(sw >= 0);
  CHECK(group_action(g, sw, dx2 * bx()) == dx1 * by());
  // the action is a homomorphism
  auto& eng_rng = rng(501);
  DiffForm w = random_form(eng_rng, 2, 4, 1, 2);
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      CHECK(group_action(g, g.compose(i, j), w) ==
            group_action(g, i, group_action(g, j, w)));
}

TEST_CASE("chi-wedge unit and trivial degeneration") {
  SemiInvariantContext ctx = b2_engine().context_det_power(1);
  // Q_chi as a 0-form is the unit
  DiffForm qform = DiffForm::from_zero_form(ctx.q_chi);
  DiffForm mu = DiffForm::basis_covector(2, 4, 1) * bx() - DiffForm::basis_covector(2, 4, 0) * by();
  CHECK(chi_wedge(qform, mu, ctx) == mu);
  CHECK(chi_wedge(mu, qform, ctx) == mu);
  // trivial character: chi-wedge is the plain wedge
  SemiInvariantContext triv = b2_engine().context_det_power(0);
  DiffForm dx1 = DiffForm::basis_covector(2, 4, 0);
  DiffForm dx2 = DiffForm::basis_covector(2, 4, 1);
  CHECK(chi_wedge(dx1, dx2, triv) == wedge(dx1, dx2));
  // non-invariant operands surface a hyperplane diagnostic
  CHECK_THROWS_AS(chi_wedge(dx1, dx2, ctx), chi_wedge_error);
}

TEST_CASE("basic invariants of the small groups") {
  const BasicInvariants& b = b2_engine().basic_invariants();
  CHECK(b.degrees == std::vector<int>{2, 4});
  CHECK(!b.jacobian_witness.is_zero());
  const BasicInvariants& s = s2_engine().basic_invariants();
  CHECK(s.degrees == std::vector<int>{1, 2});
  const BasicInvariants& z = z6_engine().basic_invariants();
  CHECK(z.degrees == std::vector<int>{6});
  CHECK(eq_up_to_scalar(z.fs[0], MPoly::variable(1, 6, 0, 6)).has_value());
  // degree cap failure path
  SemiInvariantEngine fresh(b2());
  CHECK_THROWS_AS(fresh.basic_invariants(1), input_error);
}

TEST_CASE("isotypic basis agrees with the reynolds projection span") {
  for (SemiInvariantEngine* eng : {&b2_engine(), &s2_engine(), &z6_engine()}) {
    const ReflectionGroup& g = eng->group();
    for (long k = 0; k < 3; ++k) {
      Character chi = Character::det_power(g, k);
      for (int p = 0; p <= std::min(2, g.dim()); ++p) {
        eng->restart_image_tables();
        for (int d = 0; d <= 5; ++d) {
          CAPTURE(g.name(), k, p, d);
          GradedFormBasis basis(g.dim(), g.conductor(), p, d);
          EchelonSpan span(g.conductor());
          for (int s = 0; s < basis.size(); ++s) {
            DiffForm proj = reynolds_project(g, chi, basis.basis_form(s));
            if (!proj.is_zero()) span.add(basis.vectorize(proj));
          }
          CHECK(eng->isotypic_basis(chi, p, d) == span.rows());
        }
      }
    }
  }
}

TEST_CASE("generators for the cyclic group") {
  for (long k = 0; k < 6; ++k) {
    SemiInvariantContext ctx = z6_engine().context_det_power(k);
    GeneratorCertificate cert = find_generators(ctx, 12);
    REQUIRE(cert.forms.size() == 1);
    int expect_deg = static_cast<int>((6 - k - 1 + 6) % 6);
    CHECK(cert.degrees == std::vector<int>{expect_deg});
    // the single form is Q_{chi det} dx up to scalar
    MPoly coeff = cert.forms[0].comp({0});
    CHECK(eq_up_to_scalar(coeff, ctx.q_chi_det).has_value());
    CHECK(!cert.witness_scalar.is_zero());
  }
}

TEST_CASE("generators for B2") {
  // trivial character: differentials of the basic invariants generate
  SemiInvariantContext triv = b2_engine().context_det_power(0);
  GeneratorCertificate cert = find_generators(triv, 10);
  CHECK(cert.degrees == std::vector<int>{1, 3});
  // their top wedge is a multiple of Q_det vol = Q_{triv*det} vol
  CHECK(!cert.witness_scalar.is_zero());
  // the span must contain df1, df2
  const BasicInvariants& b = b2_engine().basic_invariants();
  GradedFormBasis basis1(2, 4, 1, 1);
  EchelonSpan span1(4);
  span1.add(basis1.vectorize(cert.forms[0]));
  CHECK(span1.contains(basis1.vectorize(differential(b.fs[0]))));

  // det character
  SemiInvariantContext ctx = b2_engine().context_det_power(1);
  GeneratorCertificate cdet = find_generators(ctx, 10);
  CHECK(cdet.degrees == std::vector<int>{1, 3});
  DiffForm mu = DiffForm::basis_covector(2, 4, 1) * bx() - DiffForm::basis_covector(2, 4, 0) * by();
  GradedFormBasis basisd(2, 4, 1, 1);
  CHECK(eq_up_to_scalar(cdet.forms[0].comp({1}), mu.comp({1})).has_value());

  // the explicit-table character
  Character table = Character::from_generator_values(
      b2(), {CycNum(4, Rat(-1)), CycNum(4, Rat(1))}, "b2-sign");
  SemiInvariantContext tctx = b2_engine().context(table);
  GeneratorCertificate ct = find_generators(tctx, 10);
  CHECK(ct.forms.size() == 2);
  CHECK(!ct.witness_scalar.is_zero());
}

TEST_CASE("saito criterion failure modes") {
  SemiInvariantContext ctx = b2_engine().context_det_power(1);
  GeneratorCertificate cert = find_generators(ctx, 10);
  // repeated form: zero wedge
  SaitoResult bad = saito_check({cert.forms[0], cert.forms[0]}, ctx);
  CHECK(!bad.ok);
  CHECK(bad.reason.find("vanishes") != std::string::npos);
  // non chi-invariant operand
  DiffForm dx1 = DiffForm::basis_covector(2, 4, 0);
  SaitoResult bad2 = saito_check({cert.forms[0], dx1}, ctx);
  CHECK(!bad2.ok);
  // wrong count
  SaitoResult bad3 = saito_check({cert.forms[0]}, ctx);
  CHECK(!bad3.ok);
  // the good case again, via the public entry point
  SaitoResult good = saito_check(cert.forms, ctx);
  CHECK(good.ok);
  CHECK(good.witness == cert.witness_scalar);
}

TEST_CASE("degree cap failure reports progress") {
  SemiInvariantContext ctx = b2_engine().context_det_power(0);
  CHECK_THROWS_AS(find_generators(ctx, 2), input_error);
}

TEST_CASE("lemma: Q_chi divides wedges of semiinvariant forms (small sample)") {
  auto& eng_rng = rng(502);
  SemiInvariantContext ctx = b2_engine().context_det_power(1);
  GeneratorCertificate cert = find_generators(ctx, 10);
  const BasicInvariants& b = b2_engine().basic_invariants();
  for (int t = 0; t < 25; ++t) {
    // random invariant-polynomial combinations of the generators
    DiffForm mu = cert.forms[0] * b.fs[static_cast<std::size_t>(t % 2)] +
                  cert.forms[1] * random_rat(eng_rng);
    DiffForm om = cert.forms[1] * b.fs[0] * random_rat(eng_rng) + cert.forms[0];
    DiffForm w = wedge(mu, om);
    auto q = exact_divide(w, ctx.q_chi);
    REQUIRE(q.has_value());
    CHECK(b2_engine().action().is_semiinvariant(*q, ctx.chi));
  }
}
