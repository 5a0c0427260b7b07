#include <catch2/catch_amalgamated.hpp>

#include "semiinv/action.hpp"
#include "semiinv/graded_basis.hpp"
#include "semiinv/molien.hpp"
#include "support/fixtures.hpp"
#include "support/test_gen.hpp"

using namespace semiinv;
using namespace semiinv::testing;

namespace {

// Independent oracle 1: rank of the twisted averaging operator on the
// monomial basis of degree-d p-forms.
long projection_rank(const ReflectionGroup& g, const Character& chi, int p, int d) {
  GradedFormBasis basis(g.dim(), g.conductor(), p, d);
  EchelonSpan span(g.conductor());
  long rank = 0;
  for (int s = 0; s < basis.size(); ++s) {
    DiffForm proj = reynolds_project(g, chi, basis.basis_form(s));
    if (proj.is_zero()) continue;
    if (span.add(basis.vectorize(proj)) >= 0) ++rank;
  }
  return rank;
}

// Independent oracle 2: the character average with traces taken by explicit
// action on the monomial/multiindex basis.
long explicit_trace_dim(const ReflectionGroup& g, const Character& chi, int p, int d) {
  GradedFormBasis basis(g.dim(), g.conductor(), p, d);
  CycNum acc = CycNum::zero(g.conductor());
  for (int j = 0; j < g.size(); ++j) {
    PullbackCache pull(g.matrix(j));
    CycNum tr = CycNum::zero(g.conductor());
    for (int s = 0; s < basis.size(); ++s) {
      DiffForm img = pull(basis.basis_form(s));
      auto v = basis.vectorize(img);
      tr += v[static_cast<std::size_t>(s)];
    }
    acc += chi.value(j) * tr;
  }
  if (!acc.is_rational()) throw math_error("trace average not rational");
  Rat q = acc.rational_value() / Rat(g.size());
  REQUIRE(denominator(q) == 1);
  return q.convert_to<long>();
}

}  // namespace

TEST_CASE("constants are the trivial isotypic piece in degree zero") {
  for (const ReflectionGroup* g : {&b2(), &s2(), &z6()}) {
    MolienTable t(*g);
    CHECK(t.isotypic_dim(Character::trivial(*g), 0, 0) == 1);
  }
  CHECK(MolienTable(b2()).isotypic_dim(Character::det_power(b2(), 1), 1, 0) == 0);
  // S2 does have a constant sign-invariant 1-form (dx - dy)
  CHECK(MolienTable(s2()).isotypic_dim(Character::det_power(s2(), 1), 1, 0) == 1);
  CHECK(MolienTable(z6()).isotypic_dim(Character::det_power(z6(), 1), 1, 0) == 0);
}

TEST_CASE("B2 det-isotypic polynomial series") {
  MolienTable t(b2());
  Character chi = Character::det_power(b2(), 1);
  auto dims = t.isotypic_series(chi, 0, 12);
  // t^4 / ((1-t^2)(1-t^4))
  auto expect = shifted_partition_series({2, 4}, 4, 12);
  CHECK(std::vector<long>(dims.begin(), dims.end()) == expect);
}

TEST_CASE("molien agrees with the projection-rank oracle") {
  for (const ReflectionGroup* g : {&b2(), &s2(), &z6()}) {
    MolienTable t(*g);
    long num_chars = std::min<long>(g->size(), 6);
    for (long k = 0; k < num_chars; ++k) {
      Character chi = Character::det_power(*g, k);
      for (int p = 0; p <= g->dim(); ++p) {
        for (int d = 0; d <= 5; ++d) {
          CAPTURE(g->name(), k, p, d);
          CHECK(t.isotypic_dim(chi, p, d) == projection_rank(*g, chi, p, d));
        }
      }
    }
  }
}

TEST_CASE("molien agrees with explicit monomial-action traces") {
  for (const ReflectionGroup* g : {&b2(), &z6()}) {
    MolienTable t(*g);
    for (long k = 0; k < 3; ++k) {
      Character chi = Character::det_power(*g, k);
      for (int p = 0; p <= std::min(2, g->dim()); ++p)
        for (int d = 0; d <= 4; ++d) {
          CAPTURE(g->name(), k, p, d);
          CHECK(t.isotypic_dim(chi, p, d) == explicit_trace_dim(*g, chi, p, d));
        }
    }
  }
}

TEST_CASE("explicit-action trace oracle on the large group at small degree") {
  const ReflectionGroup& g = g26();
  MolienTable t(g);
  Character chi = Character::det_power(g, 3);
  for (int d = 0; d <= 3; ++d) {
    CAPTURE(d);
    CHECK(t.isotypic_dim(chi, 1, d) == explicit_trace_dim(g, chi, 1, d));
  }
}

TEST_CASE("first semiinvariant degrees of the large group") {
  const ReflectionGroup& g = g26();
  MolienTable t(g);
  // deg Q_{det^3} = 9 and it is the lowest det^3-invariant polynomial
  Character chi3 = Character::det_power(g, 3);
  auto s = t.isotypic_series(chi3, 0, 9);
  for (int d = 0; d < 9; ++d) CHECK(s[static_cast<std::size_t>(d)] == 0);
  CHECK(s[9] == 1);
  // invariants appear in degrees 6, 12, 18 with the free-algebra counts
  auto inv = t.isotypic_series(Character::trivial(g), 0, 18);
  auto expect = shifted_partition_series({6, 12, 18}, 0, 18);
  CHECK(std::vector<long>(inv.begin(), inv.end()) == expect);
}

TEST_CASE("reynolds projection basics") {
  const ReflectionGroup& g = b2();
  Character chi = Character::det_power(g, 1);
  // projecting dx1 with chi = det gives 0 (the degree-0 piece is empty)
  DiffForm dx1 = DiffForm::basis_covector(2, 4, 0);
  CHECK(reynolds_project(g, chi, dx1).is_zero());
  // idempotence on a chi-invariant form: x dy - y dx
  MPoly x = MPoly::variable(2, 4, 0), y = MPoly::variable(2, 4, 1);
  DiffForm mu = DiffForm::basis_covector(2, 4, 1) * x - DiffForm::basis_covector(2, 4, 0) * y;
  GeneratorAction act(g);
  REQUIRE(act.is_semiinvariant(mu, chi));
  CHECK(reynolds_project(g, chi, mu) == mu);
  // projections land in the isotypic component
  auto& eng = rng(401);
  for (int t = 0; t < 10; ++t) {
    DiffForm w = random_homogeneous_form(eng, 2, 4, 1, 3);
    DiffForm proj = reynolds_project(g, chi, w);
    CHECK(act.is_semiinvariant(proj, chi));
    CHECK(reynolds_project(g, chi, proj) == proj);
  }
}

TEST_CASE("projections of the lowest-degree monomials span the semiinvariant") {
  // Stanley: the lowest graded piece of the det-isotypic polynomials of B2
  // is one-dimensional, spanned by a degree-4 polynomial
  const ReflectionGroup& g = b2();
  Character chi = Character::det_power(g, 1);
  EchelonSpan span(4);
  MPoly q(2, 4);
  for (const Expo& e : monomials_of_degree(2, 4)) {
    MPoly proj = reynolds_project(g, chi, MPoly::monomial(2, 4, e, CycNum::one(4)));
    if (proj.is_zero()) continue;
    std::vector<CycNum> v;
    for (const Expo& e2 : monomials_of_degree(2, 4)) v.push_back(proj.coeff(e2));
    if (span.add(v) >= 0) q = proj;
  }
  CHECK(span.dim() == 1);
  // the span is x y (x - y) (x + y) up to scalar
  MPoly x = MPoly::variable(2, 4, 0), y = MPoly::variable(2, 4, 1);
  MPoly expect = x * y * (x - y) * (x + y);
  CHECK(eq_up_to_scalar(q, expect).has_value());
}
