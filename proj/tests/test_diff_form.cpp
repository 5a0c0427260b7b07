#include <catch2/catch_amalgamated.hpp>

#include "semiinv/diff_form.hpp"
#include "semiinv/linalg.hpp"
#include "support/test_gen.hpp"

using namespace semiinv;
using namespace semiinv::testing;

namespace {
DiffForm dx(int i, int n = 3, int m = 1) { return DiffForm::basis_covector(n, m, i); }
MPoly var(int i, int n = 3, int m = 1) { return MPoly::variable(n, m, i); }
}  // namespace

TEST_CASE("wedge basics") {
  CHECK(wedge(dx(0), dx(1)) == -wedge(dx(1), dx(0)));
  CHECK(wedge(dx(0), dx(0)).is_zero());
  // x dy wedge y dx = -xy dx^dy
  DiffForm a = dx(1) * var(0), b = dx(0) * var(1);
  DiffForm w = wedge(a, b);
  REQUIRE(w.form_degree() == 2);
  CHECK(w.comp({0, 1}) == -(var(0) * var(1)));
  // wedging past the top degree gives the zero form
  DiffForm top = wedge(wedge(dx(0), dx(1)), dx(2));
  CHECK(wedge(top, dx(0)).is_zero());
}

TEST_CASE("graded commutativity and associativity") {
  auto& eng = rng(301);
  for (int t = 0; t < 25; ++t) {
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q + p <= 3; ++q) {
        DiffForm a = random_form(eng, 3, 4, p, 2);
        DiffForm b = random_form(eng, 3, 4, q, 2);
        DiffForm ab = wedge(a, b), ba = wedge(b, a);
        if ((p * q) % 2) CHECK(ab == -ba);
        else CHECK(ab == ba);
      }
    }
    DiffForm a = random_form(eng, 3, 4, 1, 2);
    DiffForm b = random_form(eng, 3, 4, 1, 2);
    DiffForm c = random_form(eng, 3, 4, 1, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("form coefficient degree") {
  DiffForm w(3, 1, 1);
  w.set_comp({1}, var(0) * var(0));
  CHECK(form_coeff_degree(w) == 2);
  w.add_comp({2}, MPoly::constant(3, 1, Rat(1)));
  CHECK(!form_coeff_degree(w).has_value());
}

TEST_CASE("substitution of forms") {
  // top form scales by the determinant (n = 2)
  LinearChange c{2, 4, std::vector<CycNum>(4, CycNum::zero(4))};
  c.at(0, 0) = CycNum(4, Rat(2));
  c.at(0, 1) = CycNum::root_of_unity(4, 1);
  c.at(1, 0) = CycNum(4, Rat(1));
  c.at(1, 1) = CycNum(4, Rat(1));
  CMatrix mm(2, 2, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) mm.at(i, j) = c.at(i, j);
  CycNum delta = det(mm);
  DiffForm vol = DiffForm::volume(2, 4);
  CHECK(substitute(vol, c) == vol * delta);

  auto& eng = rng(302);
  for (int t = 0; t < 15; ++t) {
    DiffForm a = random_form(eng, 2, 4, 1, 2);
    DiffForm b = random_form(eng, 2, 4, 1, 2);
    CHECK(substitute(wedge(a, b), c) == wedge(substitute(a, c), substitute(b, c)));
  }
}

TEST_CASE("exterior derivative") {
  MPoly f = var(0) * var(0) * var(1);  // x^2 y
  DiffForm df = differential(f);
  CHECK(df.comp({0}) == MPoly::constant(3, 1, Rat(2)) * var(0) * var(1));
  CHECK(df.comp({1}) == var(0) * var(0));
  auto& eng = rng(303);
  for (int t = 0; t < 20; ++t) {
    DiffForm w = random_form(eng, 3, 4, 1, 3);
    CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
  }
}

TEST_CASE("truncated substitution agrees with full substitution") {
  auto& eng = rng(304);
  LinearChange c{3, 4, std::vector<CycNum>(9, CycNum::zero(4))};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.at(i, j) = random_cyc(eng, 4, 2);
  c.at(0, 0) += CycNum(4, Rat(1));
  c.at(1, 1) += CycNum(4, Rat(1));
  c.at(2, 2) += CycNum(4, Rat(3));
  for (int t = 0; t < 15; ++t) {
    MPoly f = random_mpoly(eng, 3, 4, 4);
    for (int cap = 1; cap <= 3; ++cap) {
      MPoly full = substitute(f, c);
      MPoly kept(3, 4);
      for (const auto& [e, cc] : full.terms())
        if (e[0] < cap) kept.add_term(e, cc);
      CHECK(substitute_truncated(f, c, 0, cap) == kept);
    }
  }
}

TEST_CASE("volume contraction duality") {
  // dual of vol is the constant top polyvector
  DiffForm vol = DiffForm::volume(3, 1);
  DiffForm dv = hodge_dual(vol);
  CHECK(dv.frame() == DiffForm::Frame::polyvector);
  CHECK(dv.form_degree() == 0);
  CHECK(dv.comp({}) == MPoly::constant(3, 1, Rat(1)));
  // n=2: dual of dx1 is a multiple of d/dx2
  DiffForm one_form = DiffForm::basis_covector(2, 1, 0);
  DiffForm d1 = hodge_dual(one_form);
  CHECK(d1.form_degree() == 1);
  CHECK(!d1.comp({1}).is_zero());
  CHECK(d1.comp({0}).is_zero());
  // double dual is +/- identity
  auto& eng = rng(305);
  for (int n = 1; n <= 3; ++n) {
    for (int p = 0; p <= n; ++p) {
      DiffForm w = random_form(eng, n, 4, p, 2);
      DiffForm dd = hodge_dual(hodge_dual(w));
      int sign = ((p * (n - p)) % 2) ? -1 : 1;
      CHECK(dd == (sign < 0 ? -w : w));
    }
  }
}
