#include <catch2/catch_amalgamated.hpp>

#include "semiinv/cyclotomic.hpp"
#include "support/test_rng.hpp"

using namespace semiinv;
using semiinv::testing::random_cyc;
using semiinv::testing::random_nonzero_cyc;
using semiinv::testing::rng;

namespace {
CycNum zeta(int m, long k) { return CycNum::root_of_unity(m, k); }
}  // namespace

TEST_CASE("basic roots of unity") {
  // i^2 = -1
  CHECK(zeta(4, 1) * zeta(4, 1) == CycNum(4, Rat(-1)));
  // (2 cos 30deg)^2 = 3
  CycNum s = zeta(12, 1) + zeta(12, -1);
  CHECK(s * s == CycNum(12, Rat(3)));
  // zeta_m^k has inverse zeta_m^{m-k}
  for (int m : {2, 3, 5, 12}) {
    for (int k = 0; k < m; ++k) {
      CHECK(zeta(m, k).inverse() == zeta(m, m - k));
      CHECK(zeta(m, k).pow(m).is_one());
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(zeta(4, 1).conjugate() == -zeta(4, 1));
  CHECK(CycNum(6, Rat(3, 2)).conjugate() == CycNum(6, Rat(3, 2)));
  CHECK((zeta(12, 1) + zeta(12, 5)).conjugate() == zeta(12, -1) + zeta(12, -5));
  auto& eng = rng(101);
  for (int m : {1, 2, 4, 6, 12}) {
    for (int t = 0; t < 25; ++t) {
      CycNum a = random_cyc(eng, m);
      CHECK(a.conjugate().conjugate() == a);
      auto za = a.complex_embed();
      auto zc = a.conjugate().complex_embed();
      CHECK(std::abs(std::conj(za) - zc) < 1e-12);
    }
  }
}

TEST_CASE("complex embedding") {
  auto i = zeta(4, 1).complex_embed();
  CHECK(std::abs(i - std::complex<double>(0.0, 1.0)) < 1e-12);
  auto w = zeta(3, 1).complex_embed();
  CHECK(std::abs(w - std::complex<double>(-0.5, 0.8660254)) < 1e-6);
  auto r = (zeta(12, 1) + zeta(12, -1)).complex_embed();
  CHECK(std::abs(r - std::complex<double>(2.0 * std::cos(3.14159265358979 / 6.0), 0.0)) < 1e-9);
  for (int m : {3, 7, 12}) {
    for (int k = 0; k < m; ++k)
      CHECK(std::abs(std::abs(zeta(m, k).complex_embed()) - 1.0) < 1e-12);
  }
}

TEST_CASE("field axioms on random triples") {
  auto& eng = rng(102);
  for (int m : {1, 4, 5, 12}) {
    for (int t = 0; t < 30; ++t) {
      CycNum a = random_cyc(eng, m), b = random_cyc(eng, m), c = random_cyc(eng, m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(((a + b) - b) == a);
      CycNum d = random_nonzero_cyc(eng, m);
      CHECK((d * d.inverse()).is_one());
      CHECK(a / d * d == a);
    }
  }
}

TEST_CASE("embedding is a ring homomorphism (approximately)") {
  auto& eng = rng(103);
  for (int m : {4, 12}) {
    for (int t = 0; t < 40; ++t) {
      CycNum a = random_cyc(eng, m), b = random_cyc(eng, m);
      auto za = a.complex_embed(), zb = b.complex_embed();
      CHECK(std::abs((a + b).complex_embed() - (za + zb)) < 1e-9);
      CHECK(std::abs((a * b).complex_embed() - (za * zb)) < 1e-9);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(CycNum::zero(6).inverse(), math_error);
  CHECK_THROWS_AS(zeta(4, 1) + zeta(6, 1), input_error);
  CHECK_THROWS_AS(zeta(4, 1) * zeta(12, 1), input_error);
}

TEST_CASE("rational detection and root-of-unity order") {
  CHECK(CycNum(12, Rat(7, 3)).is_rational());
  CHECK(!zeta(12, 1).is_rational());
  CHECK(zeta(12, 1).root_of_unity_order() == 12);
  CHECK(zeta(12, 4).root_of_unity_order() == 3);
  CHECK(CycNum(12, Rat(-1)).root_of_unity_order() == 2);
  CHECK(CycNum(12, Rat(2)).root_of_unity_order(64) == 0);
}

TEST_CASE("reduced representation is canonical") {
  // zeta_12^6 = -1 as a raw vector gets folded to the rational -1
  std::vector<Rat> raw(12, Rat(0));
  raw[6] = 1;
  CycNum v(12, raw);
  CHECK(v == CycNum(12, Rat(-1)));
  CHECK(v.coeffs()[6] == 0);
  // phi(12) = 4: all coords above index 3 are zero after reduction
  auto& eng = rng(104);
  for (int t = 0; t < 20; ++t) {
    CycNum a = random_cyc(eng, 12, 6);
    for (int i = 4; i < 12; ++i) CHECK(a.coeffs()[i] == 0);
  }
}
