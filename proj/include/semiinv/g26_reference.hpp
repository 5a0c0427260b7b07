#ifndef SEMIINV_G26_REFERENCE_HPP
#define SEMIINV_G26_REFERENCE_HPP

#include "semiinv/diff_form.hpp"

namespace semiinv {

// Reference expressions for the det^3 example of the bundled order-1296
// group (fixture g26.json): the factored Q polynomials and the classical
// generator triple omega_1, omega_2, omega_3.  Everything is built
// structurally over Q(zeta_12) so the fixture file can be regenerated and
// the verification command can compare exactly.

namespace g26 {

inline MPoly var(int i, int power = 1) { return MPoly::variable(3, 12, i, power); }
inline MPoly cst(long v) { return MPoly::constant(3, 12, Rat(v)); }

inline MPoly cube_diff(int i, int j) { return var(i, 3) - var(j, 3); }

// (x^3 - y^3)(x^3 - z^3)(y^3 - z^3)
inline MPoly reference_q_det3() {
  return cube_diff(0, 1) * cube_diff(0, 2) * cube_diff(1, 2);
}

// x^2 y^2 z^2 (x^9 + 3x^6(y^3+z^3) + (y^3+z^3)^3 + 3x^3(y^6 - 7y^3z^3 + T))^2
// with T = z^6 for the homogeneous reading.  One circulating transcription
// of this polynomial has T = x z^6 instead, which breaks homogeneity; the
// verification command reports the comparison for both readings.
inline MPoly reference_q_det4(bool homogeneous_reading) {
  MPoly x = var(0), y = var(1), z = var(2);
  MPoly y3z3 = var(1, 3) + var(2, 3);
  MPoly tail = homogeneous_reading ? var(2, 6) : var(0) * var(2, 6);
  MPoly inner = var(0, 9) + cst(3) * var(0, 6) * y3z3 + y3z3 * y3z3 * y3z3 +
                cst(3) * var(0, 3) * (var(1, 6) - cst(7) * var(1, 3) * var(2, 3) + tail);
  return x * x * y * y * z * z * inner * inner;
}

// omega_1 = x^2(y^3-z^3)(2x^3-y^3-z^3) dx
//         - y^2(x^3-z^3)(-x^3+2y^3-z^3) dy
//         - z^2(x^3-y^3)(x^3+y^3-2z^3) dz
inline DiffForm reference_omega1() {
  DiffForm w(3, 12, 1);
  w.set_comp({0}, var(0, 2) * cube_diff(1, 2) * (cst(2) * var(0, 3) - var(1, 3) - var(2, 3)));
  w.set_comp({1}, -(var(1, 2) * cube_diff(0, 2) *
                    (-var(0, 3) + cst(2) * var(1, 3) - var(2, 3))));
  w.set_comp({2}, -(var(2, 2) * cube_diff(0, 1) *
                    (var(0, 3) + var(1, 3) - cst(2) * var(2, 3))));
  return w;
}

// omega_2 = Q_{det^3} * (x^2(x^3-5y^3-5z^3) dx + y^2(-5x^3+y^3-5z^3) dy
//                        + z^2(-5x^3-5y^3+z^3) dz)
inline DiffForm reference_omega2() {
  MPoly q3 = reference_q_det3();
  DiffForm w(3, 12, 1);
  w.set_comp({0}, q3 * var(0, 2) * (var(0, 3) - cst(5) * var(1, 3) - cst(5) * var(2, 3)));
  w.set_comp({1}, q3 * var(1, 2) * (-cst(5) * var(0, 3) + var(1, 3) - cst(5) * var(2, 3)));
  w.set_comp({2}, q3 * var(2, 2) * (-cst(5) * var(0, 3) - cst(5) * var(1, 3) + var(2, 3)));
  return w;
}

// omega_3 = Q_{det^3} * (x^2 P_x dx + y^2 P_y dy + z^2 P_z dz) with the
// degree-9 bracket polynomials below.
inline DiffForm reference_omega3() {
  MPoly q3 = reference_q_det3();
  MPoly px = var(0, 9) + cst(3) * var(1, 9) + cst(61) * var(1, 6) * var(2, 3) +
             cst(61) * var(1, 3) * var(2, 6) + cst(3) * var(2, 9) +
             cst(9) * var(0, 6) * (var(1, 3) + var(2, 3)) +
             var(0, 3) * (-cst(13) * var(1, 6) + cst(122) * var(1, 3) * var(2, 3) -
                          cst(13) * var(2, 6));
  MPoly py = cst(3) * var(0, 9) + var(1, 9) + cst(9) * var(1, 6) * var(2, 3) -
             cst(13) * var(1, 3) * var(2, 6) + cst(3) * var(2, 9) +
             var(0, 6) * (-cst(13) * var(1, 3) + cst(61) * var(2, 3)) +
             var(0, 3) * (cst(9) * var(1, 6) + cst(122) * var(1, 3) * var(2, 3) +
                          cst(61) * var(2, 6));
  MPoly pz = cst(3) * var(0, 9) + cst(3) * var(1, 9) - cst(13) * var(1, 6) * var(2, 3) +
             cst(9) * var(1, 3) * var(2, 6) + var(2, 9) +
             var(0, 6) * (cst(61) * var(1, 3) - cst(13) * var(2, 3)) +
             var(0, 3) * (cst(61) * var(1, 6) + cst(122) * var(1, 3) * var(2, 3) +
                          cst(9) * var(2, 6));
  DiffForm w(3, 12, 1);
  w.set_comp({0}, q3 * var(0, 2) * px);
  w.set_comp({1}, q3 * var(1, 2) * py);
  w.set_comp({2}, q3 * var(2, 2) * pz);
  return w;
}

inline std::vector<DiffForm> reference_forms() {
  return {reference_omega1(), reference_omega2(), reference_omega3()};
}

// The determinant of the coefficient matrix of the reference triple equals
// this scalar times Q_{det^4} Q_{det^3}^2.
inline CycNum reference_witness() { return CycNum(12, Rat(-16)); }

}  // namespace g26

}  // namespace semiinv

#endif
