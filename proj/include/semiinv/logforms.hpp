#ifndef SEMIINV_LOGFORMS_HPP
#define SEMIINV_LOGFORMS_HPP

#include "semiinv/semiinv.hpp"

namespace semiinv {

// A hyperplane arrangement with nonnegative integer multiplicities.  For the
// multiarrangement of a character the multiplicity of H is a_H(chi), and the
// defining polynomial is Q_chi.
struct Multiarrangement {
  const ReflectionGroup* group = nullptr;
  std::vector<int> multiplicities;  // aligned with group->arrangement()
  MPoly defining_poly;

  static Multiarrangement of_character(const ReflectionGroup& g, const Character& chi) {
    Multiarrangement ma;
    ma.group = &g;
    ma.defining_poly = MPoly::constant(g.dim(), g.conductor(), Rat(1));
    for (const Hyperplane& h : g.arrangement()) {
      int a = a_H(g, h, chi);
      ma.multiplicities.push_back(a);
      for (int k = 0; k < a; ++k) ma.defining_poly *= h.alpha;
    }
    return ma;
  }

  // the classical arrangement: every hyperplane with multiplicity one
  static Multiarrangement simple(const ReflectionGroup& g) {
    return of_character(g, Character::det_power(g, -1));
  }
};

struct LogFormCheck {
  bool pass = true;
  int hyperplane = -1;     // first failing hyperplane (arrangement index)
  MultiIndex component;    // failing component of omega ^ d alpha_H
  std::string detail;
};

// Membership test for logarithmic forms: omega/Q is logarithmic iff for every
// hyperplane with multiplicity a >= 1 every coefficient of omega ^ d alpha_H
// is exactly divisible by alpha_H^a.
inline LogFormCheck is_logarithmic(const DiffForm& omega, const Multiarrangement& ma) {
  LogFormCheck res;
  const auto& hs = ma.group->arrangement();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    int a = ma.multiplicities[i];
    if (a == 0) continue;
    DiffForm w = wedge(omega, differential(hs[i].alpha));
    for (const auto& [I, f] : w.comps()) {
      MPoly r = f;
      bool ok = true;
      for (int k = 0; k < a && ok; ++k) {
        auto q = exact_divide(r, hs[i].alpha);
        if (!q) ok = false;
        else r = std::move(*q);
      }
      if (!ok) {
        res.pass = false;
        res.hyperplane = static_cast<int>(i);
        res.component = I;
        res.detail = "coefficient of the wedge with d(" + hs[i].alpha.str() +
                     ") is not divisible by alpha^" + std::to_string(a);
        return res;
      }
    }
  }
  return res;
}

struct ClosureCheck {
  bool pass = false;
  std::string reason;
  DiffForm quotient;  // (omega ^ mu) / defining_poly when divisible
};

// The product rule for logarithmic forms: if omega/Q and mu/Q are
// logarithmic then so is their product (omega ^ mu)/Q^2, i.e. the wedge is
// divisible by Q and the quotient is again logarithmic.
inline ClosureCheck closure_product_check(const DiffForm& omega, const DiffForm& mu,
                                          const Multiarrangement& ma) {
  ClosureCheck res;
  if (!is_logarithmic(omega, ma).pass || !is_logarithmic(mu, ma).pass) {
    res.reason = "operand fails the logarithmic membership precondition";
    return res;
  }
  DiffForm w = wedge(omega, mu);
  if (ma.defining_poly.degree() > 0) {
    auto q = exact_divide(w, ma.defining_poly);
    if (!q) {
      res.reason = "wedge product is not divisible by the defining polynomial";
      return res;
    }
    w = std::move(*q);
  }
  auto check = is_logarithmic(w, ma);
  if (!check.pass) {
    res.reason = "quotient fails the logarithmic membership: " + check.detail;
    return res;
  }
  res.pass = true;
  res.quotient = std::move(w);
  return res;
}

}  // namespace semiinv

#endif
