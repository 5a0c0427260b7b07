#ifndef SEMIINV_DERIVATIONS_HPP
#define SEMIINV_DERIVATIONS_HPP

#include "semiinv/semiinv.hpp"

namespace semiinv {

// Contraction against the volume form carries a chi-invariant p-form to a
// (chi*det)-invariant (n-p)-polyvector; applying it twice gives back
// (-1)^{p(n-p)} times the identity.
inline DiffForm derivation_dual(const DiffForm& w) { return hodge_dual(w); }

// Action of g^{-1} on a polyvector, given A = matrix(g): coefficients pull
// back along A while the frame d/dx_i transforms by (A^{-1})^T, which for a
// unitary A is the entrywise conjugate of A.
inline DiffForm polyvector_coaction(const DiffForm& theta, PullbackCache& coeff_pull,
                                    const CMatrix& a) {
  if (theta.frame() != DiffForm::Frame::polyvector)
    throw input_error("polyvector_coaction needs a polyvector");
  const int n = theta.nvars();
  const int p = theta.form_degree();
  CMatrix frame = a;
  for (CycNum& x : frame.a) x = x.conjugate();
  DiffForm out(n, theta.conductor(), p, DiffForm::Frame::polyvector);
  auto targets = multiindices(n, p);
  for (const auto& [I, f] : theta.comps()) {
    MPoly fsub = coeff_pull(f);
    if (fsub.is_zero()) continue;
    for (const auto& J : targets) {
      CMatrix sub(p, p, theta.conductor());
      for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s)
          sub.at(r, s) = frame.at(I[static_cast<std::size_t>(r)], J[static_cast<std::size_t>(s)]);
      CycNum d = det(sub);
      if (!d.is_zero()) out.add_comp(J, fsub * d);
    }
  }
  return out;
}

// chi-invariance for polyvectors, checked on the generators.
inline bool is_semiinvariant_polyvector(SemiInvariantEngine& eng, const DiffForm& theta,
                                        const Character& chi) {
  const ReflectionGroup& g = eng.group();
  for (int j = 0; j < g.num_generators(); ++j) {
    int idx = g.right_by_generator(0, j);
    DiffForm lhs = polyvector_coaction(theta, eng.pullback_of(idx), g.matrix(idx));
    if (lhs != theta * chi.value_inverse(idx)) return false;
  }
  return true;
}

struct PolyvectorSaitoResult {
  bool ok = false;
  std::string reason;
  CycNum witness;
  DiffForm top;
};

// Mirror of the generation criterion on the derivation side: n chi-invariant
// 1-polyvectors generate iff their iterated chi-wedge is a nonzero constant
// multiple of Q_{chi det^{-1}} times the top polyvector (the top polyvector
// is det-invariant where the volume form is det^{-1}-invariant).
inline PolyvectorSaitoResult polyvector_saito(const std::vector<DiffForm>& thetas,
                                              SemiInvariantContext& ctx) {
  PolyvectorSaitoResult res;
  const ReflectionGroup& g = ctx.group();
  const int n = g.dim();
  res.witness = CycNum::zero(g.conductor());
  if (static_cast<int>(thetas.size()) != n) {
    res.reason = "need exactly n 1-polyvectors";
    return res;
  }
  for (const DiffForm& t : thetas)
    if (t.frame() != DiffForm::Frame::polyvector || t.form_degree() != 1) {
      res.reason = "inputs must be 1-polyvectors";
      return res;
    }
  DiffForm acc = thetas[0];
  try {
    for (int i = 1; i < n; ++i) acc = chi_wedge(acc, thetas[static_cast<std::size_t>(i)], ctx);
  } catch (const chi_wedge_error& e) {
    res.reason = e.what();
    return res;
  }
  res.top = acc;
  if (acc.is_zero()) {
    res.reason = "top chi-wedge vanishes";
    return res;
  }
  MultiIndex all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  MPoly q_chi_det_inv = q_poly(g, ctx.chi.times_det(g, -1));
  auto w = eq_up_to_scalar(acc.comp(all), q_chi_det_inv);
  if (!w) {
    res.reason = "top chi-wedge is not a scalar multiple of Q_{chi det^{-1}} d/dx_1^...^d/dx_n";
    return res;
  }
  res.ok = true;
  res.witness = *w;
  return res;
}

}  // namespace semiinv

#endif
