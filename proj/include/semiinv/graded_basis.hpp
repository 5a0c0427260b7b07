#ifndef SEMIINV_GRADED_BASIS_HPP
#define SEMIINV_GRADED_BASIS_HPP

#include "semiinv/diff_form.hpp"

namespace semiinv {

// Degree-d exponent vectors in descending graded-lex order.
inline std::vector<Expo> monomials_of_degree(int nvars, int d) {
  std::vector<Expo> out;
  Expo e(nvars, 0);
  struct Rec {
    int nvars;
    std::vector<Expo>& out;
    void run(Expo& e, int pos, int left) {
      if (pos == nvars - 1) {
        e[pos] = left;
        out.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[pos] = k;
        run(e, pos + 1, left - k);
      }
    }
  } rec{nvars, out};
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec.run(e, 0, d);
  return out;
}

// Coordinate system on the degree-d piece of p-forms: slots are
// (monomial, multiindex) pairs in a fixed deterministic order.
class GradedFormBasis {
 public:
  GradedFormBasis(int nvars, int conductor, int p, int d)
      : n_(nvars), m_(conductor), p_(p), d_(d),
        monos_(monomials_of_degree(nvars, d)), indices_(multiindices(nvars, p)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) mono_rank_[monos_[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < indices_.size(); ++i) index_rank_[indices_[i]] = static_cast<int>(i);
  }

  int nvars() const { return n_; }
  int conductor() const { return m_; }
  int form_degree() const { return p_; }
  int coeff_degree() const { return d_; }
  const std::vector<Expo>& monomials() const { return monos_; }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  int size() const { return static_cast<int>(monos_.size() * indices_.size()); }

  int slot(const Expo& e, const MultiIndex& I) const {
    auto it = mono_rank_.find(e);
    auto jt = index_rank_.find(I);
    if (it == mono_rank_.end() || jt == index_rank_.end()) return -1;
    return it->second * static_cast<int>(indices_.size()) + jt->second;
  }

  DiffForm basis_form(int slot_id) const {
    int mi = slot_id / static_cast<int>(indices_.size());
    int ii = slot_id % static_cast<int>(indices_.size());
    DiffForm w(n_, m_, p_);
    w.set_comp(indices_[static_cast<std::size_t>(ii)],
               MPoly::monomial(n_, m_, monos_[static_cast<std::size_t>(mi)], CycNum::one(m_)));
    return w;
  }

  std::vector<CycNum> vectorize(const DiffForm& w) const {
    if (w.nvars() != n_ || w.form_degree() != p_)
      throw input_error("form does not match the graded basis");
    std::vector<CycNum> v(static_cast<std::size_t>(size()), CycNum::zero(m_));
    for (const auto& [I, f] : w.comps()) {
      for (const auto& [e, c] : f.terms()) {
        int s = slot(e, I);
        if (s < 0) throw input_error("form is not homogeneous of the basis degree");
        v[static_cast<std::size_t>(s)] = c;
      }
    }
    return v;
  }

  DiffForm form_of(const std::vector<CycNum>& v) const {
    DiffForm w(n_, m_, p_);
    const int ni = static_cast<int>(indices_.size());
    for (int s = 0; s < size(); ++s) {
      if (v[static_cast<std::size_t>(s)].is_zero()) continue;
      int mi = s / ni, ii = s % ni;
      MPoly piece = MPoly::monomial(n_, m_, monos_[static_cast<std::size_t>(mi)],
                                    v[static_cast<std::size_t>(s)]);
      w.add_comp(indices_[static_cast<std::size_t>(ii)], piece);
    }
    return w;
  }

 private:
  int n_, m_, p_, d_;
  std::vector<Expo> monos_;
  std::vector<MultiIndex> indices_;
  std::map<Expo, int> mono_rank_;
  std::map<MultiIndex, int> index_rank_;
};

}  // namespace semiinv

#endif
