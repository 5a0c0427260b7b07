#ifndef SEMIINV_ACTION_HPP
#define SEMIINV_ACTION_HPP

#include "semiinv/character.hpp"
#include "semiinv/diff_form.hpp"
#include "semiinv/parallel.hpp"

namespace semiinv {

// Pullback machinery for one fixed matrix M: f(x) -> f(Mx) on polynomials,
// with dx_I transforming by p-by-p minors of M.  Monomial images of degree
// up to `cache_cap` are memoized; larger monomials are expanded directly
// from cached row powers.
class PullbackCache {
 public:
  explicit PullbackCache(CMatrix mt, int cache_cap = 18)
      : mt_(std::move(mt)), cap_(cache_cap) {
    n_ = mt_.rows;
    m_ = mt_.m;
    rows_.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      MPoly row(n_, m_);
      for (int j = 0; j < n_; ++j)
        if (!mt_.at(i, j).is_zero()) row += MPoly::variable(n_, m_, j) * mt_.at(i, j);
      rows_.push_back(std::move(row));
      powers_.push_back({MPoly::constant(n_, m_, Rat(1))});
    }
  }

  const CMatrix& matrix() const { return mt_; }

  const MPoly& row_power(int i, int k) {
    auto& p = powers_[static_cast<std::size_t>(i)];
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * rows_[static_cast<std::size_t>(i)]);
    return p[static_cast<std::size_t>(k)];
  }

  MPoly monomial_image(const Expo& e) {
    int d = expo_degree(e);
    if (d <= cap_) {
      auto it = memo_.find(e);
      if (it != memo_.end()) return it->second;
    }
    // image(e) = image(e - u_i) * row_i for the first positive exponent
    MPoly img;
    int var = -1;
    for (int i = 0; i < n_; ++i)
      if (e[i] > 0) { var = i; break; }
    if (var < 0) {
      img = MPoly::constant(n_, m_, Rat(1));
    } else if (d <= cap_) {
      Expo prev = e;
      prev[var] -= 1;
      img = monomial_image(prev) * rows_[static_cast<std::size_t>(var)];
    } else {
      img = MPoly::constant(n_, m_, Rat(1));
      for (int i = 0; i < n_; ++i)
        if (e[i] > 0) img *= row_power(i, e[i]);
    }
    if (d <= cap_) memo_.emplace(e, img);
    return img;
  }

  MPoly operator()(const MPoly& f) {
    if (f.nvars() != n_ || f.conductor() != m_) throw input_error("pullback operand mismatch");
    MPoly out(n_, m_);
    for (const auto& [e, c] : f.terms()) out += monomial_image(e) * c;
    return out;
  }

  DiffForm operator()(const DiffForm& w) {
    if (w.frame() != DiffForm::Frame::form)
      throw input_error("pullback acts on differential forms");
    const int p = w.form_degree();
    DiffForm out(w.nvars(), w.conductor(), p);
    auto targets = multiindices(n_, p);
    for (const auto& [I, f] : w.comps()) {
      MPoly fsub = (*this)(f);
      if (fsub.is_zero()) continue;
      for (const auto& J : targets) {
        const CycNum& d = minor(I, J);
        if (!d.is_zero()) out.add_comp(J, fsub * d);
      }
    }
    return out;
  }

  const CycNum& minor(const MultiIndex& I, const MultiIndex& J) {
    auto key = std::make_pair(I, J);
    auto it = minors_.find(key);
    if (it != minors_.end()) return it->second;
    int p = static_cast<int>(I.size());
    CMatrix sub(p, p, m_);
    for (int r = 0; r < p; ++r)
      for (int s = 0; s < p; ++s)
        sub.at(r, s) = mt_.at(I[static_cast<std::size_t>(r)], J[static_cast<std::size_t>(s)]);
    return minors_.emplace(std::move(key), det(sub)).first->second;
  }

  void clear_memo() { memo_.clear(); }

 private:
  CMatrix mt_;
  int cap_;
  int n_ = 0;
  int m_ = 1;
  std::vector<MPoly> rows_;
  std::vector<std::vector<MPoly>> powers_;
  std::map<Expo, MPoly> memo_;
  std::map<std::pair<MultiIndex, MultiIndex>, CycNum> minors_;
};

inline LinearChange linear_change_of(const CMatrix& mt) {
  return LinearChange{mt.rows, mt.m, mt.a};
}

// The contragredient group action on forms: g sends omega to its pullback
// along g^{-1}.  This makes the action a left action and matches the
// semiinvariance convention chi is tested against.
inline DiffForm group_action(const CMatrix& g, const DiffForm& w) {
  return substitute(w, linear_change_of(inverse(g)));
}

inline MPoly group_action(const CMatrix& g, const MPoly& f) {
  return substitute(f, linear_change_of(inverse(g)));
}

inline DiffForm group_action(const ReflectionGroup& g, int i, const DiffForm& w) {
  return substitute(w, linear_change_of(g.matrix(g.inverse_index(i))));
}

// Shared pullback caches for the generator matrices of a group, used by all
// semiinvariance checks.
class GeneratorAction {
 public:
  explicit GeneratorAction(const ReflectionGroup& g, int cache_cap = 18) : g_(&g) {
    for (int j = 0; j < g.num_generators(); ++j) {
      int idx = g.right_by_generator(0, j);
      gen_index_.push_back(idx);
      caches_.emplace_back(g.matrix(idx), cache_cap);
    }
  }

  const ReflectionGroup& group() const { return *g_; }
  int count() const { return static_cast<int>(caches_.size()); }
  int generator_element(int j) const { return gen_index_[static_cast<std::size_t>(j)]; }
  PullbackCache& cache(int j) { return caches_[static_cast<std::size_t>(j)]; }

  // omega is chi-invariant iff pullback(omega, matrix(g)) = chi(g)^{-1} omega
  // for every generator g (word induction extends this to the whole group).
  bool is_semiinvariant(const DiffForm& w, const Character& chi) {
    for (int j = 0; j < count(); ++j) {
      DiffForm lhs = caches_[static_cast<std::size_t>(j)](w);
      DiffForm rhs = w * chi.value_inverse(gen_index_[static_cast<std::size_t>(j)]);
      if (lhs != rhs) return false;
    }
    return true;
  }

  bool is_invariant(const MPoly& f) {
    for (int j = 0; j < count(); ++j)
      if (caches_[static_cast<std::size_t>(j)](f) != f) return false;
    return true;
  }

 private:
  const ReflectionGroup* g_;
  std::vector<int> gen_index_;
  std::vector<PullbackCache> caches_;
};

// Twisted averaging (1/|G|) sum_g chi(g)^{-1} (g . omega).  Projects onto
// the chi-isotypic component; idempotent on chi-invariant input.  The
// per-element summands are independent, so the sum fans out over the
// workers; exact addition makes the reduction order immaterial.
inline DiffForm reynolds_project(const ReflectionGroup& g, const Character& chi,
                                 const DiffForm& w) {
  std::vector<DiffForm> partial(
      static_cast<std::size_t>(worker_count()),
      DiffForm(w.nvars(), w.conductor(), w.form_degree(), w.frame()));
  int chunks = parallel_chunks(g.size(), [&](int chunk, long lo, long hi) {
    // with j = g^{-1}: chi(g)^{-1} (g . omega) = chi(j) pullback(omega, matrix(j))
    for (long j = lo; j < hi; ++j) {
      DiffForm item = substitute(w, linear_change_of(g.matrix(static_cast<int>(j))));
      partial[static_cast<std::size_t>(chunk)] += item * chi.value(static_cast<int>(j));
    }
  });
  DiffForm acc = std::move(partial[0]);
  for (int c = 1; c < chunks; ++c) acc += partial[static_cast<std::size_t>(c)];
  acc *= CycNum(g.conductor(), Rat(1, g.size()));
  return acc;
}

inline MPoly reynolds_project(const ReflectionGroup& g, const Character& chi, const MPoly& f) {
  DiffForm r = reynolds_project(g, chi, DiffForm::from_zero_form(f));
  return r.comp({});
}

}  // namespace semiinv

#endif
