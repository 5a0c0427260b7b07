#ifndef SEMIINV_DIFF_FORM_HPP
#define SEMIINV_DIFF_FORM_HPP

#include <map>
#include <optional>

#include "semiinv/linalg.hpp"
#include "semiinv/mpoly.hpp"

namespace semiinv {

// Strictly increasing multiindex (0-based variable indices).
using MultiIndex = std::vector<int>;

inline bool multiindex_valid(const MultiIndex& I, int n) {
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 0 || I[k] >= n) return false;
    if (k && I[k] <= I[k - 1]) return false;
  }
  return true;
}

// All length-p multiindices of {0..n-1} in lexicographic order.
inline std::vector<MultiIndex> multiindices(int n, int p) {
  std::vector<MultiIndex> out;
  if (p < 0 || p > n) return out;
  MultiIndex cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Merge two disjoint sorted multiindices; returns the permutation sign, or 0
// if they overlap.
inline int merge_multiindex(const MultiIndex& a, const MultiIndex& b, MultiIndex& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
      inversions += static_cast<int>(a.size() - i);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return (inversions % 2 == 0) ? 1 : -1;
}

inline MultiIndex complement_multiindex(const MultiIndex& I, int n) {
  MultiIndex out;
  out.reserve(n - I.size());
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    if (k < I.size() && I[k] == i) ++k;
    else out.push_back(i);
  }
  return out;
}

// Sign of the shuffle permutation (I, I^c) of (0..n-1).
inline int shuffle_sign(const MultiIndex& I, int n) {
  MultiIndex c = complement_multiindex(I, n), merged;
  int s = merge_multiindex(I, c, merged);
  (void)merged;
  return s;
}

// A polynomial-coefficient element of the exterior algebra: differential
// p-form over dx_i or p-polyvector over d/dx_i, depending on the frame.
// Components are indexed by strictly increasing multiindices.
class DiffForm {
 public:
  enum class Frame { form, polyvector };

  using CompMap = std::map<MultiIndex, MPoly>;

  DiffForm() : n_(0), m_(1), p_(0) {}
  DiffForm(int nvars, int conductor, int p, Frame f = Frame::form)
      : n_(nvars), m_(conductor), p_(p), frame_(f) {
    if (p < 0 || p > nvars) throw input_error("form degree out of range");
  }

  static DiffForm basis_covector(int nvars, int conductor, int i) {
    DiffForm w(nvars, conductor, 1);
    w.set_comp({i}, MPoly::constant(nvars, conductor, Rat(1)));
    return w;
  }

  static DiffForm from_zero_form(const MPoly& f) {
    DiffForm w(f.nvars(), f.conductor(), 0);
    if (!f.is_zero()) w.set_comp({}, f);
    return w;
  }

  static DiffForm volume(int nvars, int conductor, Frame fr = Frame::form) {
    DiffForm w(nvars, conductor, nvars, fr);
    MultiIndex all(nvars);
    for (int i = 0; i < nvars; ++i) all[i] = i;
    w.set_comp(all, MPoly::constant(nvars, conductor, Rat(1)));
    return w;
  }

  int nvars() const { return n_; }
  int conductor() const { return m_; }
  int form_degree() const { return p_; }
  Frame frame() const { return frame_; }
  const CompMap& comps() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  MPoly comp(const MultiIndex& I) const {
    auto it = c_.find(I);
    return it == c_.end() ? MPoly(n_, m_) : it->second;
  }

  void set_comp(const MultiIndex& I, MPoly f) {
    if (static_cast<int>(I.size()) != p_ || !multiindex_valid(I, n_))
      throw input_error("bad multiindex for form component");
    if (f.nvars() != n_ || f.conductor() != m_)
      throw input_error("component polynomial mismatch");
    if (f.is_zero()) c_.erase(I);
    else c_[I] = std::move(f);
  }

  void add_comp(const MultiIndex& I, const MPoly& f) {
    if (f.is_zero()) return;
    auto it = c_.find(I);
    if (it == c_.end()) {
      set_comp(I, f);
    } else {
      it->second += f;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.p_ == b.p_ && a.frame_ == b.frame_ && a.c_ == b.c_;
  }
  friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

  DiffForm operator-() const {
    DiffForm r(*this);
    for (auto& [I, f] : r.c_) f = -f;
    return r;
  }

  DiffForm& operator+=(const DiffForm& o) {
    match(o);
    for (const auto& [I, f] : o.c_) add_comp(I, f);
    return *this;
  }
  DiffForm& operator-=(const DiffForm& o) {
    match(o);
    for (const auto& [I, f] : o.c_) add_comp(I, -f);
    return *this;
  }
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }

  DiffForm& operator*=(const CycNum& s) {
    if (s.is_zero()) c_.clear();
    else
      for (auto& [I, f] : c_) f *= s;
    return *this;
  }
  friend DiffForm operator*(DiffForm a, const CycNum& s) { return a *= s; }
  friend DiffForm operator*(const CycNum& s, DiffForm a) { return a *= s; }
  DiffForm& operator*=(const Rat& s) { return *this *= CycNum(m_, s); }
  friend DiffForm operator*(DiffForm a, const Rat& s) { return a *= s; }

  // module action of the polynomial ring
  DiffForm& operator*=(const MPoly& g) {
    if (g.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& [I, f] : c_) f *= g;
    return *this;
  }
  friend DiffForm operator*(DiffForm a, const MPoly& g) { return a *= g; }
  friend DiffForm operator*(const MPoly& g, DiffForm a) { return a *= g; }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, f] : c_) {
      if (!first) os << "  +  ";
      first = false;
      os << "(" << f.str(names) << ") ";
      if (I.empty()) os << "1";
      for (std::size_t k = 0; k < I.size(); ++k) {
        if (k) os << "^";
        os << (frame_ == Frame::form ? "dx" : "Dx") << (I[k] + 1);
      }
    }
    return os.str();
  }

 private:
  void match(const DiffForm& o) const {
    if (n_ != o.n_ || m_ != o.m_) throw input_error("form dimension/conductor mismatch");
    if (p_ != o.p_) throw input_error("form degree mismatch");
    if (frame_ != o.frame_) throw input_error("cannot mix forms and polyvectors");
  }

  int n_;
  int m_;
  int p_;
  Frame frame_ = Frame::form;
  CompMap c_;
};

// Exterior product.  Degrees past nvars give the zero form of clamped degree.
inline DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.nvars() != b.nvars() || a.conductor() != b.conductor())
    throw input_error("wedge operand mismatch");
  if (a.frame() != b.frame()) throw input_error("cannot wedge form with polyvector");
  int p = a.form_degree() + b.form_degree();
  if (p > a.nvars()) return DiffForm(a.nvars(), a.conductor(), a.nvars(), a.frame());
  DiffForm r(a.nvars(), a.conductor(), p, a.frame());
  MultiIndex merged;
  for (const auto& [I, f] : a.comps()) {
    for (const auto& [J, g] : b.comps()) {
      int s = merge_multiindex(I, J, merged);
      if (s == 0) continue;
      MPoly prod = f * g;
      if (s < 0) prod = -prod;
      r.add_comp(merged, prod);
    }
  }
  return r;
}

// Common total degree of the nonzero coefficients, when they are all
// homogeneous of one degree.
inline std::optional<int> form_coeff_degree(const DiffForm& w) {
  std::optional<int> deg;
  for (const auto& [I, f] : w.comps()) {
    if (!f.is_homogeneous()) return std::nullopt;
    if (deg && *deg != f.degree()) return std::nullopt;
    deg = f.degree();
  }
  return deg;
}

// Pullback of a differential form under x -> Mx: coefficients compose with M
// and dx_i -> sum_j M_ij dx_j, so dx_I picks up p-by-p minors of M.
inline DiffForm substitute(const DiffForm& w, const LinearChange& c) {
  if (w.frame() != DiffForm::Frame::form)
    throw input_error("substitute applies to differential forms only");
  if (w.nvars() != c.n || w.conductor() != c.m)
    throw input_error("substitute: form/change mismatch");
  require_invertible(c);
  const int p = w.form_degree();
  DiffForm out(w.nvars(), w.conductor(), p);
  auto targets = multiindices(c.n, p);
  std::map<std::pair<MultiIndex, MultiIndex>, CycNum> minor_cache;
  auto minor = [&](const MultiIndex& I, const MultiIndex& J) -> const CycNum& {
    auto key = std::make_pair(I, J);
    auto it = minor_cache.find(key);
    if (it != minor_cache.end()) return it->second;
    CMatrix sub(p, p, c.m);
    for (int r = 0; r < p; ++r)
      for (int s = 0; s < p; ++s) sub.at(r, s) = c.at(I[static_cast<std::size_t>(r)], J[static_cast<std::size_t>(s)]);
    return minor_cache.emplace(std::move(key), det(sub)).first->second;
  };
  for (const auto& [I, f] : w.comps()) {
    MPoly fsub = substitute(f, c);
    if (fsub.is_zero()) continue;
    for (const auto& J : targets) {
      const CycNum& d = minor(I, J);
      if (d.is_zero()) continue;
      out.add_comp(J, fsub * d);
    }
  }
  return out;
}

namespace detail {

// Product truncated in one variable: monomials whose exponent of `var`
// reaches `cap` are dropped.  Exponents only grow under multiplication, so
// dropping early never changes the kept part.
inline MPoly mul_trunc(const MPoly& a, const MPoly& b, int var, int cap) {
  MPoly r(a.nvars(), a.conductor());
  Expo e(a.nvars(), 0);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      if (ea[var] + eb[var] >= cap) continue;
      for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

}  // namespace detail

// substitute(f, c) truncated to terms with exponent of `var` below `cap`.
inline MPoly substitute_truncated(const MPoly& f, const LinearChange& c, int var, int cap) {
  if (f.nvars() != c.n || f.conductor() != c.m) throw input_error("substitute: mismatch");
  if (cap <= 0) return MPoly(f.nvars(), f.conductor());
  detail::RowPowerCache rows(c);
  // truncated powers of each row form, grown on demand
  std::vector<std::vector<MPoly>> tp(static_cast<std::size_t>(c.n));
  auto tpow = [&](int i, int k) -> const MPoly& {
    auto& v = tp[static_cast<std::size_t>(i)];
    if (v.empty()) {
      v.push_back(MPoly::constant(c.n, c.m, Rat(1)));
      v.push_back(rows.get(i, 1));
      // apply the truncation to the linear form as well
      v[1] = detail::mul_trunc(v[0], v[1], var, cap);
    }
    while (static_cast<int>(v.size()) <= k)
      v.push_back(detail::mul_trunc(v.back(), rows.get(i, 1), var, cap));
    return v[static_cast<std::size_t>(k)];
  };
  MPoly out(f.nvars(), f.conductor());
  for (const auto& [e, coeff] : f.terms()) {
    MPoly term = MPoly::constant(f.nvars(), f.conductor(), Rat(1));
    for (int i = 0; i < f.nvars() && !term.is_zero(); ++i)
      if (e[i] > 0) term = detail::mul_trunc(term, tpow(i, e[i]), var, cap);
    out += term * coeff;
  }
  return out;
}

// Truncated pullback of a form (see substitute / substitute_truncated).
inline DiffForm substitute_truncated(const DiffForm& w, const LinearChange& c, int var, int cap) {
  if (w.frame() != DiffForm::Frame::form)
    throw input_error("substitute applies to differential forms only");
  const int p = w.form_degree();
  DiffForm out(w.nvars(), w.conductor(), p);
  auto targets = multiindices(c.n, p);
  for (const auto& [I, f] : w.comps()) {
    MPoly fsub = substitute_truncated(f, c, var, cap);
    if (fsub.is_zero()) continue;
    for (const auto& J : targets) {
      CMatrix sub(p, p, c.m);
      for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s)
          sub.at(r, s) = c.at(I[static_cast<std::size_t>(r)], J[static_cast<std::size_t>(s)]);
      CycNum d = det(sub);
      if (d.is_zero()) continue;
      out.add_comp(J, fsub * d);
    }
  }
  return out;
}

// Exterior derivative of a p-form.
inline DiffForm exterior_derivative(const DiffForm& w) {
  if (w.frame() != DiffForm::Frame::form) throw input_error("d applies to forms");
  DiffForm out(w.nvars(), w.conductor(), w.form_degree() + 1);
  MultiIndex merged;
  for (const auto& [I, f] : w.comps()) {
    for (int i = 0; i < w.nvars(); ++i) {
      MPoly df = f.derivative(i);
      if (df.is_zero()) continue;
      MultiIndex di{i};
      int s = merge_multiindex(di, I, merged);
      if (s == 0) continue;
      if (s < 0) df = -df;
      out.add_comp(merged, df);
    }
  }
  return out;
}

inline DiffForm differential(const MPoly& f) {
  return exterior_derivative(DiffForm::from_zero_form(f));
}

// Componentwise exact division of a form by a polynomial.
inline std::optional<DiffForm> exact_divide(const DiffForm& w, const MPoly& q) {
  DiffForm out(w.nvars(), w.conductor(), w.form_degree(), w.frame());
  for (const auto& [I, f] : w.comps()) {
    auto r = exact_divide(f, q);
    if (!r) return std::nullopt;
    out.set_comp(I, std::move(*r));
  }
  return out;
}

// Contraction against the volume element: a p-form maps to the
// (n-p)-polyvector with components +/- mu_{I^c}, and symmetrically back.
// Applying it twice returns (-1)^{p(n-p)} times the identity.
inline DiffForm hodge_dual(const DiffForm& w) {
  const int n = w.nvars();
  const int p = w.form_degree();
  auto target = w.frame() == DiffForm::Frame::form ? DiffForm::Frame::polyvector
                                                   : DiffForm::Frame::form;
  DiffForm out(n, w.conductor(), n - p, target);
  for (const auto& [I, f] : w.comps()) {
    MultiIndex c = complement_multiindex(I, n);
    int s = shuffle_sign(I, n);
    out.add_comp(c, s < 0 ? -f : f);
  }
  return out;
}

}  // namespace semiinv

#endif
