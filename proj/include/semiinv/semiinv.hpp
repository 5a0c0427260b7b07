#ifndef SEMIINV_SEMIINV_HPP
#define SEMIINV_SEMIINV_HPP

#include <functional>
#include <memory>

#include "semiinv/action.hpp"
#include "semiinv/graded_basis.hpp"
#include "semiinv/molien.hpp"

namespace semiinv {

// ---------------------------------------------------------------------------
// Q polynomials
// ---------------------------------------------------------------------------

// Q_chi = prod_H alpha_H^{a_H(chi)}, with each alpha_H normalized so its
// graded-lex leading coefficient is 1.  The product is then itself monic.
inline MPoly q_poly(const ReflectionGroup& g, const Character& chi) {
  if (!g.is_generated_by_reflections())
    throw input_error("group is not generated by its reflections");
  MPoly q = MPoly::constant(g.dim(), g.conductor(), Rat(1));
  for (const Hyperplane& h : g.arrangement()) {
    int a = a_H(g, h, chi);
    for (int k = 0; k < a; ++k) q *= h.alpha;
  }
  return q;
}

struct RecurrenceCheck {
  int a_chi = 0;
  int a_chi_det = 0;
  int expected = 0;
  bool pass = false;
};

// a_H(chi*det) = a_H(chi) - 1 when a_H(chi) != 0, else o(s_H) - 1.
inline RecurrenceCheck ah_recurrence_check(const ReflectionGroup& g, const Hyperplane& h,
                                           const Character& chi) {
  RecurrenceCheck r;
  r.a_chi = a_H(g, h, chi);
  r.a_chi_det = a_H(g, h, chi.times_det(g));
  r.expected = r.a_chi != 0 ? r.a_chi - 1 : h.stab_order - 1;
  r.pass = (r.a_chi_det == r.expected);
  return r;
}

// ---------------------------------------------------------------------------
// Context and certificates
// ---------------------------------------------------------------------------

struct BasicInvariants {
  std::vector<MPoly> fs;
  std::vector<int> degrees;
  CycNum jacobian_witness;  // jacobian_det(fs) = witness * Q_det
};

struct GeneratorCertificate {
  std::vector<DiffForm> forms;       // n chi-invariant 1-forms
  std::vector<int> degrees;          // coefficient degrees
  CycNum witness_scalar;             // top chi-wedge = witness * Q_{chi det} vol
  MPoly det_coeff_matrix;            // determinant of the coefficient matrix
};

struct SaitoResult {
  bool ok = false;
  std::string reason;
  CycNum witness;
  MPoly det_coeff_matrix;
  DiffForm top_wedge;  // the iterated chi-wedge (an n-form)
};

class SemiInvariantEngine;

// Everything the per-character operations need: the group, the character,
// and the four Q polynomials.
struct SemiInvariantContext {
  SemiInvariantEngine* engine = nullptr;
  Character chi;
  MPoly q_chi;
  MPoly q_chi_det;
  MPoly q_det;
  MPoly q_det_inv;
  std::vector<int> a_values;  // a_H(chi) per hyperplane, arrangement order

  const ReflectionGroup& group() const;
};

struct chi_wedge_error : math_error {
  chi_wedge_error(const std::string& msg, int hyperplane, int power)
      : math_error(msg), hyperplane_index(hyperplane), required_power(power) {}
  int hyperplane_index;
  int required_power;
};

// ---------------------------------------------------------------------------
// Engine: per-group caches and the graded isotypic solver
// ---------------------------------------------------------------------------

namespace detail {

// Images of all monomials of one degree under x -> Mx, built level by level.
// Only the current level is retained.
class RollingImages {
 public:
  explicit RollingImages(const CMatrix& mt) : mt_(mt), n_(mt.rows), m_(mt.m) {
    for (int i = 0; i < n_; ++i) {
      MPoly row(n_, m_);
      for (int j = 0; j < n_; ++j)
        if (!mt_.at(i, j).is_zero()) row += MPoly::variable(n_, m_, j) * mt_.at(i, j);
      rows_.push_back(std::move(row));
    }
    level_ = 0;
    cur_ = {MPoly::constant(n_, m_, Rat(1))};
    rank_ = {{Expo(static_cast<std::size_t>(n_), 0), 0}};
  }

  // Images of monomials_of_degree(n, d), in that order.  Degrees must be
  // requested in nondecreasing order unless restart() is called.
  const std::vector<MPoly>& at(int d) {
    if (d < level_) throw math_error("rolling image table asked to move backwards");
    while (level_ < d) advance();
    return cur_;
  }

  void restart() {
    level_ = 0;
    cur_ = {MPoly::constant(n_, m_, Rat(1))};
    rank_ = {{Expo(static_cast<std::size_t>(n_), 0), 0}};
  }

  int level() const { return level_; }

 private:
  void advance() {
    int next = level_ + 1;
    auto monos = monomials_of_degree(n_, next);
    std::vector<MPoly> img;
    img.reserve(monos.size());
    for (const Expo& e : monos) {
      int var = 0;
      while (e[var] == 0) ++var;
      Expo prev = e;
      prev[var] -= 1;
      img.push_back(cur_[static_cast<std::size_t>(rank_.at(prev))] * rows_[static_cast<std::size_t>(var)]);
    }
    cur_ = std::move(img);
    rank_.clear();
    for (std::size_t i = 0; i < monos.size(); ++i) rank_[monos[i]] = static_cast<int>(i);
    level_ = next;
  }

  CMatrix mt_;
  int n_, m_;
  std::vector<MPoly> rows_;
  int level_ = 0;
  std::vector<MPoly> cur_;
  std::map<Expo, int> rank_;
};

// Union-find with multiplicative edge weights: v_slot = factor * v_root.
class WeightedDSU {
 public:
  WeightedDSU(int size, int conductor)
      : parent_(static_cast<std::size_t>(size)), factor_(static_cast<std::size_t>(size), CycNum::one(conductor)),
        dead_(static_cast<std::size_t>(size), 0) {
    for (int i = 0; i < size; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  std::pair<int, CycNum> find(int i) {
    if (parent_[static_cast<std::size_t>(i)] == i) return {i, factor_[static_cast<std::size_t>(i)]};
    auto [root, f] = find(parent_[static_cast<std::size_t>(i)]);
    parent_[static_cast<std::size_t>(i)] = root;
    factor_[static_cast<std::size_t>(i)] *= f;
    return {root, factor_[static_cast<std::size_t>(i)]};
  }

  // impose v_j = w * v_i
  void relate(int i, int j, const CycNum& w) {
    auto [ri, fi] = find(i);
    auto [rj, fj] = find(j);
    if (ri == rj) {
      // need fj = w * fi, otherwise the component is forced to zero
      if (fj != w * fi) dead_[static_cast<std::size_t>(ri)] = 1;
      return;
    }
    parent_[static_cast<std::size_t>(rj)] = ri;
    factor_[static_cast<std::size_t>(rj)] = w * fi / fj;
    if (dead_[static_cast<std::size_t>(rj)]) dead_[static_cast<std::size_t>(ri)] = 1;
  }

  bool alive(int i) {
    auto [root, f] = find(i);
    (void)f;
    return !dead_[static_cast<std::size_t>(root)];
  }

  int root_of(int i) { return find(i).first; }
  const CycNum& factor_of(int i) {
    find(i);
    return factor_[static_cast<std::size_t>(i)];
  }

 private:
  std::vector<int> parent_;
  std::vector<CycNum> factor_;
  std::vector<char> dead_;
};

// monomial matrix data: row i has entry scale[i] in column perm[i]
struct MonomialShape {
  std::vector<int> perm;
  std::vector<CycNum> scale;

  static std::optional<MonomialShape> of(const CMatrix& mt) {
    MonomialShape s;
    s.perm.resize(static_cast<std::size_t>(mt.rows), -1);
    s.scale.resize(static_cast<std::size_t>(mt.rows), CycNum::zero(mt.m));
    for (int i = 0; i < mt.rows; ++i) {
      int nz = -1;
      for (int j = 0; j < mt.cols; ++j) {
        if (mt.at(i, j).is_zero()) continue;
        if (nz >= 0) return std::nullopt;
        nz = j;
      }
      if (nz < 0) return std::nullopt;
      s.perm[static_cast<std::size_t>(i)] = nz;
      s.scale[static_cast<std::size_t>(i)] = mt.at(i, nz);
    }
    std::vector<char> used(static_cast<std::size_t>(mt.cols), 0);
    for (int j : s.perm) {
      if (used[static_cast<std::size_t>(j)]) return std::nullopt;
      used[static_cast<std::size_t>(j)] = 1;
    }
    return s;
  }
};

}  // namespace detail

class SemiInvariantEngine {
 public:
  explicit SemiInvariantEngine(const ReflectionGroup& g)
      : g_(&g), molien_(g), action_(g) {
    if (!g.is_generated_by_reflections())
      throw input_error("group is not generated by its reflections");
    // dense (non-monomial) generators get rolling image tables
    for (int j = 0; j < g.num_generators(); ++j) {
      int idx = g.right_by_generator(0, j);
      if (!detail::MonomialShape::of(g.matrix(idx)))
        dense_gens_.emplace(idx, detail::RollingImages(g.matrix(idx)));
    }
  }

  const ReflectionGroup& group() const { return *g_; }
  const MolienTable& molien() const { return molien_; }
  GeneratorAction& action() { return action_; }

  SemiInvariantContext context(const Character& chi) {
    SemiInvariantContext ctx;
    ctx.engine = this;
    ctx.chi = chi;
    ctx.q_chi = q_poly(*g_, chi);
    ctx.q_chi_det = q_poly(*g_, chi.times_det(*g_));
    ctx.q_det = q_poly(*g_, Character::det_power(*g_, 1));
    ctx.q_det_inv = q_poly(*g_, Character::det_power(*g_, -1));
    for (const Hyperplane& h : g_->arrangement()) ctx.a_values.push_back(a_H(*g_, h, chi));
    return ctx;
  }

  SemiInvariantContext context_det_power(long k) { return context(Character::det_power(*g_, k)); }

  // ---- basic invariants ----

  const BasicInvariants& basic_invariants(int degree_cap = 0) {
    if (basic_) return *basic_;
    if (degree_cap <= 0) degree_cap = static_cast<int>(g_->size());
    restart_image_tables();
    const int n = g_->dim();
    Character triv = Character::trivial(*g_);
    auto dims = molien_.isotypic_series(triv, 0, degree_cap);
    BasicInvariants b;
    for (int d = 1; d <= degree_cap && static_cast<int>(b.fs.size()) < n; ++d) {
      long have = dims[static_cast<std::size_t>(d)];
      long predicted = b.degrees.empty()
                           ? 0
                           : shifted_partition_series(b.degrees, 0, d)[static_cast<std::size_t>(d)];
      if (have == predicted) continue;
      if (have < predicted)
        throw math_error("invariant count below the free prediction at degree " + std::to_string(d));
      long needed = have - predicted;
      // span of products of the invariants already chosen, in degree d
      EchelonSpan span(g_->conductor());
      GradedFormBasis basis(n, g_->conductor(), 0, d);
      for (const MPoly& prod : invariant_products_of_degree(b, d))
        span.add(basis.vectorize(DiffForm::from_zero_form(prod)));
      auto iso = isotypic_basis(triv, 0, d);
      long taken = 0;
      for (const auto& v : iso) {
        if (taken == needed) break;
        if (span.add(v) >= 0) {
          b.fs.push_back(basis.form_of(v).comp({}));
          b.degrees.push_back(d);
          ++taken;
        }
      }
      if (taken != needed)
        throw math_error("could not select enough new invariants at degree " + std::to_string(d));
    }
    if (static_cast<int>(b.fs.size()) < n)
      throw input_error("basic invariant search exceeded the degree cap (is this a reflection group?)");
    long prod = 1;
    for (int d : b.degrees) prod *= d;
    if (prod != g_->size())
      throw math_error("product of basic degrees " + std::to_string(prod) +
                       " does not equal the group order " + std::to_string(g_->size()));
    // Steinberg certificate: the Jacobian determinant is Q_det up to a scalar
    MPoly jac = jacobian_det(b.fs);
    MPoly qd = q_poly(*g_, Character::det_power(*g_, 1));
    auto w = eq_up_to_scalar(jac, qd);
    if (!w) throw math_error("Jacobian of the chosen invariants is not a multiple of Q_det");
    b.jacobian_witness = *w;
    for (const MPoly& f : b.fs)
      if (!action_.is_invariant(f)) throw math_error("selected basic invariant is not invariant");
    basic_ = std::move(b);
    return *basic_;
  }

  // all products of basic invariants of one weighted degree
  std::vector<MPoly> invariant_products_of_degree(const BasicInvariants& b, int d) {
    std::vector<MPoly> out;
    std::vector<int> expo(b.degrees.size(), 0);
    collect_products(b, 0, d, expo, out);
    return out;
  }

  // ---- graded isotypic solver ----

  // Canonical basis (echelon-reduced coordinate vectors over the
  // GradedFormBasis slots) of the chi-isotypic piece of degree-d p-forms.
  std::vector<std::vector<CycNum>> isotypic_basis(const Character& chi, int p, int d) {
    GradedFormBasis basis(g_->dim(), g_->conductor(), p, d);
    const int N = basis.size();
    const int m = g_->conductor();
    // 1) combinatorial constraints from every monomial element
    detail::WeightedDSU dsu(N, m);
    for (int idx : g_->monomial_elements()) {
      if (idx == 0) continue;
      auto shape = detail::MonomialShape::of(g_->matrix(idx));
      CycNum lambda_inv = chi.value(idx);  // (chi(g)^{-1})^{-1} = chi(g)
      for (int s = 0; s < N; ++s) {
        auto [scale, target] = monomial_slot_image(basis, *shape, s);
        dsu.relate(s, target, scale * lambda_inv);
      }
    }
    // candidate columns: one per live component
    std::map<int, std::vector<std::pair<int, CycNum>>> comp;
    for (int s = 0; s < N; ++s) {
      if (!dsu.alive(s)) continue;
      comp[dsu.root_of(s)].push_back({s, dsu.factor_of(s)});
    }
    std::vector<std::vector<std::pair<int, CycNum>>> cols;
    cols.reserve(comp.size());
    for (auto& [root, col] : comp) cols.push_back(std::move(col));
    // 2) dense generator constraints
    for (auto& [idx, images] : dense_gens_) {
      if (cols.empty()) break;
      const auto& level = images.at(d);
      CycNum lambda = chi.value_inverse(idx);
      PullbackCache& pull = pullback_of(idx);
      // C = rho(A) V - lambda V, kernel over the candidate coordinates
      const int k = static_cast<int>(cols.size());
      CMatrix c(N, k, m);
      std::map<Expo, int> mono_rank;
      {
        const auto& monos = basis.monomials();
        for (std::size_t i = 0; i < monos.size(); ++i) mono_rank[monos[i]] = static_cast<int>(i);
      }
      const auto& indices = basis.indices();
      const int ni = static_cast<int>(indices.size());
      for (int col = 0; col < k; ++col) {
        for (const auto& [slot, f] : cols[static_cast<std::size_t>(col)]) {
          int mi = slot / ni, ii = slot % ni;
          const MPoly& img = level[static_cast<std::size_t>(mi)];
          for (int jj = 0; jj < ni; ++jj) {
            const CycNum& mn = pull.minor(indices[static_cast<std::size_t>(ii)],
                                          indices[static_cast<std::size_t>(jj)]);
            if (mn.is_zero()) continue;
            CycNum w = f * mn;
            for (const auto& [e, cc] : img.terms()) {
              int target = mono_rank.at(e) * ni + jj;
              c.at(target, col) += cc * w;
            }
          }
          c.at(slot, col) -= lambda * f;
        }
      }
      auto ker = kernel_basis(std::move(c));
      // new candidates = V * kernel vectors
      std::vector<std::vector<std::pair<int, CycNum>>> next;
      next.reserve(ker.size());
      for (const auto& kv : ker) {
        std::map<int, CycNum> dense;
        for (int col = 0; col < k; ++col) {
          if (kv[static_cast<std::size_t>(col)].is_zero()) continue;
          for (const auto& [slot, f] : cols[static_cast<std::size_t>(col)]) {
            auto [it, fresh] = dense.emplace(slot, f * kv[static_cast<std::size_t>(col)]);
            if (!fresh) it->second += f * kv[static_cast<std::size_t>(col)];
          }
        }
        std::vector<std::pair<int, CycNum>> col;
        for (auto& [slot, v] : dense)
          if (!v.is_zero()) col.push_back({slot, std::move(v)});
        if (!col.empty()) next.push_back(std::move(col));
      }
      cols = std::move(next);
    }
    // 3) canonicalize and cross-check the dimension
    EchelonSpan span(m);
    for (const auto& col : cols) {
      std::vector<CycNum> v(static_cast<std::size_t>(N), CycNum::zero(m));
      for (const auto& [slot, f] : col) v[static_cast<std::size_t>(slot)] = f;
      span.add(std::move(v));
    }
    std::vector<std::vector<CycNum>> out = span.rows();
    long expected = molien_.isotypic_dim(chi, p, d);
    if (static_cast<long>(out.size()) != expected)
      throw math_error("isotypic solver dimension " + std::to_string(out.size()) +
                       " disagrees with the character count " + std::to_string(expected));
    return out;
  }

  // Restart the rolling tables (needed before re-running an ascending sweep).
  void restart_image_tables() {
    for (auto& [idx, images] : dense_gens_) images.restart();
  }

  PullbackCache& pullback_of(int element_index) {
    auto it = pullbacks_.find(element_index);
    if (it == pullbacks_.end())
      it = pullbacks_.emplace(element_index, PullbackCache(g_->matrix(element_index))).first;
    return it->second;
  }

 private:
  // image of basis slot under a monomial matrix: (scale, target slot)
  std::pair<CycNum, int> monomial_slot_image(const GradedFormBasis& basis,
                                             const detail::MonomialShape& shape, int s) {
    const auto& indices = basis.indices();
    const int ni = static_cast<int>(indices.size());
    int mi = s / ni, ii = s % ni;
    const Expo& e = basis.monomials()[static_cast<std::size_t>(mi)];
    const int n = g_->dim();
    Expo target(static_cast<std::size_t>(n), 0);
    CycNum scale = CycNum::one(g_->conductor());
    for (int i = 0; i < n; ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      target[static_cast<std::size_t>(shape.perm[static_cast<std::size_t>(i)])] =
          e[static_cast<std::size_t>(i)];
      scale *= shape.scale[static_cast<std::size_t>(i)].pow(e[static_cast<std::size_t>(i)]);
    }
    const MultiIndex& I = indices[static_cast<std::size_t>(ii)];
    std::vector<int> mapped;
    mapped.reserve(I.size());
    for (int i : I) mapped.push_back(shape.perm[static_cast<std::size_t>(i)]);
    for (int i : I) scale *= shape.scale[static_cast<std::size_t>(i)];
    // sort the mapped index, tracking the sign
    int sign = 1;
    for (std::size_t a = 0; a < mapped.size(); ++a)
      for (std::size_t b = a + 1; b < mapped.size(); ++b)
        if (mapped[a] > mapped[b]) {
          std::swap(mapped[a], mapped[b]);
          sign = -sign;
        }
    if (sign < 0) scale = -scale;
    int target_slot = basis.slot(target, mapped);
    if (target_slot < 0) throw math_error("monomial action left the graded basis");
    return {std::move(scale), target_slot};
  }

  void collect_products(const BasicInvariants& b, std::size_t pos, int left,
                        std::vector<int>& expo, std::vector<MPoly>& out) {
    if (left == 0) {
      MPoly prod = MPoly::constant(g_->dim(), g_->conductor(), Rat(1));
      for (std::size_t i = 0; i < expo.size(); ++i)
        for (int k = 0; k < expo[i]; ++k) prod *= b.fs[i];
      out.push_back(std::move(prod));
      return;
    }
    if (pos == b.degrees.size()) return;
    int d = b.degrees[pos];
    for (int k = 0; k * d <= left; ++k) {
      expo[pos] = k;
      collect_products(b, pos + 1, left - k * d, expo, out);
    }
    expo[pos] = 0;
  }

  const ReflectionGroup* g_;
  MolienTable molien_;
  GeneratorAction action_;
  std::optional<BasicInvariants> basic_;
  std::map<int, detail::RollingImages> dense_gens_;
  std::map<int, PullbackCache> pullbacks_;
};

inline const ReflectionGroup& SemiInvariantContext::group() const { return engine->group(); }

// ---------------------------------------------------------------------------
// chi-wedge and the generation criterion
// ---------------------------------------------------------------------------

// (mu ^ omega) / Q_chi, exactly.  NotDivisible means an operand was not
// chi-invariant; the failing hyperplane power is reported.
inline DiffForm chi_wedge(const DiffForm& mu, const DiffForm& omega,
                          const SemiInvariantContext& ctx) {
  DiffForm w = wedge(mu, omega);
  if (ctx.q_chi.degree() <= 0) return w;  // trivial character: plain wedge
  auto quot = exact_divide(w, ctx.q_chi);
  if (quot) return *quot;
  // diagnose: find the hyperplane whose power fails
  const auto& hs = ctx.group().arrangement();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    int a = ctx.a_values[i];
    if (a == 0) continue;
    MPoly pw = MPoly::constant(w.nvars(), w.conductor(), Rat(1));
    for (int k = 0; k < a; ++k) pw *= hs[i].alpha;
    bool ok = true;
    for (const auto& [I, f] : w.comps())
      if (!exact_divide(f, pw)) { ok = false; break; }
    if (!ok)
      throw chi_wedge_error("wedge product is not divisible by alpha_H^" + std::to_string(a) +
                                " for hyperplane " + hs[i].alpha.str() +
                                " (operand not chi-invariant?)",
                            static_cast<int>(i), a);
  }
  throw chi_wedge_error("wedge product is not divisible by Q_chi", -1, 0);
}

// Saito-style criterion: n chi-invariant 1-forms generate the module iff
// their iterated chi-wedge is a nonzero constant multiple of Q_{chi det} vol.
inline SaitoResult saito_check(const std::vector<DiffForm>& forms, const SemiInvariantContext& ctx,
                               bool verify_invariance = true) {
  SaitoResult res;
  const ReflectionGroup& g = ctx.group();
  const int n = g.dim();
  res.witness = CycNum::zero(g.conductor());
  if (static_cast<int>(forms.size()) != n) {
    res.reason = "need exactly n 1-forms";
    return res;
  }
  for (const DiffForm& w : forms) {
    if (w.form_degree() != 1 || w.nvars() != n) {
      res.reason = "inputs must be 1-forms in the group dimension";
      return res;
    }
  }
  if (verify_invariance) {
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (!ctx.engine->action().is_semiinvariant(forms[i], ctx.chi)) {
        res.reason = "form " + std::to_string(i + 1) + " is not chi-invariant";
        return res;
      }
  }
  // iterated chi-wedge
  DiffForm acc = forms[0];
  try {
    for (int i = 1; i < n; ++i) acc = chi_wedge(acc, forms[static_cast<std::size_t>(i)], ctx);
  } catch (const chi_wedge_error& e) {
    res.reason = e.what();
    return res;
  }
  res.top_wedge = acc;
  if (acc.is_zero()) {
    res.reason = "top chi-wedge vanishes";
    return res;
  }
  MultiIndex all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  MPoly top = acc.comp(all);
  auto w = eq_up_to_scalar(top, ctx.q_chi_det);
  if (!w) {
    res.reason = "top chi-wedge is not a scalar multiple of Q_{chi det} vol";
    return res;
  }
  // cross-check through the coefficient matrix determinant:
  // det M = witness * Q_{chi det} * Q_chi^{n-1}
  std::vector<MPoly> rows;
  for (const DiffForm& f : forms)
    for (int j = 0; j < n; ++j) rows.push_back(f.comp({j}));
  MPoly detm(n, g.conductor());
  {
    // Leibniz over the small n x n polynomial matrix
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::function<void(int, int, MPoly)> rec;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    rec = [&](int row, int sign, MPoly acc_poly) {
      if (row == n) {
        if (sign < 0) detm -= acc_poly;
        else detm += acc_poly;
        return;
      }
      for (int j = 0; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const MPoly& entry = rows[static_cast<std::size_t>(row) * n + j];
        if (entry.is_zero()) continue;
        int swaps = 0;
        for (int t = 0; t < j; ++t)
          if (!used[static_cast<std::size_t>(t)]) ++swaps;
        used[static_cast<std::size_t>(j)] = 1;
        rec(row + 1, swaps % 2 ? -sign : sign, acc_poly * entry);
        used[static_cast<std::size_t>(j)] = 0;
      }
    };
    rec(0, 1, MPoly::constant(n, g.conductor(), Rat(1)));
  }
  res.det_coeff_matrix = detm;
  MPoly expect = ctx.q_chi_det * *w;
  for (int i = 0; i + 1 < n; ++i) expect *= ctx.q_chi;
  if (detm != expect)
    throw math_error("chi-wedge route and determinant route disagree in the generation criterion");
  res.ok = true;
  res.witness = *w;
  return res;
}

// ---------------------------------------------------------------------------
// Generator search
// ---------------------------------------------------------------------------

// Degree-by-degree search for n 1-forms generating the chi-invariant module.
// Degrees with no expected generator (from the graded dimension bookkeeping)
// are skipped; at each remaining degree the isotypic basis is computed and
// reduced against the span of invariant multiples of the forms already
// chosen.  The result must pass the generation criterion.
inline GeneratorCertificate find_generators(SemiInvariantContext& ctx, int degree_cap) {
  SemiInvariantEngine& eng = *ctx.engine;
  const ReflectionGroup& g = ctx.group();
  const int n = g.dim();
  if (degree_cap < 1) throw input_error("degree cap must be at least 1");
  const BasicInvariants& basic = eng.basic_invariants();
  auto dims = eng.molien().isotypic_series(ctx.chi, 1, degree_cap);
  auto numerator = free_module_numerator(dims, basic.degrees);
  long total = 0;
  for (std::size_t d = 0; d < numerator.size(); ++d) {
    if (numerator[d] < 0)
      throw math_error("negative generator multiplicity in the graded bookkeeping");
    total += numerator[d];
  }
  if (total < n)
    throw input_error("degree cap " + std::to_string(degree_cap) + " reached with only " +
                      std::to_string(total) + " of " + std::to_string(n) +
                      " generators in sight");
  eng.restart_image_tables();
  std::vector<DiffForm> selected;
  std::vector<int> degrees;
  for (int e = 0; e <= degree_cap && static_cast<int>(selected.size()) < n; ++e) {
    long count = numerator[static_cast<std::size_t>(e)];
    if (count == 0) continue;
    GradedFormBasis basis(n, g.conductor(), 1, e);
    EchelonSpan span(g.conductor());
    long rspan_expected = 0;
    for (std::size_t j = 0; j < selected.size(); ++j) {
      for (const MPoly& b : eng.invariant_products_of_degree(basic, e - degrees[j])) {
        if (span.add(basis.vectorize(selected[j] * b)) < 0)
          throw math_error("invariant multiples of chosen generators are dependent");
        ++rspan_expected;
      }
    }
    (void)rspan_expected;
    auto iso = eng.isotypic_basis(ctx.chi, 1, e);
    long taken = 0;
    for (const auto& v : iso) {
      if (taken == count) break;
      if (span.add(v) >= 0) {
        selected.push_back(basis.form_of(v));
        degrees.push_back(e);
        ++taken;
      }
    }
    if (taken != count)
      throw math_error("expected " + std::to_string(count) + " new generators at degree " +
                       std::to_string(e) + " but found " + std::to_string(taken));
  }
  if (static_cast<int>(selected.size()) != n)
    throw math_error("generator search finished without n forms");
  SaitoResult sr = saito_check(selected, ctx, /*verify_invariance=*/true);
  if (!sr.ok)
    throw math_error("generator search output fails the generation criterion: " + sr.reason);
  GeneratorCertificate cert;
  cert.forms = std::move(selected);
  cert.degrees = std::move(degrees);
  cert.witness_scalar = sr.witness;
  cert.det_coeff_matrix = sr.det_coeff_matrix;
  // degree bookkeeping: sum deg_i = deg Q_{chi det} + (n-1) deg Q_chi
  long sum = 0;
  for (int d : cert.degrees) sum += d;
  long expect = std::max(ctx.q_chi_det.degree(), 0) +
                static_cast<long>(n - 1) * std::max(ctx.q_chi.degree(), 0);
  if (sum != expect)
    throw math_error("generator degree bookkeeping failed: sum " + std::to_string(sum) +
                     " expected " + std::to_string(expect));
  return cert;
}

}  // namespace semiinv

#endif
