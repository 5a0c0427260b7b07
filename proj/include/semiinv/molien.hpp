#ifndef SEMIINV_MOLIEN_HPP
#define SEMIINV_MOLIEN_HPP

#include "semiinv/character.hpp"

namespace semiinv {

// Exact graded dimensions of isotypic components, computed by character
// averaging.  For each element j the trace of its action on S_d (and on
// Lambda^p V*) depends only on det(I - t*j), so elements are bucketed by
// that characteristic data and the degree series is expanded once per
// bucket through the linear recurrence sum_k c_k h_{d-k} = 0.
class MolienTable {
 public:
  explicit MolienTable(const ReflectionGroup& g) : g_(&g), n_(g.dim()), m_(g.conductor()) {
    std::map<std::string, int> seen;
    class_of_.resize(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
      std::vector<CycNum> c = char_rev(g.matrix(i));
      std::string key;
      for (const CycNum& x : c) key += x.key() + "|";
      auto it = seen.find(key);
      if (it == seen.end()) {
        it = seen.emplace(std::move(key), static_cast<int>(classes_.size())).first;
        classes_.push_back(std::move(c));
        h_series_.emplace_back();
      }
      class_of_[static_cast<std::size_t>(i)] = it->second;
    }
  }

  const ReflectionGroup& group() const { return *g_; }
  int class_count() const { return static_cast<int>(classes_.size()); }

  // dim of the degree-d piece of the chi-isotypic part of S tensor
  // Lambda^p V*, for d = 0..max_degree.
  std::vector<long> isotypic_series(const Character& chi, int p, int max_degree) const {
    if (p < 0 || p > n_) throw input_error("form degree out of range");
    if (max_degree < 0) return {};
    extend_h(max_degree);
    // per-class accumulated character weight
    std::vector<CycNum> weight(classes_.size(), CycNum::zero(m_));
    for (int i = 0; i < g_->size(); ++i)
      weight[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(i)])] += chi.value(i);
    std::vector<CycNum> acc(static_cast<std::size_t>(max_degree) + 1, CycNum::zero(m_));
    for (std::size_t cl = 0; cl < classes_.size(); ++cl) {
      if (weight[cl].is_zero()) continue;
      // e_p of the eigenvalues: (-1)^p times the t^p coefficient of char_rev
      CycNum ep = classes_[cl][static_cast<std::size_t>(p)];
      if (p % 2) ep = -ep;
      if (ep.is_zero()) continue;
      CycNum w = weight[cl] * ep;
      const auto& h = h_series_[cl];
      for (int d = 0; d <= max_degree; ++d)
        acc[static_cast<std::size_t>(d)] += w * h[static_cast<std::size_t>(d)];
    }
    std::vector<long> out(static_cast<std::size_t>(max_degree) + 1);
    Rat order(g_->size());
    for (int d = 0; d <= max_degree; ++d) {
      const CycNum& v = acc[static_cast<std::size_t>(d)];
      if (!v.is_rational()) throw math_error("isotypic dimension average is not rational");
      Rat q = v.rational_value() / order;
      if (denominator(q) != 1 || q < 0)
        throw math_error("isotypic dimension is not a nonnegative integer");
      out[static_cast<std::size_t>(d)] = q.convert_to<long>();
    }
    return out;
  }

  long isotypic_dim(const Character& chi, int p, int d) const {
    return isotypic_series(chi, p, d).back();
  }

 private:
  // det(I - t*M) as a coefficient vector c_0..c_n (c_0 = 1), by cofactor
  // expansion over univariate polynomials.
  std::vector<CycNum> char_rev(const CMatrix& mt) const {
    // entries: e_ij(t) = delta_ij - t*m_ij, degree <= 1
    struct UP {
      std::vector<CycNum> c;  // low degree first
    };
    auto mul = [&](const UP& a, const UP& b) {
      UP r;
      if (a.c.empty() || b.c.empty()) return r;
      r.c.assign(a.c.size() + b.c.size() - 1, CycNum::zero(m_));
      for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
          if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
      }
      return r;
    };
    std::vector<UP> entries(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        UP e;
        e.c.push_back(i == j ? CycNum::one(m_) : CycNum::zero(m_));
        e.c.push_back(-mt.at(i, j));
        entries[static_cast<std::size_t>(i) * n_ + j] = std::move(e);
      }
    struct Rec {
      int n;
      int m;
      const std::vector<UP>& entries;
      decltype(mul)& mult;
      UP run(int row, std::vector<int>& cols) {
        UP acc;
        if (cols.empty()) {
          acc.c.push_back(CycNum::one(m));
          return acc;
        }
        acc.c.assign(cols.size() + 1, CycNum::zero(m));
        for (std::size_t k = 0; k < cols.size(); ++k) {
          std::vector<int> rest;
          rest.reserve(cols.size() - 1);
          for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
          UP sub = run(row + 1, rest);
          UP term = mult(entries[static_cast<std::size_t>(row) * n + cols[k]], sub);
          for (std::size_t i = 0; i < term.c.size(); ++i) {
            if (k % 2) acc.c[i] -= term.c[i];
            else acc.c[i] += term.c[i];
          }
        }
        return acc;
      }
    } rec{n_, m_, entries, mul};
    std::vector<int> cols(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) cols[static_cast<std::size_t>(j)] = j;
    UP cp = rec.run(0, cols);
    cp.c.resize(static_cast<std::size_t>(n_) + 1, CycNum::zero(m_));
    return cp.c;
  }

  // h_d satisfies sum_{k=0..n} c_k h_{d-k} = 0 with h_0 = 1.
  void extend_h(int max_degree) const {
    for (std::size_t cl = 0; cl < classes_.size(); ++cl) {
      auto& h = h_series_[cl];
      if (h.empty()) h.push_back(CycNum::one(m_));
      const auto& c = classes_[cl];
      while (static_cast<int>(h.size()) <= max_degree) {
        int d = static_cast<int>(h.size());
        CycNum v = CycNum::zero(m_);
        for (int k = 1; k <= n_ && k <= d; ++k) {
          if (c[static_cast<std::size_t>(k)].is_zero()) continue;
          v += c[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(d - k)];
        }
        h.push_back(-v);
      }
    }
  }

  const ReflectionGroup* g_;
  int n_;
  int m_;
  std::vector<int> class_of_;
  std::vector<std::vector<CycNum>> classes_;            // c_0..c_n per class
  mutable std::vector<std::vector<CycNum>> h_series_;   // grown on demand
};

// Coefficients of t^shift / prod_i (1 - t^{degrees[i]}) up to max_degree.
inline std::vector<long> shifted_partition_series(const std::vector<int>& degrees, int shift,
                                                  int max_degree) {
  std::vector<long> s(static_cast<std::size_t>(max_degree) + 1, 0);
  if (shift > max_degree) return s;
  s[static_cast<std::size_t>(shift)] = 1;
  for (int d : degrees) {
    for (int k = d; k <= max_degree; ++k)
      s[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k - d)];
  }
  return s;
}

// Multiply a dimension series by prod_i (1 - t^{degrees[i]}); when the series
// is the Hilbert series of a free module over the invariant ring, the result
// is the generator-degree polynomial.
inline std::vector<long> free_module_numerator(const std::vector<long>& dims,
                                               const std::vector<int>& degrees) {
  std::vector<long> num(dims);
  for (int d : degrees) {
    for (int k = static_cast<int>(num.size()) - 1; k >= d; --k)
      num[static_cast<std::size_t>(k)] -= num[static_cast<std::size_t>(k - d)];
  }
  return num;
}

}  // namespace semiinv

#endif
