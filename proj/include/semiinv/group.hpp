#ifndef SEMIINV_GROUP_HPP
#define SEMIINV_GROUP_HPP

#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiinv/linalg.hpp"
#include "semiinv/mpoly.hpp"

namespace semiinv {

struct GroupElement {
  CMatrix matrix;
  CycNum det;
  long order = 0;
  std::vector<int> word;  // generator indices whose product is this element
};

// A reflecting hyperplane of the group with its pointwise stabilizer.
struct Hyperplane {
  MPoly alpha;                    // normalized linear form with ker(alpha) = H
  std::vector<CycNum> normal;     // its coefficient vector
  int stab_order = 0;             // o(s_H)
  int stab_generator = -1;        // element index of the chosen s_H
  std::vector<int> stab_elements; // the cyclic group G_H (element indices)
};

// A closed finite unitary matrix group, generated breadth-first from its
// generators.  Element 0 is the identity; ordering is the deterministic BFS
// discovery order.  Immutable after construction.
class ReflectionGroup {
 public:
  static constexpr long kDefaultCap = 100000;

  ReflectionGroup(std::vector<CMatrix> generators, std::string name = "",
                  long cap = kDefaultCap)
      : name_(std::move(name)) {
    if (generators.empty()) throw input_error("no generators given");
    n_ = generators[0].rows;
    m_ = generators[0].m;
    for (const CMatrix& g : generators) {
      if (g.rows != n_ || g.cols != n_) throw input_error("generators must be square of one size");
      if (g.m != m_) throw input_error("generators must share one conductor");
      if (!(g.conj_transpose() * g).is_identity())
        throw input_error("non-unitary generator");
    }
    gens_ = std::move(generators);
    closure(cap);
    find_reflections();
  }

  const std::string& name() const { return name_; }
  int dim() const { return n_; }
  int conductor() const { return m_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  long size() const { return static_cast<long>(elements_.size()); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const CMatrix& matrix(int i) const { return elements_[static_cast<std::size_t>(i)].matrix; }
  const CycNum& det_of(int i) const { return elements_[static_cast<std::size_t>(i)].det; }
  long order_of(int i) const { return elements_[static_cast<std::size_t>(i)].order; }

  int index_of(const CMatrix& g) const {
    auto it = index_.find(g.key());
    return it == index_.end() ? -1 : it->second;
  }

  // Index of elements[i] * generator[j].
  int right_by_generator(int i, int j) const {
    return cayley_[static_cast<std::size_t>(i) * gens_.size() + static_cast<std::size_t>(j)];
  }

  // Index of elements[i] * elements[j], via j's generator word.
  int compose(int i, int j) const {
    int cur = i;
    for (int g : elements_[static_cast<std::size_t>(j)].word) cur = right_by_generator(cur, g);
    return cur;
  }

  int inverse_index(int i) const {
    return inverse_[static_cast<std::size_t>(i)];
  }

  // Element indices whose matrices are reflections: rank(g - I) = 1.
  const std::vector<int>& reflections() const { return reflections_; }

  // Indices of monomial matrices (one nonzero entry per row and column).
  const std::vector<int>& monomial_elements() const { return monomial_; }

  // True when the reflections of the group generate the whole group.
  bool is_generated_by_reflections() const { return reflection_generated_; }

  const std::vector<Hyperplane>& arrangement() const { return hyperplanes_; }

  int hyperplane_count() const { return static_cast<int>(hyperplanes_.size()); }

 private:
  void closure(long cap) {
    CMatrix id = CMatrix::identity(n_, m_);
    elements_.push_back(GroupElement{id, CycNum::one(m_), 1, {}});
    index_.emplace(id.key(), 0);
    std::vector<CycNum> gen_dets;
    gen_dets.reserve(gens_.size());
    for (const CMatrix& g : gens_) gen_dets.push_back(det(g));
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        CMatrix prod = elements_[static_cast<std::size_t>(i)].matrix * gens_[j];
        std::string key = prod.key();
        auto it = index_.find(key);
        int idx;
        if (it == index_.end()) {
          idx = static_cast<int>(elements_.size());
          if (idx >= cap)
            throw input_error("group closure exceeds the cap of " + std::to_string(cap));
          GroupElement e;
          e.matrix = std::move(prod);
          e.det = elements_[static_cast<std::size_t>(i)].det * gen_dets[j];
          e.word = elements_[static_cast<std::size_t>(i)].word;
          e.word.push_back(static_cast<int>(j));
          elements_.push_back(std::move(e));
          index_.emplace(std::move(key), idx);
          queue.push_back(idx);
        } else {
          idx = it->second;
        }
        cayley_.resize(elements_.size() * gens_.size(), -1);
        cayley_[static_cast<std::size_t>(i) * gens_.size() + j] = idx;
      }
    }
    // inverses via the conjugate transpose (elements are unitary)
    inverse_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      int inv = index_of(elements_[i].matrix.conj_transpose());
      if (inv < 0) throw math_error("inverse of a group element is missing from the closure");
      inverse_[i] = inv;
    }
    // element orders by index iteration
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      long ord = 1;
      int cur = static_cast<int>(i);
      while (cur != 0) {
        cur = compose(cur, static_cast<int>(i));
        ++ord;
        if (ord > size()) throw math_error("element order exceeds group size");
      }
      elements_[i].order = ord;
    }
    // monomial elements
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (is_monomial(elements_[i].matrix)) monomial_.push_back(static_cast<int>(i));
  }

  static bool is_monomial(const CMatrix& g) {
    std::vector<int> col_used(static_cast<std::size_t>(g.cols), 0);
    for (int i = 0; i < g.rows; ++i) {
      int nnz = 0;
      for (int j = 0; j < g.cols; ++j) {
        if (!g.at(i, j).is_zero()) {
          ++nnz;
          ++col_used[static_cast<std::size_t>(j)];
        }
      }
      if (nnz != 1) return false;
    }
    for (int c : col_used)
      if (c != 1) return false;
    return true;
  }

  void find_reflections() {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
      CMatrix d = elements_[i].matrix;
      for (int k = 0; k < n_; ++k) d.at(k, k) -= CycNum::one(m_);
      if (rank(d) == 1) reflections_.push_back(static_cast<int>(i));
    }
    build_arrangement();
    // does the reflection set generate the whole group?
    std::vector<char> seen(elements_.size(), 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    long count = 1;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int r : reflections_) {
        int k = compose(i, r);
        if (!seen[static_cast<std::size_t>(k)]) {
          seen[static_cast<std::size_t>(k)] = 1;
          ++count;
          queue.push_back(k);
        }
      }
    }
    reflection_generated_ = (count == size());
  }

  void build_arrangement() {
    struct Bucket {
      std::vector<CycNum> normal;
      std::vector<int> members;
    };
    std::map<std::string, Bucket> buckets;
    for (int r : reflections_) {
      std::vector<CycNum> normal = reflection_normal(r);
      std::string key;
      for (const CycNum& x : normal) key += x.key() + "|";
      auto& b = buckets[key];
      if (b.members.empty()) b.normal = normal;
      b.members.push_back(r);
    }
    for (auto& [key, b] : buckets) {
      Hyperplane h;
      h.normal = b.normal;
      MPoly alpha(n_, m_);
      for (int j = 0; j < n_; ++j) {
        if (b.normal[static_cast<std::size_t>(j)].is_zero()) continue;
        alpha += MPoly::variable(n_, m_, j) * b.normal[static_cast<std::size_t>(j)];
      }
      h.alpha = std::move(alpha);
      h.stab_elements.push_back(0);
      for (int r : b.members) h.stab_elements.push_back(r);
      std::sort(h.stab_elements.begin(), h.stab_elements.end());
      h.stab_order = static_cast<int>(h.stab_elements.size());
      h.stab_generator = choose_stab_generator(h);
      hyperplanes_.push_back(std::move(h));
    }
    std::sort(hyperplanes_.begin(), hyperplanes_.end(),
              [](const Hyperplane& a, const Hyperplane& b) {
                return std::lexicographical_compare(a.normal.begin(), a.normal.end(),
                                                    b.normal.begin(), b.normal.end());
              });
  }

  // Coefficient vector of a linear form cutting out the fixed hyperplane of
  // reflection r: any nonzero row of (g - I), normalized so the first
  // nonzero coordinate is 1.
  std::vector<CycNum> reflection_normal(int r) const {
    const CMatrix& g = elements_[static_cast<std::size_t>(r)].matrix;
    for (int i = 0; i < n_; ++i) {
      std::vector<CycNum> row;
      row.reserve(static_cast<std::size_t>(n_));
      bool nonzero = false;
      for (int j = 0; j < n_; ++j) {
        CycNum v = g.at(i, j);
        if (i == j) v -= CycNum::one(m_);
        if (!v.is_zero()) nonzero = true;
        row.push_back(std::move(v));
      }
      if (!nonzero) continue;
      CycNum lead = CycNum::zero(m_);
      for (const CycNum& v : row)
        if (!v.is_zero()) { lead = v; break; }
      CycNum inv = lead.inverse();
      for (CycNum& v : row) v *= inv;
      return row;
    }
    throw math_error("reflection equals the identity");
  }

  // The generator of G_H whose determinant is the canonical primitive root
  // of unity of order o(s_H); falls back to the lowest-index generator when
  // that root is not a power of zeta_m.
  int choose_stab_generator(const Hyperplane& h) const {
    const int o = h.stab_order;
    if (m_ % o == 0) {
      CycNum target = CycNum::root_of_unity(m_, m_ / o);
      for (int i : h.stab_elements)
        if (i != 0 && elements_[static_cast<std::size_t>(i)].order == o &&
            elements_[static_cast<std::size_t>(i)].det == target)
          return i;
    }
    for (int i : h.stab_elements)
      if (i != 0 && elements_[static_cast<std::size_t>(i)].order == o) return i;
    throw math_error("pointwise stabilizer is not cyclic");
  }

  std::string name_;
  int n_ = 0;
  int m_ = 1;
  std::vector<CMatrix> gens_;
  std::vector<GroupElement> elements_;
  std::vector<int> cayley_;
  std::vector<int> inverse_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> reflections_;
  std::vector<int> monomial_;
  std::vector<Hyperplane> hyperplanes_;
  bool reflection_generated_ = false;
};

}  // namespace semiinv

#endif
