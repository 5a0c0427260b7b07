#ifndef SEMIINV_CHARACTER_HPP
#define SEMIINV_CHARACTER_HPP

#include <optional>

#include "semiinv/group.hpp"

namespace semiinv {

// A multiplicative (degree-1) character of a closed group.  Values are
// cached per element index and validated as roots of unity; explicit tables
// are additionally checked to be homomorphisms over all pairs.
class Character {
 public:
  static Character det_power(const ReflectionGroup& g, long k) {
    Character chi;
    chi.values_.reserve(static_cast<std::size_t>(g.size()));
    for (long i = 0; i < g.size(); ++i)
      chi.values_.push_back(g.det_of(static_cast<int>(i)).pow(k));
    chi.det_power_ = k;
    chi.label_ = k == 0 ? "det^0" : (k == 1 ? "det" : "det^" + std::to_string(k));
    chi.validate_values(g);
    // dets are multiplicative, so det^k is a homomorphism by construction;
    // the generator-pair check still guards the cached det data.
    chi.validate_on_generator_pairs(g);
    return chi;
  }

  static Character trivial(const ReflectionGroup& g) { return det_power(g, 0); }

  static Character from_table(const ReflectionGroup& g, std::vector<CycNum> values,
                              std::string label = "table") {
    if (static_cast<long>(values.size()) != g.size())
      throw input_error("character table needs one value per group element");
    Character chi;
    chi.values_ = std::move(values);
    chi.label_ = std::move(label);
    chi.validate_values(g);
    // exhaustive homomorphism check over all pairs
    for (long i = 0; i < g.size(); ++i)
      for (long j = 0; j < g.size(); ++j) {
        int k = g.compose(static_cast<int>(i), static_cast<int>(j));
        if (chi.values_[static_cast<std::size_t>(k)] !=
            chi.values_[static_cast<std::size_t>(i)] * chi.values_[static_cast<std::size_t>(j)])
          throw input_error("character table is not a homomorphism");
      }
    return chi;
  }

  // Build a character from values on the generators, extended along the BFS
  // words; the result is validated like an explicit table.
  static Character from_generator_values(const ReflectionGroup& g,
                                         const std::vector<CycNum>& gen_values,
                                         std::string label = "table") {
    if (static_cast<int>(gen_values.size()) != g.num_generators())
      throw input_error("need one character value per generator");
    std::vector<CycNum> values;
    values.reserve(static_cast<std::size_t>(g.size()));
    for (long i = 0; i < g.size(); ++i) {
      CycNum v = CycNum::one(g.conductor());
      for (int w : g.element(static_cast<int>(i)).word) v *= gen_values[static_cast<std::size_t>(w)];
      values.push_back(std::move(v));
    }
    return from_table(g, std::move(values), std::move(label));
  }

  const CycNum& value(int i) const { return values_[static_cast<std::size_t>(i)]; }
  // Character values are roots of unity, so the inverse is the conjugate.
  CycNum value_inverse(int i) const { return values_[static_cast<std::size_t>(i)].conjugate(); }

  const std::string& label() const { return label_; }
  std::optional<long> det_power_kind() const { return det_power_; }
  long size() const { return static_cast<long>(values_.size()); }

  bool is_trivial() const {
    for (const CycNum& v : values_)
      if (!v.is_one()) return false;
    return true;
  }

  // Pointwise product with det^k (used for the chi*det twists).
  Character times_det(const ReflectionGroup& g, long k = 1) const {
    Character chi;
    chi.values_.reserve(values_.size());
    for (long i = 0; i < g.size(); ++i)
      chi.values_.push_back(values_[static_cast<std::size_t>(i)] *
                            g.det_of(static_cast<int>(i)).pow(k));
    if (det_power_) chi.det_power_ = *det_power_ + k;
    chi.label_ = label_ + (k == 1 ? "*det" : "*det^" + std::to_string(k));
    chi.validate_values(g);
    chi.validate_on_generator_pairs(g);
    return chi;
  }

  Character inverse(const ReflectionGroup& g) const {
    Character chi;
    chi.values_.reserve(values_.size());
    for (const CycNum& v : values_) chi.values_.push_back(v.conjugate());
    if (det_power_) chi.det_power_ = -*det_power_;
    chi.label_ = label_ + "^-1";
    chi.validate_values(g);
    chi.validate_on_generator_pairs(g);
    return chi;
  }

  friend bool operator==(const Character& a, const Character& b) {
    return a.values_ == b.values_;
  }

 private:
  void validate_values(const ReflectionGroup& g) const {
    if (!values_[0].is_one()) throw input_error("character of the identity must be 1");
    for (long i = 0; i < g.size(); ++i) {
      if (!values_[static_cast<std::size_t>(i)].pow(g.order_of(static_cast<int>(i))).is_one())
        throw input_error("character value is not a root of unity of the element order");
    }
  }

  // chi(g_j * h) = chi(g_j) chi(h) for all generators g_j and elements h
  // implies the homomorphism property on all pairs by word induction.
  void validate_on_generator_pairs(const ReflectionGroup& g) const {
    for (long h = 0; h < g.size(); ++h)
      for (int j = 0; j < g.num_generators(); ++j) {
        int gh = g.right_by_generator(static_cast<int>(h), j);
        int gj = g.right_by_generator(0, j);
        if (values_[static_cast<std::size_t>(gh)] !=
            values_[static_cast<std::size_t>(h)] * values_[static_cast<std::size_t>(gj)])
          throw input_error("character is not multiplicative");
      }
  }

  std::vector<CycNum> values_;
  std::optional<long> det_power_;
  std::string label_;
};

// The least a with 0 <= a < o(s_H) and chi(s_H) = det(s_H)^{-a}.
inline int a_H(const ReflectionGroup& g, const Hyperplane& h, const Character& chi) {
  const CycNum& chi_s = chi.value(h.stab_generator);
  CycNum det_inv = g.det_of(h.stab_generator).conjugate();  // det^{-1}, a root of unity
  CycNum p = CycNum::one(g.conductor());
  for (int a = 0; a < h.stab_order; ++a) {
    if (chi_s == p) return a;
    p *= det_inv;
  }
  throw math_error("no exponent a with chi(s_H) = det(s_H)^{-a}; corrupt character");
}

}  // namespace semiinv

#endif
