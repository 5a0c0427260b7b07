#ifndef SEMIINV_CYCLOTOMIC_HPP
#define SEMIINV_CYCLOTOMIC_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "semiinv/errors.hpp"
#include "semiinv/rational.hpp"

namespace semiinv {

namespace detail {

// Dense univariate polynomial over Rat, low degree first.  Only used to set
// up cyclotomic reduction data.
using UPoly = std::vector<Rat>;

inline void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  utrim(c);
  return c;
}

// Exact quotient; the inputs here always divide evenly.
inline UPoly udiv_exact(UPoly num, const UPoly& den) {
  utrim(num);
  if (den.empty()) throw math_error("univariate division by zero");
  UPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
  while (num.size() >= den.size()) {
    Rat c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    utrim(num);
    if (num.empty()) break;
  }
  if (!num.empty()) throw math_error("univariate division left a remainder");
  return q;
}

inline int euler_phi(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Reduction data for one conductor, built once and shared.
struct CycTable {
  int m = 1;
  int phi = 1;
  UPoly cyclo;  // the m-th cyclotomic polynomial, monic, degree phi
  // rep[k] = canonical coordinates of zeta^k in the basis 1, zeta, ..., zeta^{phi-1}
  std::vector<std::vector<Rat>> rep;
  std::vector<std::complex<double>> roots;  // zeta^k as complex doubles

  explicit CycTable(int conductor) : m(conductor) {
    if (m < 1) throw input_error("conductor must be positive");
    cyclo = cyclotomic_poly(m);
    phi = static_cast<int>(cyclo.size()) - 1;
    rep.resize(m);
    std::vector<Rat> cur(phi, Rat(0));
    for (int k = 0; k < m; ++k) {
      if (k == 0) {
        if (phi > 0) cur[0] = 1;
      } else {
        // multiply by zeta: shift up, fold the overflow with the monic cyclo
        std::vector<Rat> next(phi, Rat(0));
        Rat top = cur.empty() ? Rat(0) : cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
          for (int i = 0; i < phi; ++i) next[i] -= top * cyclo[i];
        cur = std::move(next);
      }
      rep[k] = cur;
    }
    roots.resize(m);
    const double two_pi = 6.283185307179586476925286766559;
    for (int k = 0; k < m; ++k)
      roots[k] = std::polar(1.0, two_pi * k / m);
  }

  static UPoly cyclotomic_poly(int n) {
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    UPoly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    if (n == 1) return num;
    UPoly den{Rat(1)};
    for (int d = 1; d < n; ++d)
      if (n % d == 0) den = umul(den, cyclotomic_poly(d));
    return udiv_exact(std::move(num), den);
  }
};

inline const CycTable& cyc_table(int m) {
  static std::mutex mu;
  static std::map<int, CycTable> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(m);
  if (it == tables.end()) it = tables.emplace(m, CycTable(m)).first;
  return it->second;
}

}  // namespace detail

// An element of the cyclotomic field Q(zeta_m).  Stored as a length-m
// coefficient vector over zeta_m^0..zeta_m^{m-1}, kept in canonical reduced
// form (coefficients at indices >= phi(m) are zero) so that equality and
// zero tests are plain coordinate comparisons.
class CycNum {
 public:
  CycNum() : m_(1), c_(1, Rat(0)) {}

  explicit CycNum(int conductor) : m_(conductor), c_(conductor, Rat(0)) {
    check_conductor();
  }

  CycNum(int conductor, const Rat& r) : m_(conductor), c_(conductor, Rat(0)) {
    check_conductor();
    c_[0] = r;
  }

  // Raw coefficient vector over zeta^0..zeta^{m-1}; reduced on construction.
  CycNum(int conductor, std::vector<Rat> coeffs) : m_(conductor), c_(std::move(coeffs)) {
    check_conductor();
    if (static_cast<int>(c_.size()) != m_)
      throw input_error("coefficient vector length must equal the conductor");
    reduce();
  }

  static CycNum zero(int m) { return CycNum(m); }
  static CycNum one(int m) { return CycNum(m, Rat(1)); }

  static CycNum root_of_unity(int m, long k) {
    CycNum z(m);
    long r = ((k % m) + m) % m;
    z.c_[static_cast<std::size_t>(r)] = 1;
    z.reduce();
    return z;
  }

  int conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  // Value as a rational; only valid when is_rational().
  const Rat& rational_value() const {
    if (!is_rational()) throw math_error("CycNum is not rational");
    return c_[0];
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  // Deterministic representational order (not an algebraic order); used for
  // canonical sorting of output only.
  friend bool operator<(const CycNum& a, const CycNum& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

  CycNum operator-() const {
    CycNum r(*this);
    for (Rat& x : r.c_) x = -x;
    return r;
  }

  CycNum& operator+=(const CycNum& o) {
    match(o);
    for (int i = 0; i < m_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycNum& operator-=(const CycNum& o) {
    match(o);
    for (int i = 0; i < m_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    a.match(b);
    CycNum r(a.m_);
    // cyclic convolution: zeta^m = 1
    for (int i = 0; i < a.m_; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < a.m_; ++j) {
        if (b.c_[j] == 0) continue;
        int k = i + j;
        if (k >= a.m_) k -= a.m_;
        r.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    r.reduce();
    return r;
  }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  CycNum& operator*=(const Rat& s) {
    for (Rat& x : c_) x *= s;
    return *this;
  }
  friend CycNum operator*(CycNum a, const Rat& s) { return a *= s; }
  friend CycNum operator*(const Rat& s, CycNum a) { return a *= s; }

  CycNum inverse() const {
    if (is_zero()) throw math_error("division by zero in Q(zeta_m)");
    const auto& t = detail::cyc_table(m_);
    const int d = t.phi;
    if (is_rational()) return CycNum(m_, Rat(1) / c_[0]);
    // Solve (mult-by-a) x = 1 on the reduced basis, exactly over Q.
    std::vector<std::vector<Rat>> mat(d, std::vector<Rat>(d + 1, Rat(0)));
    for (int j = 0; j < d; ++j) {
      CycNum col = *this * CycNum::root_of_unity(m_, j);
      for (int i = 0; i < d; ++i) mat[i][j] = col.c_[i];
    }
    mat[0][d] = 1;
    for (int col = 0, row = 0; col < d && row < d; ++col) {
      int piv = -1;
      for (int i = row; i < d; ++i)
        if (mat[i][col] != 0) { piv = i; break; }
      if (piv < 0) throw math_error("singular multiplication matrix for a nonzero element");
      std::swap(mat[row], mat[piv]);
      Rat inv = Rat(1) / mat[row][col];
      for (int j = col; j <= d; ++j) mat[row][j] *= inv;
      for (int i = 0; i < d; ++i) {
        if (i == row || mat[i][col] == 0) continue;
        Rat f = mat[i][col];
        for (int j = col; j <= d; ++j) mat[i][j] -= f * mat[row][j];
      }
      ++row;
    }
    CycNum r(m_);
    for (int i = 0; i < d; ++i) r.c_[i] = mat[i][d];
    r.reduce();
    return r;
  }

  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
  CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

  CycNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc = CycNum::one(m_), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  // Galois conjugation zeta -> zeta^{-1}; coincides with complex conjugation
  // under the standard embedding.
  CycNum conjugate() const {
    CycNum r(m_);
    for (int k = 0; k < m_; ++k) {
      if (c_[k] == 0) continue;
      r.c_[(m_ - k) % m_] += c_[k];
    }
    r.reduce();
    return r;
  }

  // Evaluation at zeta_m = exp(2*pi*i/m).  Diagnostics only.
  std::complex<double> complex_embed() const {
    const auto& t = detail::cyc_table(m_);
    std::complex<double> z(0.0, 0.0);
    for (int k = 0; k < m_; ++k)
      if (c_[k] != 0) z += rat_double(c_[k]) * t.roots[k];
    return z;
  }

  // Multiplicative order if this is a root of unity, otherwise 0.
  long root_of_unity_order(long cap = 1 << 16) const {
    CycNum acc = *this;
    for (long k = 1; k <= cap; ++k) {
      if (acc.is_one()) return k;
      acc *= *this;
    }
    return 0;
  }

  // Fast injective encoding used for hashing and dedup keys.
  std::string key() const {
    std::ostringstream os;
    for (int i = 0; i < m_; ++i) {
      os << c_[i].str();
      os << ",";
    }
    return os.str();
  }

  // Readable form: plain rationals, otherwise a sum of z^k terms where z is
  // the primitive m-th root of unity.
  std::string str() const {
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < m_; ++k) {
      if (c_[k] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (k == 0) {
        os << c_[k].str();
        continue;
      }
      if (c_[k] != 1) os << "(" << c_[k].str() << ")";
      os << "z" << m_;
      if (k != 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  void check_conductor() const {
    if (m_ < 1) throw input_error("conductor must be positive");
  }

  void match(const CycNum& o) const {
    if (m_ != o.m_)
      throw input_error("conductor mismatch: " + std::to_string(m_) + " vs " +
                        std::to_string(o.m_));
  }

  // Canonical form: coefficients of zeta^k for k >= phi(m) folded down via
  // the cyclotomic polynomial.
  void reduce() {
    const auto& t = detail::cyc_table(m_);
    for (int k = m_ - 1; k >= t.phi; --k) {
      if (c_[k] == 0) continue;
      Rat v = std::move(c_[k]);
      c_[k] = 0;
      const auto& row = t.rep[k];
      for (int i = 0; i < t.phi; ++i)
        if (row[i] != 0) c_[i] += v * row[i];
    }
  }

  int m_;
  std::vector<Rat> c_;
};

inline int euler_phi(int m) { return detail::euler_phi(m); }

}  // namespace semiinv

#endif
