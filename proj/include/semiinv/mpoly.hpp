#ifndef SEMIINV_MPOLY_HPP
#define SEMIINV_MPOLY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "semiinv/cyclotomic.hpp"

namespace semiinv {

// Exponent vector of a monomial.
using Expo = std::vector<int>;

inline int expo_degree(const Expo& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Graded lexicographic order, largest first (so map iteration starts at the
// leading term).  Within one degree, x1 beats x2 beats ...
struct GrlexDesc {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

// Sparse multivariate polynomial over a fixed cyclotomic field.  Terms are
// kept in descending graded-lex order with no zero coefficients.
class MPoly {
 public:
  using TermMap = std::map<Expo, CycNum, GrlexDesc>;

  MPoly() : nvars_(0), m_(1) {}
  MPoly(int nvars, int conductor) : nvars_(nvars), m_(conductor) {
    if (nvars < 0) throw input_error("negative variable count");
  }

  static MPoly constant(int nvars, int conductor, const CycNum& c) {
    MPoly p(nvars, conductor);
    p.add_term(Expo(nvars, 0), c);
    return p;
  }
  static MPoly constant(int nvars, int conductor, const Rat& r) {
    return constant(nvars, conductor, CycNum(conductor, r));
  }
  static MPoly variable(int nvars, int conductor, int i, int power = 1) {
    MPoly p(nvars, conductor);
    Expo e(nvars, 0);
    e.at(i) = power;
    p.add_term(e, CycNum::one(conductor));
    return p;
  }
  static MPoly monomial(int nvars, int conductor, Expo e, const CycNum& c) {
    MPoly p(nvars, conductor);
    p.add_term(std::move(e), c);
    return p;
  }

  int nvars() const { return nvars_; }
  int conductor() const { return m_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const { return t_.empty() ? -1 : expo_degree(t_.begin()->first); }

  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = degree();
    for (const auto& [e, c] : t_)
      if (expo_degree(e) != d) return false;
    return true;
  }

  const Expo& leading_expo() const {
    if (t_.empty()) throw math_error("leading term of zero polynomial");
    return t_.begin()->first;
  }
  const CycNum& leading_coeff() const {
    if (t_.empty()) throw math_error("leading term of zero polynomial");
    return t_.begin()->second;
  }

  CycNum coeff(const Expo& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? CycNum::zero(m_) : it->second;
  }

  void add_term(Expo e, const CycNum& c) {
    if (static_cast<int>(e.size()) != nvars_) throw input_error("exponent length mismatch");
    if (c.conductor() != m_) throw input_error("conductor mismatch in polynomial term");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(std::move(e), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.m_ == b.m_ && a.t_ == b.t_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly operator-() const {
    MPoly r(nvars_, m_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    match(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    match(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.match(b);
    MPoly r(a.nvars_, a.m_);
    Expo e(a.nvars_, 0);
    for (const auto& [ea, ca] : a.t_) {
      for (const auto& [eb, cb] : b.t_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly& operator*=(const CycNum& s) {
    if (s.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
  }
  friend MPoly operator*(MPoly a, const CycNum& s) { return a *= s; }
  friend MPoly operator*(const CycNum& s, MPoly a) { return a *= s; }
  MPoly& operator*=(const Rat& s) { return *this *= CycNum(m_, s); }
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }

  MPoly derivative(int var) const {
    MPoly r(nvars_, m_);
    for (const auto& [e, c] : t_) {
      if (e[var] == 0) continue;
      Expo d = e;
      d[var] -= 1;
      r.add_term(std::move(d), c * Rat(e[var]));
    }
    return r;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      if (!first) os << " + ";
      first = false;
      bool constant_term = expo_degree(e) == 0;
      std::string cs = c.str();
      bool simple = c.is_rational();
      if (constant_term || !simple || cs != "1") {
        if (simple && !constant_term) os << cs << "*";
        else if (simple) os << cs;
        else os << "(" << cs << ")" << (constant_term ? "" : "*");
      }
      bool first_var = true;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!first_var) os << "*";
        first_var = false;
        if (static_cast<std::size_t>(i) < names.size()) os << names[i];
        else os << "x" << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void match(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw input_error("variable count mismatch");
    if (m_ != o.m_) throw input_error("conductor mismatch");
  }

  int nvars_;
  int m_;
  TermMap t_;
};

// Exact quotient num/den, or nothing when den does not divide num.  Never a
// truncated quotient: failures are detected via the graded-lex leading term.
inline std::optional<MPoly> exact_divide(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw math_error("exact_divide by zero polynomial");
  if (num.nvars() != den.nvars() || num.conductor() != den.conductor())
    throw input_error("exact_divide operand mismatch");
  MPoly r = num;
  MPoly q(num.nvars(), num.conductor());
  const Expo& lde = den.leading_expo();
  const CycNum& ldc = den.leading_coeff();
  const int n = num.nvars();
  Expo shift(n, 0);
  while (!r.is_zero()) {
    const Expo& lre = r.leading_expo();
    for (int i = 0; i < n; ++i) {
      if (lre[i] < lde[i]) return std::nullopt;
      shift[i] = lre[i] - lde[i];
    }
    CycNum c = r.leading_coeff() / ldc;
    q.add_term(shift, c);
    MPoly piece = den * c;
    // subtract c*x^shift*den from the remainder
    MPoly shifted(n, num.conductor());
    Expo e(n, 0);
    for (const auto& [ed, cd] : piece.terms()) {
      for (int i = 0; i < n; ++i) e[i] = ed[i] + shift[i];
      shifted.add_term(e, cd);
    }
    r -= shifted;
  }
  return q;
}

inline bool divides(const MPoly& den, const MPoly& num) {
  return exact_divide(num, den).has_value();
}

// The paper-style comparison f = c*g for a nonzero scalar c; returns the
// witness c when it holds.
inline std::optional<CycNum> eq_up_to_scalar(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  CycNum c = f.leading_coeff() / g.leading_coeff();
  if (f.leading_expo() != g.leading_expo()) return std::nullopt;
  if (f == g * c) return c;
  return std::nullopt;
}

// An invertible linear coordinate change x -> M x.
struct LinearChange {
  // rows*cols CycNum entries, row-major; must be square and invertible
  int n = 0;
  int m = 1;  // conductor
  std::vector<CycNum> a;

  const CycNum& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  CycNum& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }

  CycNum det() const {
    struct Rec {
      const LinearChange& c;
      CycNum run(int row, std::vector<int>& cols) const {
        if (cols.empty()) return CycNum::one(c.m);
        CycNum acc = CycNum::zero(c.m);
        for (std::size_t k = 0; k < cols.size(); ++k) {
          const CycNum& entry = c.at(row, cols[k]);
          if (entry.is_zero()) continue;
          std::vector<int> rest;
          rest.reserve(cols.size() - 1);
          for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
          CycNum sub = run(row + 1, rest) * entry;
          if (k % 2) acc -= sub;
          else acc += sub;
        }
        return acc;
      }
    } rec{*this};
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j;
    return rec.run(0, cols);
  }
};

inline void require_invertible(const LinearChange& c) {
  if (c.det().is_zero()) throw input_error("coordinate change matrix is singular");
}

namespace detail {

// Powers of the row forms of a substitution matrix, grown on demand.
struct RowPowerCache {
  std::vector<std::vector<MPoly>> pow;  // pow[i][k] = L_i^k

  explicit RowPowerCache(const LinearChange& c) : pow(c.n) {
    for (int i = 0; i < c.n; ++i) {
      MPoly row(c.n, c.m);
      for (int j = 0; j < c.n; ++j) {
        if (c.at(i, j).is_zero()) continue;
        row += MPoly::variable(c.n, c.m, j) * c.at(i, j);
      }
      pow[i].push_back(MPoly::constant(c.n, c.m, Rat(1)));
      pow[i].push_back(std::move(row));
    }
  }

  const MPoly& get(int i, int k) {
    auto& p = pow[i];
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * p[1]);
    return p[static_cast<std::size_t>(k)];
  }
};

}  // namespace detail

// Pullback f(x) -> f(Mx).
inline MPoly substitute(const MPoly& f, const LinearChange& c) {
  if (f.nvars() != c.n) throw input_error("substitute: dimension mismatch");
  if (f.conductor() != c.m) throw input_error("substitute: conductor mismatch");
  require_invertible(c);
  detail::RowPowerCache cache(c);
  MPoly out(f.nvars(), f.conductor());
  for (const auto& [e, coeff] : f.terms()) {
    MPoly term = MPoly::constant(f.nvars(), f.conductor(), Rat(1));
    for (int i = 0; i < f.nvars(); ++i)
      if (e[i] > 0) term *= cache.get(i, e[i]);
    out += term * coeff;
  }
  return out;
}

// Determinant of the matrix {d f_j / d x_i} of n polynomials in n variables.
inline MPoly jacobian_det(const std::vector<MPoly>& fs) {
  if (fs.empty()) throw input_error("jacobian_det of empty list");
  const int n = fs[0].nvars();
  if (static_cast<int>(fs.size()) != n)
    throw input_error("jacobian_det needs exactly nvars polynomials");
  std::vector<MPoly> mat;
  mat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mat.push_back(fs[static_cast<std::size_t>(j)].derivative(i));
  // cofactor expansion; n is small in every use here
  std::vector<int> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = j;
  struct Rec {
    int n;
    const std::vector<MPoly>& mat;
    MPoly run(int row, std::vector<int>& cols) {
      const int conductor = mat[0].conductor();
      if (cols.empty()) return MPoly::constant(n, conductor, Rat(1));
      MPoly acc(n, conductor);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        int j = cols[k];
        const MPoly& entry = mat[static_cast<std::size_t>(row) * n + j];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
          if (t != k) rest.push_back(cols[t]);
        MPoly sub = run(row + 1, rest);
        sub *= entry;
        if (k % 2) acc -= sub;
        else acc += sub;
      }
      return acc;
    }
  } rec{n, mat};
  return rec.run(0, cols);
}

}  // namespace semiinv

#endif
