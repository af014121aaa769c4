#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lieder/errors.hpp"
#include "lieder/rational.hpp"

namespace lieder {

// Sparse coordinate vector: index -> nonzero coefficient. Entries equal to
// zero are never stored.
using SparseVec = std::map<int, Rational>;

inline bool vec_is_zero(const SparseVec& v) { return v.empty(); }

inline void vec_set(SparseVec& v, int i, const Rational& c) {
  if (c == 0)
    v.erase(i);
  else
    v[i] = c;
}

inline Rational vec_get(const SparseVec& v, int i) {
  auto it = v.find(i);
  return it == v.end() ? Rational(0) : it->second;
}

// dst += c * src
inline void vec_axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
  if (c == 0) return;
  for (const auto& [i, x] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      dst.emplace(i, c * x);
    } else {
      it->second += c * x;
      if (it->second == 0) dst.erase(it);
    }
  }
}

inline SparseVec vec_scaled(const SparseVec& v, const Rational& c) {
  SparseVec out;
  if (c == 0) return out;
  for (const auto& [i, x] : v) out.emplace(i, c * x);
  return out;
}

inline void vec_scale(SparseVec& v, const Rational& c) {
  if (c == 0) {
    v.clear();
    return;
  }
  for (auto& [i, x] : v) x *= c;
}

inline SparseVec vec_sum(const SparseVec& a, const SparseVec& b) {
  SparseVec out = a;
  vec_axpy(out, 1, b);
  return out;
}

// Exact rational matrix with sparse row storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i][i] = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw DimensionMismatch("ragged matrix rows");
      for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational at(int r, int c) const { return vec_get(data_[r], c); }
  void set(int r, int c, const Rational& v) { vec_set(data_[r], c, v); }
  const SparseVec& row(int r) const { return data_[r]; }
  SparseVec& row_mut(int r) { return data_[r]; }

  // w = M v
  SparseVec apply(const SparseVec& v) const {
    SparseVec w;
    for (int r = 0; r < rows_; ++r) {
      Rational acc = 0;
      const SparseVec& mr = data_[r];
      // iterate over the shorter support
      if (mr.size() <= v.size()) {
        for (const auto& [c, x] : mr) {
          auto it = v.find(c);
          if (it != v.end()) acc += x * it->second;
        }
      } else {
        for (const auto& [c, x] : v) {
          auto it = mr.find(c);
          if (it != mr.end()) acc += x * it->second;
        }
      }
      if (acc != 0) w[r] = acc;
    }
    return w;
  }

  Matrix multiply(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [k, x] : data_[r])
        for (const auto& [c, y] : o.data_[k]) {
          auto it = out.data_[r].find(c);
          if (it == out.data_[r].end()) {
            out.data_[r].emplace(c, x * y);
          } else {
            it->second += x * y;
            if (it->second == 0) out.data_[r].erase(it);
          }
        }
    return out;
  }

  Matrix plus(const Matrix& o, const Rational& scale = 1) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix sum shape");
    Matrix out = *this;
    for (int r = 0; r < rows_; ++r) vec_axpy(out.data_[r], scale, o.data_[r]);
    return out;
  }

  Matrix scaled(const Rational& c) const {
    Matrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r) out.data_[r] = vec_scaled(data_[r], c);
    return out;
  }

  void add_diagonal(const Rational& c) {
    for (int r = 0; r < rows_ && r < cols_; ++r) {
      auto it = data_[r].find(r);
      if (it == data_[r].end()) {
        if (c != 0) data_[r].emplace(r, c);
      } else {
        it->second += c;
        if (it->second == 0) data_[r].erase(it);
      }
    }
  }

  Rational trace() const {
    Rational t = 0;
    for (int r = 0; r < rows_ && r < cols_; ++r) t += at(r, r);
    return t;
  }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

// Incremental Gauss-Jordan elimination. Pivot rows are kept fully reduced
// against each other at all times, so the collected rows are the unique
// reduced row echelon form of everything fed in.
class RrefEngine {
 public:
  explicit RrefEngine(int cols) : cols_(cols) {}

  void add_row(SparseVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return;
    int lead = row.begin()->first;
    Rational inv = 1 / row.begin()->second;
    vec_scale(row, inv);
    for (auto& [col, prow] : pivots_) {
      auto it = prow.find(lead);
      if (it != prow.end()) {
        Rational c = -it->second;
        vec_axpy(prow, c, row);
      }
    }
    pivots_.emplace(lead, std::move(row));
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }
  const std::map<int, SparseVec>& pivot_rows() const { return pivots_; }

  std::vector<int> pivot_cols() const {
    std::vector<int> out;
    out.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_) out.push_back(c);
    return out;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Residual of v after eliminating every pivot coordinate.
  SparseVec reduce(SparseVec v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto pit = pivots_.find(it->first);
      if (pit == pivots_.end()) {
        ++it;
        continue;
      }
      Rational c = -it->second;
      vec_axpy(v, c, pit->second);
      it = v.upper_bound(pit->first);
    }
    return v;
  }

 private:
  int cols_;
  std::map<int, SparseVec> pivots_;  // pivot column -> reduced row
};

struct RrefResult {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivots;
};

inline RrefResult rref(const Matrix& m) {
  RrefEngine eng(m.cols());
  for (int r = 0; r < m.rows(); ++r) eng.add_row(m.row(r));
  RrefResult out;
  out.reduced = Matrix(m.rows(), m.cols());
  int r = 0;
  for (const auto& [col, row] : eng.pivot_rows()) {
    out.reduced.row_mut(r++) = row;
    out.pivots.push_back(col);
  }
  out.rank = eng.rank();
  return out;
}

// A linear subspace of Q^n, held as the unique reduced row echelon basis so
// equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  Subspace(int ambient, const std::vector<SparseVec>& spanning)
      : ambient_(ambient) {
    RrefEngine eng(ambient);
    for (const auto& v : spanning) eng.add_row(v);
    for (const auto& [col, row] : eng.pivot_rows()) basis_.push_back(row);
  }

  static Subspace full(int ambient) {
    Subspace s(ambient);
    for (int i = 0; i < ambient; ++i) {
      SparseVec v;
      v[i] = 1;
      s.basis_.push_back(std::move(v));
    }
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& basis() const { return basis_; }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  SparseVec reduce(SparseVec v) const {
    for (const auto& b : basis_) {
      int lead = b.begin()->first;
      auto it = v.find(lead);
      if (it != v.end()) {
        Rational c = -it->second;
        vec_axpy(v, c, b);
      }
    }
    return v;
  }

  // Coefficients of v on the stored basis, if v lies in the subspace.
  std::optional<std::vector<Rational>> coordinates(SparseVec v) const {
    std::vector<Rational> coords(basis_.size(), Rational(0));
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      int lead = basis_[k].begin()->first;
      auto it = v.find(lead);
      if (it != v.end()) {
        coords[k] = it->second;
        Rational c = -it->second;
        vec_axpy(v, c, basis_[k]);
      }
    }
    if (!v.empty()) return std::nullopt;
    return coords;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  int ambient_ = 0;
  std::vector<SparseVec> basis_;  // RREF rows, ascending pivot columns
};

// Exact null space {v : m v = 0}, dimension cols - rank.
inline Subspace kernel_basis(const Matrix& m) {
  RrefEngine eng(m.cols());
  for (int r = 0; r < m.rows(); ++r) eng.add_row(m.row(r));
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : eng.pivot_cols()) is_pivot[c] = true;
  std::vector<SparseVec> vecs;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    v[f] = 1;
    for (const auto& [pc, row] : eng.pivot_rows()) {
      auto it = row.find(f);
      if (it != row.end()) v[pc] = -it->second;
    }
    vecs.push_back(std::move(v));
  }
  return Subspace(m.cols(), vecs);
}

// Kernel of a linear system handed over as sparse rows.
inline Subspace kernel_of_rows(int cols, const std::vector<SparseVec>& rows) {
  RrefEngine eng(cols);
  for (const auto& r : rows) eng.add_row(r);
  std::vector<bool> is_pivot(cols, false);
  for (int c : eng.pivot_cols()) is_pivot[c] = true;
  std::vector<SparseVec> vecs;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    v[f] = 1;
    for (const auto& [pc, row] : eng.pivot_rows()) {
      auto it = row.find(f);
      if (it != row.end()) v[pc] = -it->second;
    }
    vecs.push_back(std::move(v));
  }
  return Subspace(cols, vecs);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("subspace intersection: ambient dimensions differ");
  if (a.dim() == a.ambient()) return b;
  if (b.dim() == b.ambient()) return a;
  int da = a.dim(), db = b.dim();
  // unknowns: u in Q^da, v in Q^db with sum_a u_a A_a = sum_b v_b B_b
  std::vector<SparseVec> rows(a.ambient());
  for (int k = 0; k < da; ++k)
    for (const auto& [i, x] : a.basis()[k]) vec_set(rows[i], k, x);
  for (int k = 0; k < db; ++k)
    for (const auto& [i, x] : b.basis()[k]) vec_set(rows[i], da + k, -x);
  Subspace ker = kernel_of_rows(da + db, rows);
  std::vector<SparseVec> spanning;
  for (const auto& sol : ker.basis()) {
    SparseVec x;
    for (const auto& [k, c] : sol) {
      if (k >= da) break;
      vec_axpy(x, c, a.basis()[k]);
    }
    if (!x.empty()) spanning.push_back(std::move(x));
  }
  return Subspace(a.ambient(), spanning);
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("subspace sum: ambient dimensions differ");
  std::vector<SparseVec> spanning = a.basis();
  spanning.insert(spanning.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient(), spanning);
}

// Inverse through Gauss-Jordan on the augmented matrix.
inline Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("inverse of a non-square matrix");
  int n = m.rows();
  RrefEngine eng(2 * n);
  for (int r = 0; r < n; ++r) {
    SparseVec row = m.row(r);
    row[n + r] = 1;
    eng.add_row(std::move(row));
  }
  Matrix inv(n, n);
  for (const auto& [pc, row] : eng.pivot_rows()) {
    if (pc >= n) throw DimensionMismatch("matrix is singular");
    for (const auto& [c, x] : row)
      if (c >= n) inv.set(pc, c - n, x);
  }
  if (eng.rank() != n) throw DimensionMismatch("matrix is singular");
  return inv;
}

// Monic characteristic polynomial by the Faddeev-LeVerrier recursion.
// Returned ascending: coeffs[k] is the coefficient of x^k, coeffs[n] = 1.
inline std::vector<Rational> char_poly(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  int n = m.rows();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  Matrix acc = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    acc = m.multiply(acc);
    Rational c = -acc.trace() / k;
    coeffs[n - k] = c;
    if (k < n) acc.add_diagonal(c);
  }
  return coeffs;
}

inline Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace detail {

// All positive divisors by trial division. Factors above the trial bound are
// kept whole, which bounds the enumeration on adversarial inputs; structure
// constants in this library keep these integers tiny.
inline std::vector<Integer> positive_divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<std::pair<Integer, int>> factors;
  Integer d = 2;
  const Integer bound = 1000000;
  while (d * d <= v && d <= bound) {
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<Integer> divisors{Integer(1)};
  for (const auto& [p, e] : factors) {
    std::size_t count = divisors.size();
    Integer pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t k = 0; k < count; ++k) divisors.push_back(divisors[k] * pw);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  return divisors;
}

}  // namespace detail

// All rational roots of a monic rational polynomial, via the rational root
// theorem after clearing denominators. Irrational roots are absent.
inline std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  Integer lcm = 1;
  for (const auto& c : coeffs) {
    Integer den = c.get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  std::vector<Integer> ic(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rational scaled = coeffs[i] * Rational(lcm);
    ic[i] = scaled.get_num();
  }
  std::vector<Rational> roots;
  int low = 0;
  while (low <= n && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low > n) return roots;  // zero polynomial cannot happen for monic input
  std::vector<Integer> ps = detail::positive_divisors(ic[low]);
  std::vector<Integer> qs = detail::positive_divisors(ic[n]);
  for (const Integer& p : ps)
    for (const Integer& q : qs) {
      if (gcd(p, q) != 1) continue;
      for (int s : {1, -1}) {
        Rational cand(s * p, q);
        cand.canonicalize();
        if (eval_poly(coeffs, cand) == 0) roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) {
    int c = cmp(a.get_num(), b.get_num());
    if (c != 0) return c < 0;
    return a.get_den() < b.get_den();
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

struct EigenPair {
  Rational value;
  Subspace space;
};

// Rational eigenvalues with exact eigenspaces, ordered by (numerator,
// denominator). Eigenvalues outside Q are silently absent.
inline std::vector<EigenPair> rational_eigen_pairs(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("eigen pairs of a non-square matrix");
  std::vector<EigenPair> out;
  for (const Rational& lam : rational_roots(char_poly(m))) {
    Matrix shifted = m;
    shifted.add_diagonal(-lam);
    Subspace es = kernel_basis(shifted);
    if (es.dim() > 0) out.push_back({lam, std::move(es)});
  }
  return out;
}

}  // namespace lieder
