#pragma once

// Exact integer linear algebra used throughout the library: dense matrices,
// Bareiss determinants, Smith-style invariant factors, integer kernels and
// basis completion. Everything is exact; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace kirby {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
T t_abs(const T& x) {
  return x < 0 ? T(-x) : x;
}

inline int to_int(const Int& v) { return v.convert_to<int>(); }

template <class T>
T t_gcd(const T& a, const T& b) {
  if constexpr (std::is_integral_v<T>) {
    return std::gcd(a, b);
  } else {
    return boost::multiprecision::gcd(a, b);
  }
}

// Dense row-major matrix over an exact integer type.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transposed() const {
    Mat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  std::vector<T> col(int c) const {
    std::vector<T> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row_i -= q * row_j
  void row_sub(int i, int j, const T& q) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) -= q * (*this)(j, c);
  }
  // col_i -= q * col_j
  void col_sub(int i, int j, const T& q) {
    for (int r = 0; r < rows_; ++r) (*this)(r, i) -= q * (*this)(r, j);
  }
  void negate_col(int i) {
    for (int r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw error("mat_mul: dimension mismatch");
  Mat<T> m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& a, const std::vector<T>& x) {
  if (a.cols() != int(x.size())) throw error("mat_vec: dimension mismatch");
  std::vector<T> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    T acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

// Fraction-free Bareiss elimination. Exact for any commutative integer type.
template <class T>
T det_bareiss(Mat<T> b) {
  if (b.rows() != b.cols()) throw error("det: matrix not square");
  const int n = b.rows();
  if (n == 0) return T(1);
  T prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (b(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (b(i, k) != 0) {
          r = i;
          break;
        }
      if (r < 0) return T(0);
      b.swap_rows(k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        b(i, j) = (b(k, k) * b(i, j) - b(i, k) * b(k, j)) / prev;
      b(i, k) = 0;
    }
    prev = b(k, k);
  }
  T d = b(n - 1, n - 1);
  return sign < 0 ? T(-d) : d;
}

// Smith invariant factors of an arbitrary integer matrix (all of them,
// including 1s; positive; each divides the next). Row/column elimination
// with smallest-pivot selection, then the diagonal divisibility fix.
template <class T>
std::vector<T> invariant_factors(Mat<T> w) {
  const int r = w.rows(), c = w.cols();
  std::vector<T> diag;
  int t = 0;
  while (t < r && t < c) {
    // locate smallest nonzero entry in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (w(i, j) != 0 &&
            (pi < 0 || t_abs(w(i, j)) < t_abs(w(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (w(i, t) == 0) continue;
        T q = w(i, t) / w(t, t);
        if (q != 0) w.row_sub(i, t, q);
        if (w(i, t) != 0) {
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (w(t, j) == 0) continue;
        T q = w(t, j) / w(t, t);
        if (q != 0) w.col_sub(j, t, q);
        if (w(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
    }
    diag.push_back(t_abs(w(t, t)));
    ++t;
  }
  // diag(a, b) is equivalent to diag(gcd, lcm)
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        T g = t_gcd(diag[i], diag[j]);
        T l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  return diag;
}

template <class T>
int rank_of(const Mat<T>& m) {
  return int(invariant_factors(m).size());
}

// Basis of { x : A x = 0 } as matrix columns, by unimodular column
// elimination left to right. The pivot choice (smallest |entry|, leftmost on
// ties) is part of the contract: downstream intersection-form computations
// are checked entry-for-entry against frozen values.
template <class T>
Mat<T> kernel_basis(Mat<T> w) {
  const int r = w.rows(), c = w.cols();
  Mat<T> v = Mat<T>::identity(c);
  int pc = 0;
  for (int row = 0; row < r && pc < c; ++row) {
    // Euclidean reduction across columns pc..c-1 on this row
    for (;;) {
      int p = -1;
      for (int j = pc; j < c; ++j)
        if (w(row, j) != 0 && (p < 0 || t_abs(w(row, j)) < t_abs(w(row, p))))
          p = j;
      if (p < 0) break;  // row has no pivot; move on
      w.swap_cols(pc, p);
      v.swap_cols(pc, p);
      bool done = true;
      for (int k = pc + 1; k < c; ++k) {
        if (w(row, k) == 0) continue;
        T q = w(row, k) / w(row, pc);
        if (q != 0) {
          w.col_sub(k, pc, q);
          v.col_sub(k, pc, q);
        }
        if (w(row, k) != 0) done = false;
      }
      if (done) {
        ++pc;
        break;
      }
    }
  }
  Mat<T> ker(c, c - pc);
  for (int j = pc; j < c; ++j)
    for (int i = 0; i < c; ++i) ker(i, j - pc) = v(i, j);
  return ker;
}

// Inverse of a matrix with determinant ±1, by rational Gauss-Jordan.
inline Mat<Int> inverse_unimodular(const Mat<Int>& u) {
  if (u.rows() != u.cols()) throw error("inverse: matrix not square");
  const int n = u.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(u(i, j));
    a[i][n + i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw error("inverse: matrix is singular");
    std::swap(a[k], a[p]);
    Rat piv = a[k][k];
    for (int j = 0; j < 2 * n; ++j) a[k][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  Mat<Int> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& q = a[i][n + j];
      if (boost::multiprecision::denominator(q) != 1)
        throw error("inverse: matrix is not unimodular");
      inv(i, j) = boost::multiprecision::numerator(q);
    }
  return inv;
}

// Unimodular matrix whose first column is the given primitive vector.
inline Mat<Int> complete_primitive(const std::vector<Int>& x) {
  const int n = int(x.size());
  if (n == 0) throw error("complete_primitive: empty vector");
  Mat<Int> m = Mat<Int>::identity(n);
  std::vector<Int> w = x;
  // reduce w to e1 by elementary row ops, applying inverses to m's columns
  for (;;) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (w[i] != 0 && (p < 0 || t_abs(w[i]) < t_abs(w[p]))) p = i;
    if (p < 0) throw error("complete_primitive: zero vector");
    if (p != 0) {
      std::swap(w[0], w[p]);
      m.swap_cols(0, p);
    }
    bool done = true;
    for (int i = 1; i < n; ++i) {
      if (w[i] == 0) continue;
      Int q = w[i] / w[0];
      if (q != 0) {
        w[i] -= q * w[0];
        // inverse of (row_i -= q row_0) acts on columns: col_0 += q col_i
        for (int r = 0; r < n; ++r) m(r, 0) += q * m(r, i);
      }
      if (w[i] != 0) done = false;
    }
    if (done) break;
  }
  if (w[0] == -1) {
    w[0] = 1;
    m.negate_col(0);
  }
  if (w[0] != 1) throw error("complete_primitive: vector is not primitive");
  return m;
}

inline bool is_primitive(const std::vector<Int>& x) {
  Int g = 0;
  for (const Int& e : x) g = t_gcd(g, e);
  return g == 1;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& q) {
  return floor_div(boost::multiprecision::numerator(q),
                   boost::multiprecision::denominator(q));
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

// floor(sqrt(q)) for q >= 0
inline Int rat_isqrt(const Rat& q) {
  if (q < 0) throw error("rat_isqrt: negative");
  Int f = rat_floor(q);
  Int s = boost::multiprecision::sqrt(f);
  while ((s + 1) * (s + 1) <= q) ++s;
  while (s * s > q) --s;
  return s;
}

}  // namespace kirby
