#pragma once

#include <initializer_list>
#include <vector>

#include "revaff/scalar.hpp"

namespace revaff {

template <typename T> using Vector = std::vector<T>;

// Dense matrix over one of the three ground rings, row-major, exact entries.
// All row operations in the elimination routines multiply from the LEFT and
// solution sets are treated as right D-submodules, so everything stays valid
// over the quaternions.
template <typename T>
class Matrix {
public:
  using value_type = T;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, T(0)) {
    require_internal(rows >= 0 && cols >= 0, "negative matrix dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      require_internal(static_cast<int>(r.size()) == cols_, "ragged initializer");
      for (const auto& x : r) e_.push_back(x);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw_input("ShapeMismatch", "product of " + shape_str(a) + " by " + shape_str(b));
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          r(i, j) += aik * bkj;
        }
      }
    return r;
  }

private:
  static void require_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw_input("ShapeMismatch", "sum of " + shape_str(a) + " and " + shape_str(b));
  }
  static std::string shape_str(const Matrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

  int rows_, cols_;
  std::vector<T> e_;
};

template <typename T>
Vector<T> operator*(const Matrix<T>& a, const Vector<T>& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw_input("ShapeMismatch", "matrix-vector product dimension mismatch");
  Vector<T> r(a.rows(), T(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j)) && !is_zero(v[j])) r[i] = r[i] + a(i, j) * v[j];
  return r;
}

// Scale every entry from the left (resp. right); the two coincide for central
// scalars such as rationals.
template <typename T>
Matrix<T> scale_left(const T& c, const Matrix<T>& a) {
  Matrix<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

template <typename T>
Matrix<T> scale_right(const Matrix<T>& a, const T& c) {
  Matrix<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * c;
  return r;
}

template <typename T>
Vector<T> operator+(const Vector<T>& a, const Vector<T>& b) {
  require_internal(a.size() == b.size(), "vector sum size mismatch");
  Vector<T> r(a.size(), T(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename T>
Vector<T> operator-(const Vector<T>& a, const Vector<T>& b) {
  require_internal(a.size() == b.size(), "vector difference size mismatch");
  Vector<T> r(a.size(), T(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename T>
Vector<T> negate(const Vector<T>& a) {
  Vector<T> r(a.size(), T(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

template <typename T>
bool is_zero_vector(const Vector<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <typename T>
Matrix<T> mat_pow(Matrix<T> base, long e) {
  require_internal(base.is_square() && e >= 0, "mat_pow wants square base, e >= 0");
  Matrix<T> acc = Matrix<T>::identity(base.rows());
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

template <typename T>
Matrix<T> block(const Matrix<T>& a, int i0, int j0, int rows, int cols) {
  require_internal(i0 + rows <= a.rows() && j0 + cols <= a.cols(), "block out of range");
  Matrix<T> r(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(i, j) = a(i0 + i, j0 + j);
  return r;
}

template <typename T>
void place(Matrix<T>& dst, int i0, int j0, const Matrix<T>& src) {
  require_internal(i0 + src.rows() <= dst.rows() && j0 + src.cols() <= dst.cols(), "place out of range");
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) dst(i0 + i, j0 + j) = src(i, j);
}

template <typename T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& blocks) {
  int n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Matrix<T> r(n, m);
  int i0 = 0, j0 = 0;
  for (const auto& b : blocks) {
    place(r, i0, j0, b);
    i0 += b.rows();
    j0 += b.cols();
  }
  return r;
}

template <typename T>
Matrix<T> columns_to_matrix(const std::vector<Vector<T>>& cols, int rows) {
  Matrix<T> r(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    require_internal(static_cast<int>(cols[j].size()) == rows, "column length mismatch");
    for (int i = 0; i < rows; ++i) r(i, j) = cols[j][i];
  }
  return r;
}

template <typename T>
Vector<T> column_of(const Matrix<T>& a, int j) {
  Vector<T> v(a.rows(), T(0));
  for (int i = 0; i < a.rows(); ++i) v[i] = a(i, j);
  return v;
}

template <typename T>
T trace(const Matrix<T>& a) {
  require_internal(a.is_square(), "trace of non-square matrix");
  T t(0);
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// ---- elimination over a division ring ----
//
// Deterministic reduced row echelon form: pivots are the first nonzero entry
// in column order (exact arithmetic needs no magnitude pivoting), rows are
// scaled by left-multiplying with the pivot inverse.

template <typename T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<int> pivot_cols; // one per pivot row
  int rank = 0;
};

template <typename T>
Echelon<T> echelonize(Matrix<T> a) {
  Echelon<T> e{Matrix<T>(), {}, 0};
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!is_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    T inv = inverse(a(row, col));
    for (int j = col; j < a.cols(); ++j) a(row, j) = inv * a(row, j);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      T f = a(i, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rank = row;
  e.reduced = std::move(a);
  return e;
}

template <typename T>
int rank(const Matrix<T>& a) {
  return echelonize(a).rank;
}

template <typename T>
struct LinearSolveResult {
  Vector<T> particular;              // free variables set to 0
  std::vector<Vector<T>> kernel;     // right-module basis of ker A
  bool consistent = false;
};

// Full solution set of A x = b over the right D-module D^cols.
template <typename T>
LinearSolveResult<T> solve(const Matrix<T>& a, const Vector<T>& b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw_input("ShapeMismatch", "solve: right-hand side length mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  place(aug, 0, 0, a);
  for (int i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  Echelon<T> e = echelonize(std::move(aug));

  LinearSolveResult<T> res;
  res.consistent = true;
  for (int c : e.pivot_cols)
    if (c == a.cols()) res.consistent = false;

  std::vector<int> pivot_of_col(a.cols(), -1);
  for (int r = 0; r < static_cast<int>(e.pivot_cols.size()); ++r)
    if (e.pivot_cols[r] < a.cols()) pivot_of_col[e.pivot_cols[r]] = r;

  if (res.consistent) {
    res.particular.assign(a.cols(), T(0));
    for (int c = 0; c < a.cols(); ++c)
      if (pivot_of_col[c] >= 0) res.particular[c] = e.reduced(pivot_of_col[c], a.cols());
  }
  for (int c = 0; c < a.cols(); ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vector<T> k(a.cols(), T(0));
    k[c] = T(1);
    for (int cc = 0; cc < a.cols(); ++cc)
      if (pivot_of_col[cc] >= 0) k[cc] = -e.reduced(pivot_of_col[cc], c);
    res.kernel.push_back(std::move(k));
  }
  return res;
}

template <typename T>
std::vector<Vector<T>> kernel(const Matrix<T>& a) {
  return solve(a, Vector<T>(a.rows(), T(0))).kernel;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw_input("ShapeMismatch", "inverse of non-square matrix");
  int n = a.rows();
  Matrix<T> aug(n, 2 * n);
  place(aug, 0, 0, a);
  place(aug, 0, n, Matrix<T>::identity(n));
  Echelon<T> e = echelonize(std::move(aug));
  for (int i = 0; i < n; ++i)
    if (i >= e.rank || e.pivot_cols[i] != i)
      throw_domain("SingularInput", "matrix is not invertible");
  return block(e.reduced, 0, n, n, n);
}

template <typename T>
bool is_invertible(const Matrix<T>& a) {
  return a.is_square() && rank(a) == a.rows();
}

// Determinant over a commutative ground ring (Q or Q(i)); the quaternionic
// determinant goes through the complex embedding, see embed.hpp.
template <typename T>
T determinant(Matrix<T> a) {
  static_assert(scalar_traits<T>::commutative, "determinant needs a commutative ring");
  require_internal(a.is_square(), "determinant of non-square matrix");
  int n = a.rows();
  T det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) return T(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det = det * a(col, col);
    T inv = inverse(a(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (is_zero(a(i, col))) continue;
      T f = a(i, col) * inv;
      for (int j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
    }
  }
  return det;
}

// Incremental row-space basis used by the Jordan chain construction. Rows are
// candidate vectors; insertion reduces with left coefficients, so "accepted"
// means right-module independence of the original column vectors.
template <typename T>
class SpanBasis {
public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  bool contains(Vector<T> v) const {
    reduce(v);
    return is_zero_vector(v);
  }

  // Returns true (and stores the reduced row) when v enlarges the span.
  bool insert(Vector<T> v) {
    reduce(v);
    int lead = -1;
    for (int j = 0; j < dim_; ++j)
      if (!is_zero(v[j])) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    T inv = inverse(v[lead]);
    for (int j = lead; j < dim_; ++j) v[j] = inv * v[j];
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  int size() const { return static_cast<int>(rows_.size()); }

private:
  void reduce(Vector<T>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const T& c = v[leads_[r]];
      if (is_zero(c)) continue;
      T f = c; // pivot is 1
      for (int j = leads_[r]; j < dim_; ++j) v[j] = v[j] - f * rows_[r][j];
    }
  }

  int dim_;
  std::vector<Vector<T>> rows_;
  std::vector<int> leads_;
};

} // namespace revaff
