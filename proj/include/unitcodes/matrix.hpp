#pragma once

// Dense matrices over GF(p^m) with exact Gauss-Jordan elimination.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitcodes/errors.hpp"
#include "unitcodes/field.hpp"

namespace unitcodes {

class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Rep> data)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data length does not match shape");
    for (Rep a : data_)
      if (!field_.contains(a)) throw std::out_of_range("matrix entry " + std::to_string(a) + " outside " + field_.literal());
  }

  static Mat identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Integer entries reduced into the prime subfield (so -1 becomes p-1).
  static Mat from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
    }
    return m;
  }

  /// Field-rep entries given row by row.
  static Mat from_reps(const Field& f, const std::vector<std::vector<Rep>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    std::vector<Rep> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Mat(f, r, c, std::move(data));
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Rep>& data() const noexcept { return data_; }

  Rep& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Rep operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const Rep* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
  std::vector<Rep> row(std::size_t i) const { return {row_ptr(i), row_ptr(i) + cols_}; }

  bool is_zero() const {
    for (Rep a : data_)
      if (a) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rep> data_;
};

namespace detail {
inline void same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("mismatched fields: " + a.field().literal() + " vs " + b.field().literal());
}
inline std::string shape(const Mat& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }
}  // namespace detail

inline Mat operator*(const Mat& a, const Mat& b) {
  detail::same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product: " + detail::shape(a) + " * " + detail::shape(b));
  const Field& f = a.field();
  Mat c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rep x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j)) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

inline Mat operator+(const Mat& a, const Mat& b) {
  detail::same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch in sum: " + detail::shape(a) + " + " + detail::shape(b));
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

inline Mat operator-(const Mat& a) {
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().neg(a(i, j));
  return c;
}

inline Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

inline Mat transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline Mat scaled(const Mat& a, Rep s) {
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(s, a(i, j));
  return c;
}

inline Mat vstack(const Mat& a, const Mat& b) {
  detail::same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch: " + detail::shape(a) + " over " + detail::shape(b));
  std::vector<Rep> data = a.data();
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Mat(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

inline Mat hstack(const Mat& a, const Mat& b) {
  detail::same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch: " + detail::shape(a) + " beside " + detail::shape(b));
  Mat c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

namespace detail {
inline void check_indices(const std::vector<std::size_t>& idx, std::size_t bound, const char* what) {
  std::set<std::size_t> seen;
  for (auto i : idx) {
    if (i >= bound) throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " out of range [0," + std::to_string(bound) + ")");
    if (!seen.insert(i).second) throw std::invalid_argument(std::string("duplicate ") + what + " index " + std::to_string(i));
  }
}
}  // namespace detail

inline Mat select_rows(const Mat& a, const std::vector<std::size_t>& idx) {
  detail::check_indices(idx, a.rows(), "row");
  Mat c(a.field(), idx.size(), a.cols());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(idx[i], j);
  return c;
}

inline Mat select_cols(const Mat& a, const std::vector<std::size_t>& idx) {
  detail::check_indices(idx, a.cols(), "column");
  Mat c(a.field(), a.rows(), idx.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) c(i, j) = a(i, idx[j]);
  return c;
}

inline Mat delete_cols(const Mat& a, const std::vector<std::size_t>& idx) {
  detail::check_indices(idx, a.cols(), "column");
  std::set<std::size_t> drop(idx.begin(), idx.end());
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!drop.count(j)) keep.push_back(j);
  return select_cols(a, keep);
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& a) {
  const Field& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rep inv = f.inv(a(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = f.mul(inv, a(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rep factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(r, j)) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Mat a) { return rref(a).size(); }

inline Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square " + detail::shape(a));
  const std::size_t n = a.rows();
  Mat aug = hstack(a, Mat::identity(a.field(), n));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  std::vector<std::size_t> right(n);
  for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
  return select_cols(aug, right);
}

inline std::optional<Mat> try_inverse(const Mat& a) {
  try {
    return inverse(a);
  } catch (const SingularMatrix&) {
    return std::nullopt;
  }
}

/// Basis (as rows) of the right null space {x : a x = 0}.
inline Mat null_space(const Mat& a) {
  Mat r = a;
  const auto piv = rref(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat out(a.field(), free.size(), a.cols());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(k, free[k]) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) out(k, piv[i]) = a.field().neg(r(i, free[k]));
  }
  return out;
}

/// alpha with m * m^T = alpha * I, alpha != 0, if one exists.
inline std::optional<Rep> is_orthogonal(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_orthogonal needs a square matrix, got " + detail::shape(m));
  const Mat p = m * transpose(m);
  const Rep alpha = m.rows() ? p(0, 0) : 0;
  if (alpha == 0) return std::nullopt;
  if (p != scaled(Mat::identity(m.field(), m.rows()), alpha)) return std::nullopt;
  return alpha;
}

/// Same row space (ranks equal and unchanged by stacking).
inline bool same_row_space(const Mat& a, const Mat& b) {
  const auto ra = rank(a);
  return ra == rank(b) && rank(vstack(a, b)) == ra;
}

/// Row space of a contained in row space of b.
inline bool row_space_contains(const Mat& b, const Mat& a) { return rank(vstack(b, a)) == rank(b); }

/// Entry-wise image under a field embedding.
inline Mat embed(const Mat& a, const FieldExtension& ext) {
  if (a.field() != ext.base) throw std::invalid_argument("matrix is not over the extension's base field");
  Mat c(ext.extended, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ext.embed(a(i, j));
  return c;
}

inline std::size_t weight(const Rep* v, std::size_t n) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) w += v[i] != 0;
  return w;
}

}  // namespace unitcodes
