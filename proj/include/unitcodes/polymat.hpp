#pragma once

// Polynomials and polynomial matrices in z over GF(p^m).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unitcodes/matrix.hpp"

namespace unitcodes {

/// Coefficients low degree first, no trailing zeros; the zero polynomial is empty.
using Poly = std::vector<Rep>;

namespace poly {

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

inline Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(c);
  return c;
}
inline Poly neg(const Field& f, Poly a) {
  for (auto& x : a) x = f.neg(x);
  return a;
}
inline Poly sub(const Field& f, const Poly& a, const Poly& b) { return add(f, a, neg(f, b)); }
inline Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}
inline Poly scale(const Field& f, Rep s, Poly a) {
  for (auto& x : a) x = f.mul(s, x);
  trim(a);
  return a;
}

/// (quotient, remainder) with deg remainder < deg b.
inline std::pair<Poly, Poly> divmod(const Field& f, Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const Rep lead_inv = f.inv(b.back());
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rep c = f.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace poly

class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(Field field, std::size_t rows, std::size_t cols) : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols) {}

  /// sum_k coeffs[k] z^k
  static PolyMat from_coeffs(const std::vector<Mat>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("no coefficient matrices");
    PolyMat p(coeffs[0].field(), coeffs[0].rows(), coeffs[0].cols());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      detail::same_field(coeffs[0], coeffs[k]);
      if (coeffs[k].rows() != p.rows_ || coeffs[k].cols() != p.cols_) throw std::invalid_argument("coefficient matrices differ in shape");
      for (std::size_t i = 0; i < p.rows_; ++i)
        for (std::size_t j = 0; j < p.cols_; ++j) {
          Poly& e = p(i, j);
          if (coeffs[k](i, j)) {
            if (e.size() <= k) e.resize(k + 1, 0);
            e[k] = coeffs[k](i, j);
          }
        }
    }
    return p;
  }
  static PolyMat constant(const Mat& m) { return from_coeffs({m}); }
  static PolyMat identity(const Field& f, std::size_t n) { return constant(Mat::identity(f, n)); }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  /// Max entry degree, -1 for the zero matrix.
  long degree() const {
    long d = -1;
    for (const auto& p : e_) d = std::max(d, poly::degree(p));
    return d;
  }
  long row_degree(std::size_t i) const {
    long d = -1;
    for (std::size_t j = 0; j < cols_; ++j) d = std::max(d, poly::degree((*this)(i, j)));
    return d;
  }
  Mat coeff(std::size_t k) const {
    Mat m(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Poly& p = (*this)(i, j);
        if (k < p.size()) m(i, j) = p[k];
      }
    return m;
  }
  std::vector<Mat> coeffs() const {
    std::vector<Mat> out;
    for (long k = 0; k <= std::max(0L, degree()); ++k) out.push_back(coeff(static_cast<std::size_t>(k)));
    return out;
  }
  bool is_zero() const {
    for (const auto& p : e_)
      if (!p.empty()) return false;
    return true;
  }

  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_ && a.field_ == b.field_;
  }
  friend bool operator!=(const PolyMat& a, const PolyMat& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

namespace detail {
inline std::string shape(const PolyMat& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }
}  // namespace detail

inline PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.field() != b.field()) throw std::invalid_argument("mismatched fields in polynomial product");
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product: " + detail::shape(a) + " * " + detail::shape(b));
  // Multiply by coefficient matrices: cheaper than entry-wise convolution for dense blocks.
  const auto ac = a.coeffs(), bc = b.coeffs();
  std::vector<Mat> out(ac.size() + bc.size() - 1, Mat(a.field(), a.rows(), b.cols()));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      if (!bc[j].is_zero()) out[i + j] = out[i + j] + ac[i] * bc[j];
  }
  return PolyMat::from_coeffs(out);
}

inline PolyMat operator+(const PolyMat& a, const PolyMat& b) {
  if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape or field mismatch in polynomial sum");
  PolyMat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = poly::add(a.field(), a(i, j), b(i, j));
  return c;
}

inline PolyMat operator-(const PolyMat& a) {
  PolyMat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = poly::neg(a.field(), a(i, j));
  return c;
}
inline PolyMat operator-(const PolyMat& a, const PolyMat& b) { return a + (-b); }

inline PolyMat transpose(const PolyMat& a) {
  PolyMat t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// z^m a(1/z); m must be at least deg a.
inline PolyMat reversed(const PolyMat& a, std::size_t m) {
  if (a.degree() > static_cast<long>(m)) throw std::invalid_argument("reversal degree below matrix degree");
  auto c = a.coeffs();
  c.resize(m + 1, Mat(a.field(), a.rows(), a.cols()));
  std::reverse(c.begin(), c.end());
  return PolyMat::from_coeffs(c);
}

inline PolyMat vstack(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.cols() || a.field() != b.field()) throw std::invalid_argument("vstack mismatch");
  PolyMat c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

inline PolyMat embed(const PolyMat& a, const FieldExtension& ext) {
  auto c = a.coeffs();
  for (auto& m : c) m = embed(m, ext);
  return PolyMat::from_coeffs(c);
}

/// Result of unimodular column reduction a * w = [t | 0].
struct ColumnReduction {
  PolyMat t;   // rows x rank, lower triangular in its pivot rows
  PolyMat w;   // cols x cols, unimodular
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};

/// Euclid on columns, one row at a time. Exact over F[z].
inline ColumnReduction column_reduce(const PolyMat& a) {
  const Field& f = a.field();
  PolyMat m = a, w = PolyMat::identity(f, a.cols());
  std::vector<std::size_t> pivots;
  std::size_t p = 0;
  auto swap_cols = [](PolyMat& x, std::size_t c1, std::size_t c2) {
    for (std::size_t i = 0; i < x.rows(); ++i) std::swap(x(i, c1), x(i, c2));
  };
  // col_j -= q * col_p
  auto axpy = [&f](PolyMat& x, std::size_t j, std::size_t piv, const Poly& q) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      if (!x(i, piv).empty()) x(i, j) = poly::sub(f, x(i, j), poly::mul(f, q, x(i, piv)));
  };
  for (std::size_t i = 0; i < m.rows() && p < m.cols(); ++i) {
    while (true) {
      std::size_t best = m.cols();
      for (std::size_t j = p; j < m.cols(); ++j)
        if (!m(i, j).empty() && (best == m.cols() || m(i, j).size() < m(i, best).size())) best = j;
      if (best == m.cols()) break;
      if (best != p) {
        swap_cols(m, p, best);
        swap_cols(w, p, best);
      }
      bool clean = true;
      for (std::size_t j = p + 1; j < m.cols(); ++j) {
        if (m(i, j).empty()) continue;
        auto [q, r] = poly::divmod(f, m(i, j), m(i, p));
        axpy(m, j, p, q);
        axpy(w, j, p, q);
        if (!r.empty()) clean = false;
      }
      if (clean) {
        pivots.push_back(i);
        ++p;
        break;
      }
    }
  }
  PolyMat t(f, m.rows(), p);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < p; ++c) t(r, c) = m(r, c);
  return {std::move(t), std::move(w), std::move(pivots)};
}

/// Rank over the rational function field F(z).
inline std::size_t rank(const PolyMat& a) { return column_reduce(a).rank(); }

/// A polynomial R with a R = I, when a has full row rank and the gcd of
/// its maximal minors is a nonzero constant.
inline std::optional<PolyMat> right_inverse(const PolyMat& a) {
  const Field& f = a.field();
  const std::size_t k = a.rows();
  auto red = column_reduce(a);
  if (red.rank() != k) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i)
    if (red.t(i, i).size() != 1) return std::nullopt;
  // forward substitution t x = I, t lower triangular with constant diagonal
  PolyMat x(f, k, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = c; i < k; ++i) {
      Poly acc = i == c ? Poly{1} : Poly{};
      for (std::size_t j = c; j < i; ++j) acc = poly::sub(f, acc, poly::mul(f, red.t(i, j), x(j, c)));
      x(i, c) = poly::scale(f, f.inv(red.t(i, i)[0]), acc);
    }
  PolyMat wk(f, a.cols(), k);
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < k; ++c) wk(r, c) = red.w(r, c);
  PolyMat r = wk * x;
  if (a * r != PolyMat::identity(f, k)) throw std::logic_error("right inverse failed to verify");
  return r;
}

}  // namespace unitcodes
