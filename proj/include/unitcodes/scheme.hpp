#pragma once

// Unit schemes U V = alpha I and the codes derived from them by taking rows
// of U and deleting the matching columns of V.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitcodes/block.hpp"
#include "unitcodes/matrix.hpp"

namespace unitcodes {

class UnitScheme {
 public:
  /// Checks U V = alpha I with alpha read off entry (0,0).
  UnitScheme(Mat u, Mat v) : u_(std::move(u)), v_(std::move(v)) {
    detail::same_field(u_, v_);
    if (u_.rows() != u_.cols() || v_.rows() != v_.cols() || u_.rows() != v_.rows())
      throw std::invalid_argument("unit scheme needs square matrices of equal size, got " + detail::shape(u_) + " and " + detail::shape(v_));
    if (u_.rows() == 0) throw std::invalid_argument("empty unit scheme");
    const Mat p = u_ * v_;
    alpha_ = p(0, 0);
    if (alpha_ == 0 || p != scaled(Mat::identity(u_.field(), u_.rows()), alpha_))
      throw std::invalid_argument("U V is not a nonzero multiple of the identity");
  }

  const Mat& u() const noexcept { return u_; }
  const Mat& v() const noexcept { return v_; }
  Rep alpha() const noexcept { return alpha_; }
  std::size_t n() const noexcept { return u_.rows(); }
  const Field& field() const noexcept { return u_.field(); }

 private:
  Mat u_, v_;
  Rep alpha_ = 1;
};

inline UnitScheme make_scheme(const Mat& u) { return UnitScheme(u, inverse(u)); }
inline UnitScheme make_scaled(const Mat& u, const Mat& v) { return UnitScheme(u, v); }

/// [n, r] code: the chosen rows of U, with V minus the matching columns as control.
inline BlockCode derive_block_code(const UnitScheme& s, const std::vector<std::size_t>& rows) {
  if (rows.empty() || rows.size() >= s.n())
    throw std::invalid_argument("row selection must have between 1 and n-1 rows, got " + std::to_string(rows.size()));
  return BlockCode(select_rows(s.u(), rows), delete_cols(s.v(), rows));
}

/// Extends a full-rank r x n matrix to an invertible U by appending standard
/// basis vectors, lowest index first, whenever they raise the rank.
inline UnitScheme complete_to_unit(const Mat& a) {
  const std::size_t n = a.cols();
  if (rank(a) != a.rows()) throw std::invalid_argument("cannot complete a rank-deficient matrix to a unit");
  Mat u = a;
  for (std::size_t j = 0; j < n && u.rows() < n; ++j) {
    Mat e(a.field(), 1, n);
    e(0, j) = 1;
    Mat cand = vstack(u, e);
    if (rank(cand) == cand.rows()) u = std::move(cand);
  }
  return make_scheme(u);
}

/// A scheme with its rows partitioned into ordered blocks. Block t of U is
/// rows partition[t]; block t of V is the same indices taken as columns.
struct SchemeSplit {
  UnitScheme scheme;
  std::vector<std::vector<std::size_t>> partition;

  SchemeSplit(UnitScheme s, std::vector<std::vector<std::size_t>> parts)
      : scheme(std::move(s)), partition(std::move(parts)) {
    std::vector<std::size_t> all;
    for (const auto& b : partition) {
      if (b.empty()) throw std::invalid_argument("empty block in split");
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> want(scheme.n());
    std::iota(want.begin(), want.end(), 0);
    if (all != want) throw std::invalid_argument("split blocks must tile 0..n-1 exactly once");
  }

  std::size_t blocks() const noexcept { return partition.size(); }
  Mat u_block(std::size_t t) const { return select_rows(scheme.u(), partition.at(t)); }
  Mat v_block(std::size_t t) const { return select_cols(scheme.v(), partition.at(t)); }
};

/// Consecutive blocks of the given sizes.
inline SchemeSplit split_sizes(const UnitScheme& s, const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> parts;
  std::size_t at = 0;
  for (auto k : sizes) {
    std::vector<std::size_t> b(k);
    std::iota(b.begin(), b.end(), at);
    at += k;
    parts.push_back(std::move(b));
  }
  return SchemeSplit(s, std::move(parts));
}

/// `count` consecutive equal blocks.
inline SchemeSplit split_equal(const UnitScheme& s, std::size_t count) {
  if (count == 0 || s.n() % count) throw std::invalid_argument("cannot split " + std::to_string(s.n()) + " rows into " + std::to_string(count) + " equal blocks");
  return split_sizes(s, std::vector<std::size_t>(count, s.n() / count));
}

/// The same scheme with every entry mapped into an extension field.
inline UnitScheme embed(const UnitScheme& s, const FieldExtension& ext) {
  return UnitScheme(embed(s.u(), ext), embed(s.v(), ext));
}

inline SchemeSplit embed(const SchemeSplit& s, const FieldExtension& ext) {
  return SchemeSplit(embed(s.scheme, ext), s.partition);
}

}  // namespace unitcodes
