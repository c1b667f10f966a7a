#pragma once

// Linear block codes: exhaustive minimum distance, duals, classification.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitcodes/errors.hpp"
#include "unitcodes/matrix.hpp"
#include "unitcodes/parallel.hpp"

namespace unitcodes {

/// An [n, r] code given by a generator (r x n) and a control matrix
/// (n x (n-r)) with generator * control = 0.
class BlockCode {
 public:
  BlockCode(Mat generator, Mat control) : g_(std::move(generator)), d_(std::move(control)) {
    detail::same_field(g_, d_);
    const std::size_t n = g_.cols(), r = g_.rows();
    if (d_.rows() != n || d_.cols() + r != n)
      throw std::invalid_argument("control must be " + std::to_string(n) + "x" + std::to_string(n - r) + ", got " + detail::shape(d_));
    if (!(g_ * d_).is_zero()) throw std::invalid_argument("generator * control != 0");
    if (rank(g_) != r) throw std::invalid_argument("generator is rank deficient");
    if (rank(d_) != n - r) throw std::invalid_argument("control is rank deficient");
  }

  /// Code spanned by `generator`, with the control computed as a null space.
  static BlockCode from_generator(const Mat& generator) {
    return BlockCode(generator, transpose(null_space(generator)));
  }

  std::size_t n() const noexcept { return g_.cols(); }
  std::size_t r() const noexcept { return g_.rows(); }
  const Field& field() const noexcept { return g_.field(); }
  const Mat& generator() const noexcept { return g_; }
  const Mat& control() const noexcept { return d_; }
  /// (n-r) x n check matrix; generates the dual code.
  Mat check_matrix() const { return transpose(d_); }

 private:
  Mat g_, d_;
};

inline BlockCode dual(const BlockCode& c) { return BlockCode(c.check_matrix(), transpose(c.generator())); }

namespace detail {

// Minimum nonzero weight of the row space of g. Enumerates one message per
// projective point: the first nonzero message coordinate is fixed to 1 and
// the later ones run over F_q, walked as an F_p-space in modular Gray order
// so each step adds one scaled generator row.
inline std::size_t min_weight_rowspace(const Mat& g, const Budget& budget) {
  const Field& f = g.field();
  const std::size_t r = g.rows(), n = g.cols();
  const std::uint64_t q = f.order();
  const std::uint64_t need = sat_pow(q, r);
  if (need > budget.cap) throw BudgetExceeded("minimum distance enumeration", need, budget.cap);
  if (r == 0) throw std::invalid_argument("minimum distance of the zero code");
  const std::uint32_t p = f.characteristic(), m = f.degree();

  std::size_t best = n + 1;
  for (std::size_t lead = 0; lead < r; ++lead) {
    // basis vectors x^k * row_j for j > lead
    std::vector<std::vector<Rep>> basis;
    for (std::size_t j = lead + 1; j < r; ++j) {
      Rep xk = 1;
      for (std::uint32_t k = 0; k < m; ++k) {
        std::vector<Rep> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = f.mul(xk, g(j, c));
        basis.push_back(std::move(v));
        xk = static_cast<Rep>(xk * p);
      }
    }
    const std::size_t dims = basis.size();
    const std::uint64_t steps = sat_pow(p, dims);
    std::vector<std::size_t> local(std::max(1u, budget.threads), n + 1);
    parallel_ranges(steps, budget.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
      // Gray digits of `begin`: g_i = (T_i - T_{i+1}) mod p.
      std::vector<Rep> word = g.row(lead);
      {
        std::vector<std::uint32_t> t(dims + 1, 0);
        std::uint64_t rest = begin;
        for (std::size_t i = 0; i < dims; ++i) {
          t[i] = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        for (std::size_t i = 0; i < dims; ++i) {
          const std::uint32_t gi = (t[i] + p - t[i + 1]) % p;
          for (std::uint32_t s = 0; s < gi; ++s)
            for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], basis[i][c]);
        }
      }
      std::size_t wt = weight(word.data(), n), low = wt;
      for (std::uint64_t t = begin + 1; t < end && low > 1; ++t) {
        std::uint64_t x = t;
        std::size_t v = 0;
        while (x % p == 0) {
          x /= p;
          ++v;
        }
        const auto& b = basis[v];
        for (std::size_t c = 0; c < n; ++c) {
          if (!b[c]) continue;
          const Rep before = word[c];
          word[c] = f.add(before, b[c]);
          wt += (before == 0) - (word[c] == 0);
        }
        low = std::min(low, wt);
      }
      local[w] = std::min(local[w], low);
    });
    for (auto v : local) best = std::min(best, v);
    if (best == 1) break;
  }
  return best;
}

}  // namespace detail

inline std::size_t min_distance(const BlockCode& c, const Budget& budget = {}) {
  return detail::min_weight_rowspace(c.generator(), budget);
}

struct CssParameters {
  std::size_t n, k, d;
  friend bool operator==(const CssParameters& a, const CssParameters& b) { return a.n == b.n && a.k == b.k && a.d == b.d; }
};

struct CodeReport {
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d;  // absent when the oracle was refused
  bool lcd = false, dc = false, self_dual = false;
  std::optional<bool> mds;
  std::size_t intersection_dim = 0;
  std::optional<CssParameters> css;
  std::optional<std::string> distance_note;
};

/// dim(C intersect C-perp) from the rank of [G; D^T].
inline std::size_t intersection_dim(const BlockCode& c) { return c.n() - rank(vstack(c.generator(), c.check_matrix())); }

inline CodeReport classify(const BlockCode& c, const Budget& budget = {}) {
  CodeReport rep;
  rep.n = c.n();
  rep.k = c.r();
  rep.intersection_dim = intersection_dim(c);
  rep.lcd = rep.intersection_dim == 0;
  rep.dc = rep.intersection_dim == c.n() - c.r();
  rep.self_dual = rep.dc && c.n() == 2 * c.r();
  try {
    rep.d = min_distance(c, budget);
    rep.mds = *rep.d == c.n() - c.r() + 1;
  } catch (const BudgetExceeded& e) {
    rep.distance_note = e.what();
  }
  if (rep.dc && rep.d) rep.css = CssParameters{c.n(), 2 * c.r() - c.n(), *rep.d};
  return rep;
}

/// [[n, 2r-n, d]] for a dual-containing code.
inline CssParameters css_parameters(const BlockCode& c, const Budget& budget = {}) {
  if (intersection_dim(c) != c.n() - c.r()) throw std::invalid_argument("CSS construction needs a dual-containing code");
  return {c.n(), 2 * c.r() - c.n(), min_distance(c, budget)};
}

/// (I, X) in characteristic 2, (I, iX) otherwise, for X X^T = I. When the
/// field lacks i the code is built over its quadratic extension.
inline BlockCode self_dual_from_orthogonal(const Mat& x) {
  auto alpha = is_orthogonal(x);
  if (!alpha || *alpha != 1) throw std::invalid_argument("X X^T != I");
  Mat xx = x;
  const Field* f = &x.field();
  std::optional<FieldExtension> ext;
  Rep i = 1;
  if (f->characteristic() != 2) {
    auto root = sqrt_minus_one(*f);
    if (!root) {
      ext = quadratic_extension(*f);
      xx = embed(x, *ext);
      f = &ext->extended;
      root = sqrt_minus_one(*f);
    }
    i = root->rep();
  }
  const std::size_t n = xx.rows();
  const Mat id = Mat::identity(*f, n);
  const Mat ix = scaled(xx, i);
  return BlockCode(hstack(id, ix), vstack(-ix, id));
}

}  // namespace unitcodes
