#pragma once

// Fourier unit schemes F_n V = n I, with V's columns e_0^T, e_{n-1}^T, ..., e_1^T.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitcodes/block.hpp"
#include "unitcodes/scheme.hpp"

namespace unitcodes {

struct FourierScheme {
  std::size_t n;
  Rep omega;
  UnitScheme scheme;

  /// Row e_i as a 1 x n matrix.
  Mat row(std::size_t i) const { return select_rows(scheme.u(), {i % n}); }
};

inline FourierScheme fourier_scheme(std::size_t n, const Field& f) {
  if (n < 2) throw std::invalid_argument("Fourier size must be at least 2");
  if (n % f.characteristic() == 0)
    throw std::domain_error(std::to_string(n) + " is zero in " + f.literal() + "; no Fourier matrix");
  const Rep omega = element_of_order(f, static_cast<std::uint32_t>(n)).rep();
  Mat u(f, n, n), v(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      u(i, j) = f.pow(omega, i * j);
      v(i, j) = f.pow(omega, i * ((n - j) % n));
    }
  return {n, omega, UnitScheme(std::move(u), std::move(v))};
}

/// Rows start, start+step, ... (mod n); mds whenever gcd(step, n) = 1.
inline std::vector<std::size_t> window_rows(std::size_t n, std::size_t start, std::size_t r, std::size_t step) {
  if (std::gcd(step, n) != 1) throw std::invalid_argument("window step " + std::to_string(step) + " is not coprime to " + std::to_string(n));
  if (r < 1 || r >= n) throw std::invalid_argument("window size must be in [1, n)");
  std::vector<std::size_t> rows(r);
  for (std::size_t t = 0; t < r; ++t) rows[t] = (start + t * step) % n;
  return rows;
}

inline BlockCode mds_window_code(const FourierScheme& fs, std::size_t start, std::size_t r, std::size_t step = 1) {
  return derive_block_code(fs.scheme, window_rows(fs.n, start, r, step));
}

struct LcdArrangement {
  BlockCode code;
  SchemeSplit split;  // blocks: generator rows, remaining rows
  std::vector<std::size_t> display_rows;  // full row order e_r..e_{n-1}, e_0..e_{n-r}, e_{n-r+1}..e_{r-1}
};

/// Generator rows e_r..e_{n-1}, e_0..e_{n-r}: each row with its conjugate
/// e_{n-i}, giving an [n, 2(n-r)+1] LCD mds code.
///
/// The split keeps the generator rows as a set but reorders both blocks so
/// that the rows feeding the memory-1 companion pair up compatibly with
/// conjugation: remaining-row singletons (i = n-i) meet generator
/// singletons, conjugate pairs meet conjugate pairs, and the unmatched
/// generator rows come first.
inline LcdArrangement lcd_arrangement(const FourierScheme& fs, std::size_t r) {
  const std::size_t n = fs.n;
  if (2 * r < n + 2 || r >= n)
    throw std::invalid_argument("LCD arrangement needs n/2 + 1 <= r < n so the trailing block e_{n-r+1}..e_{r-1} is non-empty");
  std::vector<std::size_t> gen, rest, display;
  for (std::size_t i = r; i < n; ++i) gen.push_back(i);
  for (std::size_t i = 0; i <= n - r; ++i) gen.push_back(i);
  for (std::size_t i = n - r + 1; i <= r - 1; ++i) rest.push_back(i);
  display = gen;
  display.insert(display.end(), rest.begin(), rest.end());
  {
    auto sorted = display;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != i) throw std::logic_error("LCD arrangement does not tile the rows");
  }

  auto conj = [n](std::size_t i) { return (n - i) % n; };
  std::vector<std::size_t> gen_singles, gen_pairs;  // pairs listed by their smaller member
  for (auto i : gen) {
    if (conj(i) == i) gen_singles.push_back(i);
    else if (i < conj(i)) gen_pairs.push_back(i);
  }
  std::vector<std::size_t> matched;
  std::vector<bool> used(n, false);
  std::size_t next_single = 0, next_pair = 0;
  std::vector<std::size_t> partner(n, n);
  for (auto b : rest) {
    std::size_t a;
    if (conj(b) == b) {
      if (next_single >= gen_singles.size()) { matched.clear(); break; }
      a = gen_singles[next_single++];
    } else if (b < conj(b)) {
      if (next_pair >= gen_pairs.size()) { matched.clear(); break; }
      a = gen_pairs[next_pair++];
      partner[conj(b)] = conj(a);
    } else {
      a = partner[b];
    }
    matched.push_back(a);
    used[a] = true;
  }
  std::vector<std::size_t> gen_order;
  if (matched.size() == rest.size()) {
    for (auto i : gen)
      if (!used[i]) gen_order.push_back(i);
    gen_order.insert(gen_order.end(), matched.begin(), matched.end());
  } else {
    gen_order = gen;  // too few generator rows to pair; keep display order
  }
  BlockCode code = derive_block_code(fs.scheme, gen);
  return {std::move(code), SchemeSplit(fs.scheme, {gen_order, rest}), display};
}

}  // namespace unitcodes
