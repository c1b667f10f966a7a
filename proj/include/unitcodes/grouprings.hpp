#pragma once

// The group ring Z2(Cn x C4), its regular representation, and LDPC codes
// from units whose inverse has small support.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitcodes/conv.hpp"
#include "unitcodes/scheme.hpp"

namespace unitcodes {

/// sum over j < 4, i < n of c[j][i] h^j g^i, coefficients in GF(2).
class GroupRingElem {
 public:
  explicit GroupRingElem(std::size_t n = 1) : n_(n), c_(4 * n, 0) {
    if (n == 0) throw std::invalid_argument("cyclic order must be positive");
  }

  static GroupRingElem one(std::size_t n) {
    GroupRingElem e(n);
    e.c_[0] = 1;
    return e;
  }

  /// Parses "g^15 + h*g^4 + h^2 + 1", optionally followed by "@ C24xC4".
  /// Without the suffix, `n` must be given.
  static GroupRingElem parse(const std::string& text, std::optional<std::size_t> n = std::nullopt);

  std::size_t n() const noexcept { return n_; }
  /// Group element h^j g^i sits at index j*n + i.
  std::size_t index(std::size_t j, std::size_t i) const noexcept { return (j % 4) * n_ + i % n_; }
  std::uint8_t coeff(std::size_t j, std::size_t i) const { return c_[index(j, i)]; }
  void flip(std::size_t j, std::size_t i) { c_[index(j, i)] ^= 1; }
  void set(std::size_t j, std::size_t i, bool v) { c_[index(j, i)] = v; }
  std::uint8_t at(std::size_t idx) const { return c_.at(idx); }
  std::size_t support() const { return static_cast<std::size_t>(std::count(c_.begin(), c_.end(), 1)); }

  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < n_; ++i) {
        if (!coeff(j, i)) continue;
        if (!out.empty()) out += " + ";
        std::string term;
        if (j == 1) term = "h";
        if (j > 1) term = "h^" + std::to_string(j);
        if (i > 0) term += (term.empty() ? "" : "*") + std::string(i == 1 ? "g" : "g^" + std::to_string(i));
        out += term.empty() ? "1" : term;
      }
    if (out.empty()) out = "0";
    return "\"" + out + "\" @ C" + std::to_string(n_) + "xC4";
  }

  friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    check(a, b);
    GroupRingElem c(a.n_);
    for (std::size_t k = 0; k < a.c_.size(); ++k) c.c_[k] = a.c_[k] ^ b.c_[k];
    return c;
  }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    check(a, b);
    GroupRingElem c(a.n_);
    for (std::size_t ja = 0; ja < 4; ++ja)
      for (std::size_t ia = 0; ia < a.n_; ++ia) {
        if (!a.coeff(ja, ia)) continue;
        for (std::size_t jb = 0; jb < 4; ++jb)
          for (std::size_t ib = 0; ib < a.n_; ++ib)
            if (b.coeff(jb, ib)) c.flip(ja + jb, ia + ib);
      }
    return c;
  }
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  static void check(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("group ring elements over different groups");
  }
  std::size_t n_;
  std::vector<std::uint8_t> c_;
};

inline GroupRingElem GroupRingElem::parse(const std::string& text, std::optional<std::size_t> n) {
  std::string body = text;
  if (auto at = text.find('@'); at != std::string::npos) {
    body = text.substr(0, at);
    std::string grp;
    for (char ch : text.substr(at + 1))
      if (!std::isspace(static_cast<unsigned char>(ch))) grp += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::size_t order = 0;
    char x = 0;
    std::istringstream in(grp);
    if (grp.size() < 5 || grp[0] != 'C' || !(in.ignore(1) >> order >> x) || x != 'X' || grp.substr(grp.size() - 2) != "C4")
      throw std::invalid_argument("bad group suffix '" + text.substr(at + 1) + "', expected C<n>xC4");
    if (n && *n != order) throw std::invalid_argument("group suffix disagrees with requested order");
    n = order;
  }
  if (!n) throw std::invalid_argument("group order unknown: append '@ C<n>xC4'");
  std::string s;
  for (char ch : body)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '"') s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  GroupRingElem e(*n);
  if (s == "0") return e;
  std::stringstream terms(s);
  for (std::string term; std::getline(terms, term, '+');) {
    if (term.empty()) throw std::invalid_argument("empty term in '" + text + "'");
    // factors g^a, h^b, 1, juxtaposed or joined by '*'
    std::size_t hj = 0, gi = 0;
    for (std::size_t at = 0; at < term.size();) {
      const char ch = term[at++];
      if (ch == '*' || ch == '1') continue;
      if (ch != 'g' && ch != 'h') throw std::invalid_argument("bad factor in term '" + term + "'");
      std::size_t e_pow = 1;
      if (at < term.size() && term[at] == '^') {
        const std::size_t from = ++at;
        while (at < term.size() && std::isdigit(static_cast<unsigned char>(term[at]))) ++at;
        if (at == from) throw std::invalid_argument("missing exponent in term '" + term + "'");
        e_pow = std::stoul(term.substr(from, at - from));
      }
      (ch == 'g' ? gi : hj) += e_pow;
    }
    e.flip(hj, gi);
  }
  return e;
}

/// Regular representation M[x][y] = coeff(x^{-1} y), group elements ordered
/// h^0 g^0 .. h^0 g^{n-1}, h^1 g^0, ...
inline Mat gr_to_matrix(const GroupRingElem& a) {
  const std::size_t n = a.n(), N = 4 * n;
  Mat m(Field::gf(2), N, N);
  for (std::size_t jx = 0; jx < 4; ++jx)
    for (std::size_t ix = 0; ix < n; ++ix)
      for (std::size_t jy = 0; jy < 4; ++jy)
        for (std::size_t iy = 0; iy < n; ++iy) m(jx * n + ix, jy * n + iy) = a.coeff(jy + 4 - jx, iy + n - ix);
  return m;
}

/// Element whose representation is the given matrix's row 0.
inline GroupRingElem gr_from_row0(const Mat& m, std::size_t n) {
  GroupRingElem e(n);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < n; ++i) e.set(j, i, m(0, j * n + i) != 0);
  return e;
}

inline std::optional<GroupRingElem> gr_inverse(const GroupRingElem& a) {
  auto inv = try_inverse(gr_to_matrix(a));
  if (!inv) return std::nullopt;
  return gr_from_row0(*inv, a.n());
}

struct CycleReport {
  std::uint64_t four_cycles = 0;
  std::optional<std::uint64_t> six_cycles;
  std::size_t max_row_weight = 0, max_col_weight = 0;
};

/// Tanner-graph cycle counts of a binary matrix. A 4-cycle is a pair of
/// columns and a pair of rows they share; a 6-cycle is three columns with
/// three distinct rows, one shared by each pair of them.
inline CycleReport short_cycle_census(const Mat& m, int max_length = 4) {
  if (m.field().order() != 2) throw std::invalid_argument("cycle census needs a binary matrix, got " + m.field().literal());
  if (max_length != 4 && max_length != 6) throw std::invalid_argument("cycle census supports lengths 4 and 6");
  const std::size_t rows = m.rows(), cols = m.cols(), words = (rows + 63) / 64;
  std::vector<std::uint64_t> bits(cols * words, 0);
  CycleReport rep;
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if (m(i, j)) {
        bits[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
        ++w;
      }
    rep.max_row_weight = std::max(rep.max_row_weight, w);
  }
  auto col = [&](std::size_t j) { return &bits[j * words]; };
  auto count2 = [&](const std::uint64_t* a, const std::uint64_t* b) {
    std::uint64_t s = 0;
    for (std::size_t w = 0; w < words; ++w) s += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
    return s;
  };
  auto count3 = [&](const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c) {
    std::uint64_t s = 0;
    for (std::size_t w = 0; w < words; ++w) s += static_cast<std::uint64_t>(std::popcount(a[w] & b[w] & c[w]));
    return s;
  };
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t w = 0;
    for (std::size_t x = 0; x < words; ++x) w += static_cast<std::size_t>(std::popcount(col(j)[x]));
    rep.max_col_weight = std::max(rep.max_col_weight, w);
  }
  std::vector<std::uint64_t> shared(cols * cols, 0);
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t b = a + 1; b < cols; ++b) {
      const std::uint64_t s = count2(col(a), col(b));
      shared[a * cols + b] = shared[b * cols + a] = s;
      if (s >= 2) rep.four_cycles += s * (s - 1) / 2;
    }
  if (max_length == 6) {
    std::uint64_t six = 0;
    for (std::size_t a = 0; a < cols; ++a)
      for (std::size_t b = a + 1; b < cols; ++b) {
        const std::uint64_t ab = shared[a * cols + b];
        if (!ab) continue;
        for (std::size_t c = b + 1; c < cols; ++c) {
          const std::uint64_t bc = shared[b * cols + c], ca = shared[c * cols + a];
          if (!bc || !ca) continue;
          const std::uint64_t t = count3(col(a), col(b), col(c));
          // choices of (row for ab, row for bc, row for ca), pairwise distinct
          six += ab * bc * ca - t * (ab + bc + ca) + 2 * t;
        }
      }
    rep.six_cycles = six;
  }
  return rep;
}

struct LdpcDerivation {
  UnitScheme scheme;
  std::vector<std::size_t> rows;
  BlockCode code;
  CycleReport cycles;
};

enum class Girth { none, four, six };

/// Row indices for a derivation: the first `count`, or a seeded random choice.
inline std::vector<std::size_t> ldpc_rows(std::size_t size, std::size_t count, std::optional<std::uint64_t> seed = std::nullopt) {
  if (count == 0 || count >= size) throw std::invalid_argument("row count must be in [1, size)");
  std::vector<std::size_t> rows(size);
  for (std::size_t i = 0; i < size; ++i) rows[i] = i;
  if (seed) {
    // Fisher-Yates with explicit draws so the choice is portable
    std::mt19937_64 rng(*seed);
    for (std::size_t i = size - 1; i > 0; --i) std::swap(rows[i], rows[rng() % (i + 1)]);
    rows.resize(count);
    std::sort(rows.begin(), rows.end());
    return rows;
  }
  rows.resize(count);
  return rows;
}

/// U from the inverse of v, V from v, the code from the chosen rows of U,
/// and a census of the control matrix (columns of V).
inline LdpcDerivation ldpc_derive(const GroupRingElem& v, const std::vector<std::size_t>& keep_rows, Girth require = Girth::none) {
  const auto u = gr_inverse(v);
  if (!u) throw std::domain_error("element " + v.to_string() + " is not a unit: its matrix is singular");
  UnitScheme s(gr_to_matrix(*u), gr_to_matrix(v));
  BlockCode code = derive_block_code(s, keep_rows);
  CycleReport cyc = short_cycle_census(code.control(), require == Girth::six ? 6 : 4);
  if (require != Girth::none && cyc.four_cycles) throw std::domain_error("control matrix has " + std::to_string(cyc.four_cycles) + " four-cycles");
  if (require == Girth::six && cyc.six_cycles.value_or(0)) throw std::domain_error("control matrix has " + std::to_string(*cyc.six_cycles) + " six-cycles");
  return {std::move(s), keep_rows, std::move(code), cyc};
}

/// Memory-1 code A + Bz from the halves of the unit, control D - Cz.
inline ConvCode ldpc_conv_memory1(const GroupRingElem& v) {
  const auto u = gr_inverse(v);
  if (!u) throw std::domain_error("element is not a unit");
  return build_memory1_equal(split_equal(UnitScheme(gr_to_matrix(*u), gr_to_matrix(v)), 2));
}

/// A + Bz + Cz^2 + Dz^3 from four equal row blocks of the unit.
inline ConvCode ldpc_conv_memory3(const GroupRingElem& v) {
  const auto u = gr_inverse(v);
  if (!u) throw std::domain_error("element is not a unit");
  return build_memory3(split_equal(UnitScheme(gr_to_matrix(*u), gr_to_matrix(v)), 4));
}

/// Bounded random search for a unit of the given (odd) support whose
/// matrix has no 4-cycles. Returns the first hit, or nothing.
inline std::optional<GroupRingElem> find_sparse_unit(std::size_t n, std::size_t support, std::uint64_t seed, std::size_t tries) {
  if (support % 2 == 0) throw std::invalid_argument("units of Z2(G) have odd support; even support never works");
  if (support > 4 * n) throw std::invalid_argument("support exceeds group order");
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < tries; ++t) {
    GroupRingElem e(n);
    std::size_t placed = 0;
    while (placed < support) {
      const std::size_t idx = rng() % (4 * n);
      if (e.at(idx)) continue;
      e.set(idx / n, idx % n, true);
      ++placed;
    }
    const Mat m = gr_to_matrix(e);
    if (short_cycle_census(m).four_cycles) continue;
    if (gr_inverse(e)) return e;
  }
  return std::nullopt;
}

}  // namespace unitcodes
