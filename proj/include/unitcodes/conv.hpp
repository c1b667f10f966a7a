#pragma once

// Convolutional codes from unit schemes: the memory-1, 2 and 3 builders,
// duals, classification, and a trellis search for the free distance.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitcodes/block.hpp"
#include "unitcodes/errors.hpp"
#include "unitcodes/parallel.hpp"
#include "unitcodes/polymat.hpp"
#include "unitcodes/scheme.hpp"

namespace unitcodes {

enum class Twist { plain, i };

class ConvCode {
 public:
  /// Checks g * control = 0 and g * right_inverse = I when given.
  explicit ConvCode(PolyMat g, std::optional<PolyMat> control = std::nullopt,
                    std::optional<PolyMat> right_inverse = std::nullopt)
      : g_(std::move(g)), control_(std::move(control)), rinv_(std::move(right_inverse)) {
    if (g_.rows() == 0 || g_.rows() >= g_.cols()) throw std::invalid_argument("generator must be k x n with 0 < k < n");
    if (control_ && !(g_ * *control_).is_zero()) throw std::logic_error("G(z) * control(z) != 0");
    if (rinv_ && g_ * *rinv_ != PolyMat::identity(g_.field(), g_.rows())) throw std::logic_error("G(z) * R(z) != I");
  }

  const PolyMat& generator() const noexcept { return g_; }
  const std::optional<PolyMat>& control() const noexcept { return control_; }
  const std::optional<PolyMat>& stored_right_inverse() const noexcept { return rinv_; }
  const Field& field() const noexcept { return g_.field(); }
  std::size_t n() const noexcept { return g_.cols(); }
  std::size_t k() const noexcept { return g_.rows(); }

  std::vector<std::size_t> row_degrees() const {
    std::vector<std::size_t> d(k());
    for (std::size_t i = 0; i < k(); ++i) d[i] = static_cast<std::size_t>(std::max(0L, g_.row_degree(i)));
    return d;
  }
  std::size_t delta() const {
    std::size_t s = 0;
    for (auto d : row_degrees()) s += d;
    return s;
  }
  std::size_t memory() const {
    const auto d = row_degrees();
    return *std::max_element(d.begin(), d.end());
  }

  /// Stored right inverse, else one found by column reduction.
  std::optional<PolyMat> right_inverse() const {
    if (rinv_) return rinv_;
    return unitcodes::right_inverse(g_);
  }

 private:
  PolyMat g_;
  std::optional<PolyMat> control_, rinv_;
};

/// Generalised Singleton bound (n-r)(floor(delta/r)+1) + delta + 1.
inline std::size_t gsb(std::size_t n, std::size_t r, std::size_t delta) {
  if (r == 0 || r >= n) throw std::invalid_argument("gsb needs 0 < r < n");
  return (n - r) * (delta / r + 1) + delta + 1;
}

inline bool is_noncatastrophic(const ConvCode& c) {
  if (c.stored_right_inverse()) return true;
  return right_inverse(c.generator()).has_value();
}

namespace detail {

struct Twisted {
  SchemeSplit split;
  Rep i;
};

// Puts the split over a field holding i when the twist asks for it.
inline Twisted resolve_twist(const SchemeSplit& s, Twist tw) {
  const Field& f = s.scheme.field();
  if (tw == Twist::plain || f.characteristic() == 2) return {s, 1};
  if (auto i = sqrt_minus_one(f)) return {s, i->rep()};
  const auto ext = quadratic_extension(f);
  SchemeSplit big = embed(s, ext);
  return {big, sqrt_minus_one(ext.extended)->rep()};
}

inline PolyMat poly(std::vector<Mat> coeffs) { return PolyMat::from_coeffs(coeffs); }

inline Mat zeros(const Field& f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

}  // namespace detail

/// G = A + Bz with control D - Cz; twisted: G = A + iBz with control iD + Cz.
inline ConvCode build_memory1_equal(const SchemeSplit& split, Twist tw = Twist::plain) {
  if (split.blocks() != 2 || split.partition[0].size() != split.partition[1].size())
    throw std::invalid_argument("memory-1 equal build needs two blocks of equal size");
  auto [s, i] = detail::resolve_twist(split, tw);
  const Field& f = s.scheme.field();
  const Mat a = s.u_block(0), b = s.u_block(1), c = s.v_block(0), d = s.v_block(1);
  const Rep ainv = f.inv(s.scheme.alpha());
  PolyMat g = detail::poly({a, scaled(b, i)});
  PolyMat h = tw == Twist::plain ? detail::poly({d, -c}) : detail::poly({scaled(d, i), c});
  return ConvCode(std::move(g), std::move(h), PolyMat::constant(scaled(c, ainv)));
}

/// G = A + B1 z, B1 = (0_t ; B), t = 2r - n; control D - C1 z with C1 the
/// last n-r columns of C. Twisted: A + i B1 z with control iD + C1 z.
inline ConvCode build_memory1_unequal(const SchemeSplit& split, Twist tw = Twist::plain) {
  if (split.blocks() != 2) throw std::invalid_argument("memory-1 build needs two blocks");
  const std::size_t r = split.partition[0].size(), nr = split.partition[1].size();
  if (r <= nr) throw std::invalid_argument("unequal memory-1 build needs the first block larger (2r > n)");
  auto [s, i] = detail::resolve_twist(split, tw);
  const Field& f = s.scheme.field();
  const std::size_t n = s.scheme.n(), t = r - nr;
  const Mat a = s.u_block(0), b = s.u_block(1), c = s.v_block(0), d = s.v_block(1);
  const Mat b1 = vstack(detail::zeros(f, t, n), b);
  std::vector<std::size_t> last;
  for (std::size_t j = t; j < r; ++j) last.push_back(j);
  const Mat c1 = select_cols(c, last);
  const Rep ainv = f.inv(s.scheme.alpha());
  PolyMat g = detail::poly({a, scaled(b1, i)});
  PolyMat h = tw == Twist::plain ? detail::poly({d, -c1}) : detail::poly({scaled(d, i), c1});
  return ConvCode(std::move(g), std::move(h), PolyMat::constant(scaled(c, ainv)));
}

/// G = A + Bz + Cz^2 + Dz^3 over four equal blocks, with control
/// (F,G,H) - (E,H,G)z - (H,E,F)z^2 + (G,F,E)z^3.
inline ConvCode build_memory3(const SchemeSplit& split, Twist tw = Twist::plain) {
  if (split.blocks() != 4) throw std::invalid_argument("memory-3 build needs four blocks");
  for (const auto& p : split.partition)
    if (p.size() != split.partition[0].size()) throw std::invalid_argument("memory-3 build needs four equal blocks");
  if (tw == Twist::i && split.scheme.field().characteristic() != 2)
    throw std::invalid_argument("memory-3 build has no twisted form outside characteristic 2");
  const Field& f = split.scheme.field();
  const Mat a = split.u_block(0), b = split.u_block(1), c = split.u_block(2), d = split.u_block(3);
  const Mat e = split.v_block(0), ff = split.v_block(1), g = split.v_block(2), h = split.v_block(3);
  auto cat3 = [](const Mat& x, const Mat& y, const Mat& z) { return hstack(hstack(x, y), z); };
  PolyMat gen = detail::poly({a, b, c, d});
  PolyMat ctl = detail::poly({cat3(ff, g, h), -cat3(e, h, g), -cat3(h, e, ff), cat3(g, ff, e)});
  return ConvCode(std::move(gen), std::move(ctl), PolyMat::constant(scaled(e, f.inv(split.scheme.alpha()))));
}

/// G = A + Bz + Cz^2 over three equal blocks. Control (E,F) - (D,E)z: the
/// two columns blocks solve p + zq + z^2 r = 0 in the coefficients of D, E, F.
inline ConvCode build_memory2_three_blocks(const SchemeSplit& split) {
  if (split.blocks() != 3) throw std::invalid_argument("memory-2 build needs three blocks");
  for (const auto& p : split.partition)
    if (p.size() != split.partition[0].size()) throw std::invalid_argument("memory-2 build needs three equal blocks");
  const Field& f = split.scheme.field();
  const Mat a = split.u_block(0), b = split.u_block(1), c = split.u_block(2);
  const Mat d = split.v_block(0), e = split.v_block(1), ff = split.v_block(2);
  PolyMat gen = detail::poly({a, b, c});
  PolyMat ctl = detail::poly({hstack(e, ff), -hstack(d, e)});
  return ConvCode(std::move(gen), std::move(ctl), PolyMat::constant(scaled(d, f.inv(split.scheme.alpha()))));
}

enum class MixedPattern { rate34_mem1, rate34_mem3 };

/// Rate-3/4 codes over four equal blocks E0..E3 (V blocks F0..F3).
/// rate34_mem1: (E0;E1;E2) + i(0;0;E3)z, the unequal memory-1 build.
/// rate34_mem3: rows E_{j xor 0..3} at z^0..z^3, control F3 + F2 z + F1 z^2 + F0 z^3;
/// the row sums only cancel in characteristic 2.
inline ConvCode mixed_rate_builder(const SchemeSplit& split, MixedPattern pattern, Twist tw = Twist::i) {
  if (split.blocks() != 4) throw std::invalid_argument("rate-3/4 builders need four blocks");
  for (const auto& p : split.partition)
    if (p.size() != split.partition[0].size()) throw std::invalid_argument("rate-3/4 builders need four equal blocks");
  if (pattern == MixedPattern::rate34_mem1) {
    std::vector<std::size_t> head;
    for (std::size_t t = 0; t < 3; ++t) head.insert(head.end(), split.partition[t].begin(), split.partition[t].end());
    return build_memory1_unequal(SchemeSplit(split.scheme, {head, split.partition[3]}), tw);
  }
  if (split.scheme.field().characteristic() != 2)
    throw std::invalid_argument("rate34_mem3 needs characteristic 2");
  std::vector<Mat> e(4), fv(4);
  for (std::size_t t = 0; t < 4; ++t) {
    e[t] = split.u_block(t);
    fv[t] = split.v_block(t);
  }
  std::vector<Mat> coeffs;
  for (std::size_t deg = 0; deg < 4; ++deg) coeffs.push_back(vstack(vstack(e[0 ^ deg], e[1 ^ deg]), e[2 ^ deg]));
  PolyMat gen = detail::poly(coeffs);
  PolyMat ctl = detail::poly({fv[3], fv[2], fv[1], fv[0]});
  return ConvCode(std::move(gen), std::move(ctl));
}

/// H(z^{-1}) z^m for the control H^T(z), with m the control's degree.
inline PolyMat dual_generator(const ConvCode& c) {
  if (!c.control()) throw std::invalid_argument("dual generator needs a control matrix");
  const PolyMat& h = *c.control();
  return transpose(reversed(h, static_cast<std::size_t>(std::max(0L, h.degree()))));
}

/// The dual code as a ConvCode: generator from dual_generator, control the
/// reversed transpose of G.
inline ConvCode dual_code(const ConvCode& c) {
  PolyMat g = dual_generator(c);
  PolyMat ctl = reversed(transpose(c.generator()), c.memory());
  auto r = right_inverse(g);
  return ConvCode(std::move(g), std::move(ctl), std::move(r));
}

enum class ConvClass { none, lcd, dc, self_dual };

inline const char* to_string(ConvClass c) {
  switch (c) {
    case ConvClass::lcd: return "lcd";
    case ConvClass::dc: return "dc";
    case ConvClass::self_dual: return "self_dual";
    default: return "none";
  }
}

namespace detail {
// Rows of x lie in the module spanned by g, given a right inverse r of g.
inline bool module_contains(const PolyMat& g, const PolyMat& r, const PolyMat& x) { return (x * r) * g == x; }
}  // namespace detail

/// DC: the dual generator lies in the code's module. Self-dual: DC with
/// n = 2k and the reverse containment. LCD: [G; G^] has full rank n over
/// F(z), so the two modules meet only in zero.
/// Without a polynomial right inverse the containments are tested over F(z)
/// through the control matrix (G^ * H = 0), which needs rank H = n - k.
inline ConvClass conv_classify(const ConvCode& c) {
  if (!c.control()) throw std::invalid_argument("classification needs a control matrix");
  const PolyMat gd = dual_generator(c);
  const auto r = c.right_inverse();
  bool dc = false;
  if (r) {
    dc = detail::module_contains(c.generator(), *r, gd);
  } else {
    if (rank(*c.control()) != c.n() - c.k())
      throw std::invalid_argument("classification needs a polynomial right inverse or a full-rank control");
    dc = (gd * *c.control()).is_zero();
  }
  if (dc) {
    if (c.n() == 2 * c.k()) {
      if (auto rd = right_inverse(gd); rd && detail::module_contains(gd, *rd, c.generator())) return ConvClass::self_dual;
      if (!r && rank(vstack(c.generator(), gd)) == c.k()) return ConvClass::self_dual;
    }
    return ConvClass::dc;
  }
  if (rank(vstack(c.generator(), gd)) == c.n()) return ConvClass::lcd;
  return ConvClass::none;
}

struct FreeDistance {
  std::size_t value = 0;
  bool settled = false;
  bool certified = false;  // search space exhausted: exact free distance
  std::size_t depth = 0;   // last information degree explored
  std::vector<std::size_t> by_depth;  // running minimum per degree bound
};

/// Minimum weight of P(z) G(z) over nonzero P with deg P <= depth, by a
/// trellis search over the controller-form state (the last row_degree(i)
/// inputs of each row).
inline FreeDistance free_distance(const ConvCode& c, std::optional<std::size_t> max_depth = std::nullopt,
                                  const Budget& budget = {}) {
  if (!is_noncatastrophic(c)) throw std::invalid_argument("free distance refused: catastrophic generator");
  const Field& f = c.field();
  const std::size_t n = c.n(), k = c.k(), mu = c.memory();
  const std::uint64_t q = f.order();
  const auto deg = c.row_degrees();
  const std::size_t delta = c.delta();
  const std::size_t depth_cap = max_depth.value_or(3 * mu + 2);
  constexpr std::uint64_t kTableCap = std::uint64_t{1} << 22;

  const std::uint64_t states = detail::sat_pow(q, delta), inputs = detail::sat_pow(q, k);
  if (states > std::min(budget.cap, kTableCap)) throw BudgetExceeded("free distance state table", states, std::min(budget.cap, kTableCap));
  if (inputs > std::min(budget.cap, kTableCap)) throw BudgetExceeded("free distance input table", inputs, std::min(budget.cap, kTableCap));

  const auto gc = c.generator().coeffs();
  // slot (i, j), j = 1..deg[i], holds u^{(i)} from j steps before the next output
  std::vector<std::size_t> offset(k);
  for (std::size_t i = 0, at = 0; i < k; ++i) {
    offset[i] = at;
    at += deg[i];
  }
  std::vector<std::uint64_t> pw(delta + 1, 1);
  for (std::size_t t = 1; t <= delta; ++t) pw[t] = pw[t - 1] * q;

  std::vector<Rep> contrib(states * n, 0), ug0(inputs * n, 0);
  std::vector<std::uint32_t> shift(states), inject(inputs);
  for (std::uint64_t s = 0; s < states; ++s) {
    std::uint64_t sh = 0;
    Rep* out = &contrib[s * n];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 1; j <= deg[i]; ++j) {
        const Rep v = static_cast<Rep>((s / pw[offset[i] + j - 1]) % q);
        if (!v) continue;
        if (j < deg[i]) sh += v * pw[offset[i] + j];
        for (std::size_t col = 0; col < n; ++col)
          if (gc[j](i, col)) out[col] = f.add(out[col], f.mul(v, gc[j](i, col)));
      }
    shift[s] = static_cast<std::uint32_t>(sh);
  }
  for (std::uint64_t u = 0; u < inputs; ++u) {
    std::uint64_t inj = 0, rest = u;
    Rep* out = &ug0[u * n];
    for (std::size_t i = 0; i < k; ++i) {
      const Rep v = static_cast<Rep>(rest % q);
      rest /= q;
      if (!v) continue;
      if (deg[i] > 0) inj += v * pw[offset[i]];
      for (std::size_t col = 0; col < n; ++col)
        if (gc[0](i, col)) out[col] = f.add(out[col], f.mul(v, gc[0](i, col)));
    }
    inject[u] = static_cast<std::uint32_t>(inj);
  }
  std::vector<std::uint32_t> flush(states, 0);
  for (std::uint64_t s = 1; s < states; ++s) {
    std::uint32_t total = 0;
    for (std::uint64_t x = s; x != 0; x = shift[x]) total += static_cast<std::uint32_t>(weight(&contrib[x * n], n));
    flush[s] = total;
  }
  // Every extension of a live (nonzero) state still emits u_L G_mu for its
  // last nonzero input u_L, so it costs at least this much more.
  std::size_t tail = 0;
  if (mu > 0 && rank(gc[mu]) == k) tail = detail::min_weight_rowspace(gc[mu], budget);

  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(states, kInf);
  std::uint64_t spent = states + inputs;
  std::size_t best = std::numeric_limits<std::size_t>::max();

  FreeDistance out;
  // degree 0: leave the zero state on a nonzero input
  for (std::uint64_t u = 1; u < inputs; ++u) {
    const std::uint32_t cost = static_cast<std::uint32_t>(weight(&ug0[u * n], n));
    const std::uint32_t ns = inject[u];
    if (ns == 0) best = std::min<std::size_t>(best, cost);
    else dist[ns] = std::min(dist[ns], cost);
  }
  auto settle_depth = [&] {
    for (std::uint64_t s = 1; s < states; ++s)
      if (dist[s] != kInf) best = std::min<std::size_t>(best, std::size_t{dist[s]} + flush[s]);
    out.by_depth.push_back(best);
  };
  settle_depth();

  const unsigned threads = std::max(1u, budget.threads);
  std::size_t depth = 0;
  while (true) {
    std::vector<std::uint32_t> alive;
    for (std::uint64_t s = 1; s < states; ++s)
      if (dist[s] != kInf && dist[s] + tail < best) alive.push_back(static_cast<std::uint32_t>(s));
    if (alive.empty()) {
      out.certified = true;
      break;
    }
    if (depth >= depth_cap) break;
    const std::uint64_t work = detail::sat_mul(alive.size(), inputs);
    spent = work > UINT64_MAX - spent ? UINT64_MAX : spent + work;
    if (spent > budget.cap) throw BudgetExceeded("free distance trellis transitions", spent, budget.cap);

    std::vector<std::vector<std::uint32_t>> next(threads);
    std::vector<std::size_t> local_best(threads, best);
    detail::parallel_ranges(alive.size(), threads, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
      auto& nx = next[w];
      nx.assign(states, kInf);
      std::size_t lb = local_best[w];
      for (std::uint64_t idx = b; idx < e; ++idx) {
        const std::uint32_t s = alive[idx];
        const Rep* cs = &contrib[std::size_t{s} * n];
        const std::uint32_t base = shift[s], d0 = dist[s];
        for (std::uint64_t u = 0; u < inputs; ++u) {
          const Rep* gu = &ug0[u * n];
          std::uint32_t wt = 0;
          for (std::size_t col = 0; col < n; ++col) wt += f.add(cs[col], gu[col]) != 0;
          const std::uint32_t cost = d0 + wt;
          const std::uint32_t ns = base + inject[u];
          if (ns == 0) lb = std::min<std::size_t>(lb, cost);
          else if (cost < nx[ns]) nx[ns] = cost;
        }
      }
      local_best[w] = lb;
    });
    std::fill(dist.begin(), dist.end(), kInf);
    for (unsigned w = 0; w < threads; ++w) {
      best = std::min(best, local_best[w]);
      if (next[w].empty()) continue;
      for (std::uint64_t s = 0; s < states; ++s) dist[s] = std::min(dist[s], next[w][s]);
    }
    ++depth;
    settle_depth();
  }
  out.depth = depth;
  out.value = best;
  const std::size_t d = out.by_depth.size();
  out.settled = out.certified ||
                (d >= 2 && out.by_depth[d - 1] == out.by_depth[d - 2] && out.value <= gsb(n, k, delta));
  return out;
}

/// Minimum weight of P(z) G(z) over P with exactly s nonzero coefficient
/// vectors, the first at degree 0 and all at degree <= depth.
inline std::size_t support_distance_profile(const ConvCode& c, std::size_t s, std::size_t depth, const Budget& budget = {}) {
  if (!is_noncatastrophic(c)) throw std::invalid_argument("support profile refused: catastrophic generator");
  if (s == 0 || s > depth + 1) throw std::invalid_argument("support size must be in [1, depth+1]");
  const Field& f = c.field();
  const std::size_t n = c.n(), k = c.k(), mu = c.memory();
  const std::uint64_t inputs = detail::sat_pow(f.order(), k);
  // C(depth, s-1) placements times (q^k - 1)^s inputs
  std::uint64_t placements = 1;
  for (std::size_t i = 0; i < s - 1; ++i) placements = placements * (depth - i) / (i + 1);
  const std::uint64_t need = detail::sat_mul(placements, detail::sat_pow(inputs - 1, s));
  if (need > budget.cap) throw BudgetExceeded("support profile enumeration", need, budget.cap);

  const auto gc = c.generator().coeffs();
  // images[u][j] = u G_j
  std::vector<std::vector<std::vector<Rep>>> images(inputs, std::vector<std::vector<Rep>>(mu + 1, std::vector<Rep>(n, 0)));
  for (std::uint64_t u = 1; u < inputs; ++u) {
    std::uint64_t rest = u;
    for (std::size_t i = 0; i < k; ++i) {
      const Rep v = static_cast<Rep>(rest % f.order());
      rest /= f.order();
      if (!v) continue;
      for (std::size_t j = 0; j <= mu; ++j)
        for (std::size_t col = 0; col < n; ++col)
          if (gc[j](i, col)) images[u][j][col] = f.add(images[u][j][col], f.mul(v, gc[j](i, col)));
    }
  }
  const std::size_t len = depth + mu + 1;
  std::vector<Rep> word(len * n, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pos(s);
  auto add_term = [&](std::uint64_t u, std::size_t at, bool negate) {
    for (std::size_t j = 0; j <= mu; ++j)
      for (std::size_t col = 0; col < n; ++col) {
        const Rep x = images[u][j][col];
        if (!x) continue;
        Rep& w = word[(at + j) * n + col];
        w = negate ? f.sub(w, x) : f.add(w, x);
      }
  };
  // recurse over positions then inputs
  auto choose_inputs = [&](auto&& self, std::size_t idx) -> void {
    if (idx == s) {
      best = std::min(best, weight(word.data(), word.size()));
      return;
    }
    for (std::uint64_t u = 1; u < inputs; ++u) {
      add_term(u, pos[idx], false);
      self(self, idx + 1);
      add_term(u, pos[idx], true);
    }
  };
  auto choose_pos = [&](auto&& self, std::size_t idx, std::size_t from) -> void {
    if (idx == s) {
      choose_inputs(choose_inputs, 0);
      return;
    }
    for (std::size_t p = from; p + (s - idx) <= depth + 1; ++p) {
      pos[idx] = p;
      self(self, idx + 1, p + 1);
    }
  };
  pos[0] = 0;
  choose_pos(choose_pos, 1, 1);
  return best;
}

/// min{ d(A1), d(A) + d((A1; B)) } for the unequal memory-1 build, A1 the
/// first 2r-n rows of A.
inline std::size_t memory1_unequal_distance_formula(const SchemeSplit& split, const Budget& budget = {}) {
  const Mat a = split.u_block(0), b = split.u_block(1);
  if (a.rows() <= b.rows()) throw std::invalid_argument("formula applies to the unequal split only");
  const std::size_t t = a.rows() - b.rows();
  std::vector<std::size_t> head(t);
  for (std::size_t i = 0; i < t; ++i) head[i] = i;
  const Mat a1 = select_rows(a, head);
  return std::min(detail::min_weight_rowspace(a1, budget),
                  detail::min_weight_rowspace(a, budget) + detail::min_weight_rowspace(vstack(a1, b), budget));
}

}  // namespace unitcodes
