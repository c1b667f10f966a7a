#pragma once

// The table of published examples, each re-derived from scratch and compared
// with the claimed numbers. Shared by `unit-codes repro` and the acceptance
// binary.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unitcodes/unitcodes.hpp"

namespace unitcodes::repro {

struct Line {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = true;
  bool info = false;  // context only, never fails
};

struct Options {
  Budget budget;
  std::uint64_t seed = 1;
  bool slow = true;         // run the multi-minute (I, 2H) enumeration
  std::uint64_t slow_cap = 300'000'000;
};

struct Example {
  std::string id;
  int criterion;
  std::string title;
  std::function<std::vector<Line>(const Options&)> run;
};

namespace detail {

template <class T>
std::string str(const T& v) {
  std::ostringstream o;
  o << std::boolalpha << v;
  return o.str();
}

inline std::string block_params(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
  return "[" + str(n) + "," + str(k) + (d ? "," + str(*d) : "") + "]";
}

inline std::string conv_params(const ConvCode& c) {
  return "(" + str(c.n()) + "," + str(c.k()) + "," + str(c.delta()) + ";" + str(c.memory()) + ")";
}

struct Sheet {
  std::vector<Line> lines;

  template <class T>
  void eq(const std::string& label, const T& expected, const T& actual) {
    lines.push_back({label, str(expected), str(actual), expected == actual});
  }
  void ok(const std::string& label, bool cond, const std::string& actual = "") {
    lines.push_back({label, "true", actual.empty() ? str(cond) : actual, cond});
  }
  void note(const std::string& label, const std::string& actual) { lines.push_back({label, "", actual, true, true}); }
};

// Runs fn; exceptions other than budget overruns become a failed line.
inline std::vector<Line> guarded(const std::function<void(Sheet&)>& fn) {
  Sheet s;
  try {
    fn(s);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::exception& e) {
    s.lines.push_back({"completed without error", "true", e.what(), false});
  }
  return s.lines;
}

inline std::vector<std::size_t> iota_rows(std::size_t count) {
  std::vector<std::size_t> r(count);
  for (std::size_t i = 0; i < count; ++i) r[i] = i;
  return r;
}

inline const char* kPublishedLdpcElement = "g^15 + g^9 + g^5 + h*g^21 + h*g^4 + h^2*g^2 + h^3*g^2 + h^3*g^12 @ C24xC4";

// Random orthogonal matrix over an odd-characteristic prime field: a product
// of plane rotations (c, s), c^2 + s^2 = 1, with random sign flips.
inline Mat random_orthogonal(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<Rep, Rep>> circle;
  for (Rep c = 0; c < f.order(); ++c)
    for (Rep s = 0; s < f.order(); ++s)
      if (f.add(f.mul(c, c), f.mul(s, s)) == 1 && s != 0) circle.emplace_back(c, s);
  Mat q = Mat::identity(f, n);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t a = rng() % n;
    std::size_t b = rng() % (n - 1);
    if (b >= a) ++b;
    const auto [c, s] = circle[rng() % circle.size()];
    Mat g = Mat::identity(f, n);
    g(a, a) = c;
    g(b, b) = c;
    g(a, b) = s;
    g(b, a) = f.neg(s);
    q = g * q;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = f.neg(q(i, j));
  return q;
}

inline Mat random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Rep>(rng() % f.order());
    if (rank(m) == n) return m;
  }
}

}  // namespace detail

inline std::vector<Example> examples() {
  using detail::Sheet;
  using detail::str;
  std::vector<Example> ex;

  ex.push_back({"fourier-dc", 1, "F7 over GF(8), rows 0..3: mds, dual-containing, CSS", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto fs = fourier_scheme(7, Field::gf(2, 3));
      const auto rep = classify(mds_window_code(fs, 0, 4), o.budget);
      s.eq("parameters", std::string("[7,4,4]"), detail::block_params(rep.n, rep.k, rep.d));
      s.eq("dual-containing", true, rep.dc);
      s.eq("mds", true, rep.mds.value_or(false));
      s.eq("css", std::string("[[7,1,4]]"), rep.css ? "[[" + str(rep.css->n) + "," + str(rep.css->k) + "," + str(rep.css->d) + "]]" : "none");
    });
  }});

  ex.push_back({"fourier-lcd", 2, "F8 over GF(17), rows (6,7,0,1,2): mds LCD", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto fs = fourier_scheme(8, Field::gf(17));
      const auto la = lcd_arrangement(fs, 6);
      s.eq("generator rows", std::string("6 7 0 1 2"), [&] {
        std::string r;
        for (std::size_t t = 0; t < la.code.r(); ++t) r += (r.empty() ? "" : " ") + str(la.display_rows[t]);
        return r;
      }());
      const auto rep = classify(la.code, o.budget);
      s.eq("parameters", std::string("[8,5,4]"), detail::block_params(rep.n, rep.k, rep.d));
      s.eq("lcd", true, rep.lcd);
      s.eq("mds", true, rep.mds.value_or(false));
    });
  }});

  ex.push_back({"hamming-conv", 3, "Hamming unit, G = L + (0; K)z", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto h = hamming_unit();
      const auto split = split_sizes(h.scheme, {4, 3});
      s.eq("block code from rows 0..3", std::string("[7,4,3]"),
           detail::block_params(7, 4, min_distance(derive_block_code(h.scheme, {0, 1, 2, 3}), o.budget)));
      const auto c = build_memory1_unequal(split);
      s.eq("parameters", std::string("(7,4,3;1)"), detail::conv_params(c));
      s.eq("non-catastrophic", true, is_noncatastrophic(c));
      const auto fd = free_distance(c, std::nullopt, o.budget);
      s.eq("free distance", std::size_t{6}, fd.value);
      s.eq("settled", true, fd.settled);
      s.ok("depth <= 4", fd.depth <= 4, str(fd.depth));
      s.note("search certified exact", str(fd.certified));
      s.note("closed-form min{d(A1), d(A)+d(A1;B)}", str(memory1_unequal_distance_formula(split, o.budget)));
    });
  }});

  ex.push_back({"fourier-conv-mds", 4, "F7 over GF(8), A = e0..e3, B = e4..e6", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto fs = fourier_scheme(7, Field::gf(2, 3));
      const auto c = build_memory1_unequal(split_sizes(fs.scheme, {4, 3}));
      s.eq("parameters", std::string("(7,4,3;1)"), detail::conv_params(c));
      const auto fd = free_distance(c, std::nullopt, o.budget);
      s.eq("free distance", std::size_t{7}, fd.value);
      s.eq("gsb(7,4,3)", std::size_t{7}, gsb(7, 4, 3));
      s.eq("settled", true, fd.settled);
      s.eq("class", std::string("lcd"), std::string(to_string(conv_classify(c))));
    });
  }});

  ex.push_back({"fourier-conv-dc", 5, "F7 over GF(8), A = (e0,e1,e6,e2,e5), B = (e4,e3)", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto fs = fourier_scheme(7, Field::gf(2, 3));
      const auto c = build_memory1_unequal(SchemeSplit(fs.scheme, {{0, 1, 6, 2, 5}, {4, 3}}));
      s.eq("parameters", std::string("(7,5,2;1)"), detail::conv_params(c));
      const auto fd = free_distance(c, std::nullopt, o.budget);
      s.eq("free distance", std::size_t{5}, fd.value);
      s.eq("gsb(7,5,2)", std::size_t{5}, gsb(7, 5, 2));
      s.eq("settled", true, fd.settled);
      s.eq("class", std::string("dc"), std::string(to_string(conv_classify(c))));
    });
  }});

  ex.push_back({"golay-block", 6, "(I12, X) with the Golay reverse circulant X", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto code = self_dual_from_orthogonal(golay_x());
      const auto rep = classify(code, o.budget);
      s.eq("parameters", std::string("[24,12,8]"), detail::block_params(rep.n, rep.k, rep.d));
      s.eq("self-dual", true, rep.self_dual);
    });
  }});

  ex.push_back({"golay-conv", 7, "Golay X in four 3-row blocks, memory 3", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto c = build_memory3(split_equal(golay_unit().scheme, 4));
      s.eq("parameters", std::string("(12,3,9;3)"), detail::conv_params(c));
      const auto fd = free_distance(c, std::nullopt, o.budget);
      s.eq("free distance", std::size_t{20}, fd.value);
      s.eq("settled", true, fd.settled);
      s.ok("depth <= 9", fd.depth <= 9, str(fd.depth));
      if (fd.value >= 20 && 3 <= fd.depth) {
        const auto p2 = support_distance_profile(c, 2, 3, o.budget);
        s.ok("support 2 weight >= 21", p2 >= 21, str(p2));
      }
      const auto d = dual_code(c);
      s.eq("dual (n,k;memory)", std::string("(12,9;3)"), "(" + str(d.n()) + "," + str(d.k()) + ";" + str(d.memory()) + ")");
      s.note("dual degree", str(d.delta()));
      s.eq("dual class", std::string("dc"), std::string(to_string(conv_classify(d))));
    });
  }});

  ex.push_back({"x4-suite", 8, "4x4 binary orthogonal X", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto x = binary_x4().scheme;
      const auto m1 = build_memory1_equal(split_equal(x, 2));
      s.eq("memory-1 parameters", std::string("(4,2,2;1)"), detail::conv_params(m1));
      s.eq("memory-1 class", std::string("self_dual"), std::string(to_string(conv_classify(m1))));
      s.eq("memory-1 free distance", std::size_t{4}, free_distance(m1, std::nullopt, o.budget).value);
      s.ok("memory-1 support 2 weight >= 5", support_distance_profile(m1, 2, 3, o.budget) >= 5,
           str(support_distance_profile(m1, 2, 3, o.budget)));

      const auto m3 = build_memory3(split_equal(x, 4));
      s.eq("memory-3 (n,k;memory)", std::string("(4,1;3)"), "(" + str(m3.n()) + "," + str(m3.k()) + ";" + str(m3.memory()) + ")");
      s.note("memory-3 degree", str(m3.delta()));
      s.eq("memory-3 free distance", std::size_t{12}, free_distance(m3, std::nullopt, o.budget).value);

      const auto r3 = mixed_rate_builder(split_equal(x, 4), MixedPattern::rate34_mem3);
      s.eq("rate-3/4 memory-3 parameters", std::string("(4,3,9;3)"), detail::conv_params(r3));
      s.eq("rate-3/4 memory-3 class", std::string("dc"), std::string(to_string(conv_classify(r3))));
      const bool nc = is_noncatastrophic(r3);
      s.eq("rate-3/4 memory-3 non-catastrophic", true, nc);
      if (nc) {
        const auto fd = free_distance(r3, std::nullopt, o.budget);
        s.eq("rate-3/4 memory-3 free distance", std::size_t{4}, fd.value);
      } else {
        s.lines.push_back({"rate-3/4 memory-3 free distance", "4", "refused: catastrophic generator", false});
      }

      const auto r1 = mixed_rate_builder(split_equal(x, 4), MixedPattern::rate34_mem1);
      s.eq("rate-3/4 memory-1 parameters", std::string("(4,3,1;1)"), detail::conv_params(r1));
      s.eq("rate-3/4 memory-1 class", std::string("dc"), std::string(to_string(conv_classify(r1))));
      s.eq("rate-3/4 memory-1 free distance", std::size_t{2}, free_distance(r1, std::nullopt, o.budget).value);
    });
  }});

  ex.push_back({"hadamard12", 9, "Paley H12 over GF(5)", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const Field f = Field::gf(5);
      const auto hu = hadamard12_unit(f);
      const std::pair<std::size_t, std::size_t> want[] = {{3, 6}, {6, 6}, {9, 2}};
      for (auto [k, d] : want) {
        const auto rep = classify(derive_block_code(hu.scheme, detail::iota_rows(k)), o.budget);
        s.eq("rows 0.." + str(k - 1), detail::block_params(12, k, d), detail::block_params(rep.n, rep.k, rep.d));
        s.eq("rows 0.." + str(k - 1) + " lcd", true, rep.lcd);
      }
      const auto c = build_memory1_equal(split_equal(hu.scheme, 2), Twist::i);
      s.eq("twisted memory-1 parameters", std::string("(12,6,6;1)"), detail::conv_params(c));
      s.eq("twisted memory-1 class", std::string("self_dual"), std::string(to_string(conv_classify(c))));
      const auto fd = free_distance(c, std::nullopt, o.budget);
      s.eq("twisted memory-1 free distance", std::size_t{12}, fd.value);
      s.eq("quantum code", std::string("[[12,0,12]]"), "[[12," + str(2 * c.k() - c.n()) + "," + str(fd.value) + "]]");

      const Mat h = hadamard12(f);
      const auto code = BlockCode::from_generator(hstack(Mat::identity(f, 12), scaled(h, 2)));
      if (!o.slow) {
        s.lines.push_back({"(I, 2H)", "[24,12,8] self-dual", "skipped (slow)", false});
        return;
      }
      Budget big = o.budget;
      big.cap = std::max(big.cap, o.slow_cap);
      const auto rep = classify(code, big);
      s.eq("(I, 2H) self-dual", true, rep.self_dual);
      s.note("(I, 2H) intersection with dual", str(rep.intersection_dim));
      s.eq("(I, 2H) parameters", std::string("[24,12,8]"), detail::block_params(rep.n, rep.k, rep.d));
    });
  }});

  ex.push_back({"ldpc", 10, "group ring element v in Z2(C24 x C4)", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      const auto v = GroupRingElem::parse(detail::kPublishedLdpcElement);
      const Mat m = gr_to_matrix(v);
      const auto cyc = short_cycle_census(m);
      s.eq("support of v", std::size_t{8}, v.support());
      s.eq("max row weight", std::size_t{8}, cyc.max_row_weight);
      s.eq("max column weight", std::size_t{8}, cyc.max_col_weight);
      s.eq("four-cycles", std::uint64_t{0}, static_cast<std::uint64_t>(cyc.four_cycles));
      const bool unit = gr_inverse(v).has_value();
      s.eq("v is a unit", true, unit);
      s.note("rank of the 96x96 matrix", str(rank(m)));
      if (unit) {
        const auto der = ldpc_derive(v, ldpc_rows(96, 48));
        s.eq("derived code", std::string("[96,48]"), detail::block_params(der.code.n(), der.code.r(), std::nullopt));
        s.ok("control column weight <= 8", der.cycles.max_col_weight <= 8, str(der.cycles.max_col_weight));
        const auto c = ldpc_conv_memory1(v);
        s.ok("D + Cz annihilates G", (c.generator() * *c.control()).is_zero());
      } else {
        s.lines.push_back({"derived [96,48] code", "G.D = 0", "not derivable: v is not a unit", false});
      }
      // a unit with the same shape, to show the pipeline itself works
      const auto w = find_sparse_unit(24, 7, o.seed, 2000);
      if (!w) {
        s.note("supplementary unit search", "no odd-support unit found");
        return;
      }
      const auto der = ldpc_derive(*w, ldpc_rows(96, 48), Girth::four);
      s.note("supplementary unit", w->to_string());
      s.note("supplementary derived code", detail::block_params(der.code.n(), der.code.r(), std::nullopt) + ", control four-cycles " +
                                               str(der.cycles.four_cycles) + ", max column weight " + str(der.cycles.max_col_weight));
      const auto c = ldpc_conv_memory1(*w);
      const auto& h = *c.control();
      const auto c0 = short_cycle_census(h.coeff(0)).four_cycles, c1 = short_cycle_census(h.coeff(1)).four_cycles;
      s.note("supplementary memory-1 control", std::string((c.generator() * h).is_zero() ? "annihilates G" : "FAILS to annihilate G") +
                                                   ", four-cycles per block " + str(c0) + "/" + str(c1));
    });
  }});

  ex.push_back({"properties", 11, "randomised property suites", [](const Options& o) {
    return detail::guarded([&](Sheet& s) {
      std::mt19937_64 rng(o.seed);
      // unit derivation identities
      {
        std::size_t bad = 0, total = 0;
        for (auto [p, m] : std::vector<std::pair<Rep, Rep>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {13, 1}}) {
          const Field f = Field::gf(p, m);
          for (int t = 0; t < 200; ++t, ++total) {
            const std::size_t n = 2 + rng() % 7;
            const auto sch = make_scheme(detail::random_invertible(f, n, rng));
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < n; ++i)
              if (rng() & 1) rows.push_back(i);
            if (rows.empty()) rows.push_back(0);
            if (rows.size() == n) rows.pop_back();
            const auto c = derive_block_code(sch, rows);
            const bool good = (c.generator() * c.control()).is_zero() && rank(c.generator()) == rows.size() &&
                              rank(c.control()) == n - rows.size() && sch.u() * sch.v() == scaled(Mat::identity(f, n), sch.alpha());
            bad += !good;
          }
        }
        s.eq("derivation identities fail on " + str(std::size_t{1600}) + " random schemes", std::size_t{0}, bad);
      }
      // d_f = d(A) + d(B) on random orthogonal memory-1 builds
      std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> seen;  // n, k, delta, d_f
      std::vector<ConvCode> orthogonal_builds;
      {
        std::size_t equal = 0, below = 0;
        std::string first_gap;
        for (int t = 0; t < 20; ++t) {
          static const Rep primes[] = {5, 7, 11, 13};
          const Field f = Field::gf(primes[t % 4]);
          const std::size_t n = t % 8 < 4 ? 4 : 6;
          const Mat q = detail::random_orthogonal(f, n, rng);
          const auto split = split_equal(UnitScheme(q, transpose(q)), 2);
          const auto c = build_memory1_equal(split);
          orthogonal_builds.push_back(c);
          const auto fd = free_distance(c, std::nullopt, o.budget);
          const std::size_t da = unitcodes::detail::min_weight_rowspace(split.u_block(0), o.budget);
          const std::size_t db = unitcodes::detail::min_weight_rowspace(split.u_block(1), o.budget);
          seen.emplace_back(c.n(), c.k(), c.delta(), fd.value);
          if (fd.value == da + db) ++equal;
          else if (first_gap.empty()) first_gap = f.literal() + " n=" + str(n) + ": d_f " + str(fd.value) + " vs " + str(da) + "+" + str(db);
          if (fd.value < da + db) ++below;
        }
        const std::size_t tried = seen.size();
        s.eq("d_f = d(A)+d(B) on random orthogonal builds", str(tried) + "/" + str(tried), str(equal) + "/" + str(tried));
        if (!first_gap.empty()) s.note("first disagreement", first_gap);
        s.eq("d_f < d(A)+d(B) (lower bound broken)", std::size_t{0}, below);
      }
      // support profile bound
      {
        // the builds the bound is claimed for: memory-1 equal splits, plus the
        // Hamming and Golay examples
        std::vector<std::pair<std::string, ConvCode>> codes;
        codes.emplace_back("binary-x4 memory-1", build_memory1_equal(split_equal(binary_x4().scheme, 2)));
        codes.emplace_back("golay memory-3", build_memory3(split_equal(golay_unit().scheme, 4)));
        codes.emplace_back("hamming memory-1", build_memory1_unequal(split_sizes(hamming_unit().scheme, {4, 3})));
        for (std::size_t t = 0; t < orthogonal_builds.size(); t += 4)
          codes.emplace_back("random orthogonal #" + str(t), orthogonal_builds[t]);
        std::string broken;
        for (const auto& [name, c] : codes) {
          const std::size_t df = free_distance(c, std::nullopt, o.budget).value;
          seen.emplace_back(c.n(), c.k(), c.delta(), df);
          for (std::size_t sup = 1; sup <= 3; ++sup) {
            const std::size_t w = support_distance_profile(c, sup, sup + 1, o.budget);
            if (w < df + sup - 1) broken += (broken.empty() ? "" : "; ") + name + " s=" + str(sup) + ": " + str(w) + " < " + str(df + sup - 1);
          }
        }
        s.eq("support profile d(PG) >= d_f + s - 1", std::string("no violations"), broken.empty() ? std::string("no violations") : broken);
      }
      // gsb ceiling
      {
        std::size_t over = 0;
        for (auto [n, k, delta, df] : seen) over += df > gsb(n, k, delta);
        s.eq("oracle values above gsb (" + str(seen.size()) + " codes)", std::size_t{0}, over);
      }
      // field axioms
      {
        std::size_t fields = 0, bad = 0;
        for (std::uint32_t q = 2; q <= 64; ++q) {
          std::uint32_t p = 0, m = 0;
          for (std::uint32_t d = 2; d <= q && !p; ++d)
            if (q % d == 0) p = d;
          std::uint32_t rest = q;
          for (; rest % p == 0; rest /= p) ++m;
          if (rest != 1) continue;
          const Field f = Field::gf(p, m);
          ++fields;
          for (Rep a = 0; a < q; ++a) {
            bad += f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0 || f.mul(a, 0) != 0;
            if (a) bad += f.mul(a, f.inv(a)) != 1;
            for (Rep b = 0; b < q; ++b) {
              bad += f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a);
              for (Rep c = 0; c < q; ++c)
                bad += f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) || f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
                       f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c));
            }
          }
        }
        s.eq("field axiom failures over " + str(fields) + " fields of order <= 64", std::size_t{0}, bad);
      }
    });
  }});

  return ex;
}

}  // namespace unitcodes::repro
