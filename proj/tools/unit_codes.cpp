// unit-codes: build unit-derived block and convolutional codes, analyse them,
// and re-derive the published examples.
//
// Exit codes: 0 ok, 1 usage or bad input, 2 enumeration budget exceeded,
// 3 repro mismatch.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unitcodes/io.hpp"
#include "unitcodes/repro.hpp"
#include "unitcodes/unitcodes.hpp"

using namespace unitcodes;
using io::json;

namespace {

constexpr int kUsage = 1, kBudget = 2, kMismatch = 3;

struct Globals {
  std::string field;
  std::uint64_t cap = std::uint64_t{1} << 26;
  std::size_t depth = 0;  // 0: default 3*memory + 2
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::string out;

  Budget budget() const { return {cap, threads}; }
  std::optional<std::size_t> max_depth() const { return depth ? std::optional<std::size_t>(depth) : std::nullopt; }
};

struct SchemeSource {
  std::string file, named;
  std::size_t fourier = 0;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
}

void emit(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return json::parse(in);
}

Field field_or(const Globals& g, const char* fallback) { return Field::parse(g.field.empty() ? fallback : g.field); }

UnitScheme load_scheme(const SchemeSource& src, const Globals& g) {
  const int given = !src.file.empty() + !src.named.empty() + (src.fourier != 0);
  if (given != 1) throw std::invalid_argument("give exactly one of --scheme, --named, --fourier");
  if (!src.file.empty()) return io::scheme_from_json(read_json(src.file));
  if (!src.named.empty()) return named_unit(src.named, field_or(g, "gf(5)")).scheme;
  return fourier_scheme(src.fourier, field_or(g, "gf(2^3)")).scheme;
}

void add_scheme_options(CLI::App* cmd, SchemeSource& src) {
  cmd->add_option("--scheme", src.file, "scheme JSON file: {\"U\": matrix} or {\"U\": ..., \"V\": ...}");
  cmd->add_option("--named", src.named, "named unit: hamming, golay, binary-x4, extended-hamming, hadamard12");
  cmd->add_option("--fourier", src.fourier, "Fourier scheme of this size over --field");
}

json free_distance_json(const FreeDistance& fd) {
  return {{"value", fd.value}, {"settled", fd.settled}, {"certified", fd.certified}, {"depth", fd.depth}, {"by_depth", fd.by_depth}};
}

json conv_report(const ConvCode& c, bool distance, const Globals& g) {
  json j = io::to_json(c);
  j["noncatastrophic"] = is_noncatastrophic(c);
  j["gsb"] = gsb(c.n(), c.k(), c.delta());
  if (c.control()) {
    try {
      j["class"] = to_string(conv_classify(c));
    } catch (const std::invalid_argument& e) {
      j["class"] = nullptr;
      j["class_note"] = e.what();
    }
  }
  if (distance) j["free_distance"] = free_distance_json(free_distance(c, g.max_depth(), g.budget()));
  return j;
}

// set when a report had to leave the distance out for lack of budget
bool g_budget_hit = false;

json block_report(const BlockCode& c, const Globals& g) {
  const auto rep = classify(c, g.budget());
  if (rep.distance_note) {
    g_budget_hit = true;
    std::cerr << "budget exceeded: " << *rep.distance_note << "; distance omitted, raise --cap\n";
  }
  json j = io::to_json(rep);
  j["code"] = io::to_json(c);
  return j;
}

int run_repro(const std::string& which, bool skip_slow, const Globals& g) {
  repro::Options opt;
  opt.budget = g.budget();
  opt.seed = g.seed;
  opt.slow = !skip_slow;
  const auto table = repro::examples();
  std::vector<const repro::Example*> chosen;
  for (const auto& e : table)
    if (which == "all" || which == e.id || which == std::to_string(e.criterion)) chosen.push_back(&e);
  if (chosen.empty()) {
    std::cerr << "unknown example '" << which << "'; known:";
    for (const auto& e : table) std::cerr << ' ' << e.id;
    std::cerr << '\n';
    return kUsage;
  }
  bool all_pass = true;
  json record = json::array();
  std::ostringstream text;
  for (const auto* e : chosen) {
    const auto lines = e->run(opt);
    bool pass = true;
    for (const auto& l : lines) pass = pass && l.pass;
    all_pass = all_pass && pass;
    text << (pass ? "PASS" : "FAIL") << "  " << e->id << "  (" << e->title << ")\n";
    json jl = json::array();
    for (const auto& l : lines) {
      if (l.info) text << "      info  " << l.label << ": " << l.actual << '\n';
      else if (l.pass) text << "      ok    " << l.label << ": " << l.actual << '\n';
      else text << "      FAIL  " << l.label << ": expected " << l.expected << ", got " << l.actual << '\n';
      jl.push_back({{"label", l.label}, {"expected", l.expected}, {"actual", l.actual}, {"pass", l.pass}, {"info", l.info}});
    }
    record.push_back({{"id", e->id}, {"pass", pass}, {"checks", jl}});
  }
  if (chosen.size() > 1) {
    text << "\nmatrix:";
    std::size_t i = 0;
    for (const auto& r : record) text << (i++ % 4 ? "  " : "\n  ") << r["id"].get<std::string>() << '=' << (r["pass"].get<bool>() ? "PASS" : "FAIL");
    text << '\n';
  }
  std::cout << text.str();
  if (!g.out.empty()) emit(g, record);
  return all_pass ? 0 : kMismatch;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  for (std::string t; std::getline(in, t, ',');) {
    std::size_t used = 0;
    out.push_back(std::stoul(t, &used));
    if (used != t.size()) throw std::invalid_argument("bad list entry '" + t + "'");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit-derived block and convolutional codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "field literal, e.g. gf(5), gf(2^3)");
  app.add_option("--cap", g.cap, "enumeration budget (codewords, states, transitions)");
  app.add_option("--depth", g.depth, "free distance search depth (default 3*memory+2)");
  app.add_option("--threads", g.threads, "worker threads for the oracles")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomised choices");
  app.add_option("--out", g.out, "write the artifact here instead of stdout");

  // fourier
  auto* fourier = app.add_subcommand("fourier", "code from rows of a Fourier matrix");
  std::size_t fn = 0, lcd_r = 0;
  std::string frows, fwindow;
  fourier->add_option("n", fn, "matrix size")->required();
  fourier->add_option("--rows", frows, "comma separated rows");
  fourier->add_option("--window", fwindow, "start,r[,step]: r rows from start in steps");
  fourier->add_option("--lcd", lcd_r, "LCD arrangement with parameter r (2r >= n+2)");

  // named
  auto* named = app.add_subcommand("named", "print a named unit, or a code from its rows");
  std::string nname, nrows;
  named->add_option("name", nname, "hamming, golay, binary-x4, extended-hamming, hadamard12, or 'list'")->required();
  named->add_option("--rows", nrows, "derive the code on these rows");
  bool nsd = false;
  named->add_flag("--self-dual", nsd, "analyse (I, X) for the orthogonal X of the unit");

  // derive
  auto* derive = app.add_subcommand("derive", "code from chosen rows of a unit scheme");
  SchemeSource dsrc;
  std::string drows;
  add_scheme_options(derive, dsrc);
  derive->add_option("--rows", drows, "comma separated rows")->required();

  // conv
  auto* conv = app.add_subcommand("conv", "convolutional code from a split unit scheme");
  SchemeSource csrc;
  std::string csplit, ctwist = "plain", cpattern;
  std::size_t cmemory = 1;
  bool cfree = false, cdual = false;
  add_scheme_options(conv, csrc);
  conv->add_option("--split", csplit, "block sizes, e.g. 4,3 (default: equal blocks)");
  conv->add_option("--memory", cmemory, "1, 2 (three blocks) or 3 (four blocks)")->check(CLI::IsMember({1, 2, 3}));
  conv->add_option("--twist", ctwist, "plain or i")->check(CLI::IsMember({"plain", "i"}));
  conv->add_option("--pattern", cpattern, "rate34_mem1 or rate34_mem3")->check(CLI::IsMember({"rate34_mem1", "rate34_mem3"}));
  conv->add_flag("--free-distance", cfree, "run the free distance search");
  conv->add_flag("--dual", cdual, "report the dual code instead");

  // ldpc
  auto* ldpc = app.add_subcommand("ldpc", "LDPC code from a group ring element of Z2(Cn x C4)");
  std::string lelem;
  std::size_t lkeep = 0, lmem = 0;
  int lgirth = 0;
  bool lrandom = false;
  ldpc->add_option("--element", lelem, "element, e.g. \"g^15 + h*g^21 @ C24xC4\"")->required();
  ldpc->add_option("--keep", lkeep, "rows of the unit kept as generator (default half)");
  ldpc->add_flag("--random-rows", lrandom, "choose the rows at random from --seed");
  ldpc->add_option("--girth", lgirth, "require no 4-cycles (4) or also no 6-cycles (6)")->check(CLI::IsMember({0, 4, 6}));
  ldpc->add_option("--conv", lmem, "also build the memory-1 or memory-3 convolutional code")->check(CLI::IsMember({0, 1, 3}));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "classify a code given as JSON");
  std::string afile;
  bool afree = false;
  analyze->add_option("code", afile, "code JSON: block {generator[, control]} or convolutional")->required();
  analyze->add_flag("--free-distance", afree, "run the free distance search (convolutional)");

  // repro
  auto* rep = app.add_subcommand("repro", "re-derive a published example, or all of them");
  std::string rid;
  bool rskip = false;
  rep->add_option("example", rid, "example id, criterion number, or 'all'")->required();
  rep->add_flag("--skip-slow", rskip, "skip the multi-second (I, 2H) enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*fourier) {
      const auto fs = fourier_scheme(fn, field_or(g, "gf(2^3)"));
      const int modes = !frows.empty() + !fwindow.empty() + (lcd_r != 0);
      if (modes != 1) throw std::invalid_argument("give exactly one of --rows, --window, --lcd");
      json j = {{"n", fn}, {"field", fs.scheme.field().literal()}, {"omega", fs.omega}};
      if (lcd_r) {
        const auto la = lcd_arrangement(fs, lcd_r);
        j["rows"] = la.display_rows;
        j["report"] = block_report(la.code, g);
      } else {
        std::vector<std::size_t> rows;
        if (!frows.empty()) rows = parse_list(frows);
        else {
          const auto w = parse_list(fwindow);
          if (w.size() < 2 || w.size() > 3) throw std::invalid_argument("--window takes start,r[,step]");
          rows = window_rows(fn, w[0], w[1], w.size() == 3 ? w[2] : 1);
        }
        j["rows"] = rows;
        j["report"] = block_report(derive_block_code(fs.scheme, rows), g);
      }
      emit(g, j);
    } else if (*named) {
      if (nname == "list") {
        emit(g, json(named_units()));
        return 0;
      }
      const auto u = named_unit(nname, field_or(g, "gf(5)"));
      json j = {{"name", u.name}, {"description", u.description}};
      if (nsd) j["report"] = block_report(self_dual_from_orthogonal(u.scheme.u()), g);
      else if (!nrows.empty()) j["report"] = block_report(derive_block_code(u.scheme, parse_list(nrows)), g);
      else j["scheme"] = io::to_json(u.scheme);
      emit(g, j);
    } else if (*derive) {
      const auto s = load_scheme(dsrc, g);
      emit(g, block_report(derive_block_code(s, parse_list(drows)), g));
    } else if (*conv) {
      const auto s = load_scheme(csrc, g);
      const Twist tw = ctwist == "i" ? Twist::i : Twist::plain;
      std::optional<ConvCode> c;
      if (!cpattern.empty()) {
        const auto split = split_equal(s, 4);
        c = mixed_rate_builder(split, cpattern == "rate34_mem1" ? MixedPattern::rate34_mem1 : MixedPattern::rate34_mem3, tw);
      } else if (cmemory == 1) {
        const auto sizes = csplit.empty() ? std::vector<std::size_t>{s.n() / 2, s.n() - s.n() / 2} : parse_list(csplit);
        const auto split = split_sizes(s, sizes);
        c = sizes.size() == 2 && sizes[0] == sizes[1] ? build_memory1_equal(split, tw) : build_memory1_unequal(split, tw);
      } else if (cmemory == 2) {
        c = build_memory2_three_blocks(split_equal(s, 3));
      } else {
        c = build_memory3(split_equal(s, 4), tw);
      }
      if (cdual) c = dual_code(*c);
      emit(g, conv_report(*c, cfree, g));
    } else if (*ldpc) {
      const auto v = GroupRingElem::parse(lelem);
      const std::size_t size = 4 * v.n();
      const auto rows = ldpc_rows(size, lkeep ? lkeep : size / 2, lrandom ? std::optional<std::uint64_t>(g.seed) : std::nullopt);
      const auto der = ldpc_derive(v, rows, lgirth == 6 ? Girth::six : lgirth == 4 ? Girth::four : Girth::none);
      json j = {{"element", v.to_string()},
                {"n", der.code.n()},
                {"k", der.code.r()},
                {"rows", rows},
                {"four_cycles", der.cycles.four_cycles},
                {"max_row_weight", der.cycles.max_row_weight},
                {"max_col_weight", der.cycles.max_col_weight}};
      j["six_cycles"] = der.cycles.six_cycles ? json(*der.cycles.six_cycles) : json(nullptr);
      if (lmem) {
        const auto c = lmem == 1 ? ldpc_conv_memory1(v) : ldpc_conv_memory3(v);
        json blocks = json::array();
        for (long d = 0; d <= c.control()->degree(); ++d) blocks.push_back(short_cycle_census(c.control()->coeff(static_cast<std::size_t>(d))).four_cycles);
        j["conv"] = {{"n", c.n()}, {"k", c.k()}, {"delta", c.delta()}, {"memory", c.memory()}, {"control_four_cycles_per_block", blocks}};
      }
      if (g.out.empty()) {
        emit(g, j);
      } else {
        emit(g, io::to_alist(transpose(der.code.control())));
        std::cout << j.dump(2) << '\n';
      }
    } else if (*analyze) {
      const json j = read_json(afile);
      const json& gen = j.contains("generator") ? j["generator"] : j;
      if (gen.contains("entries")) emit(g, conv_report(io::conv_code_from_json(j), afree, g));
      else emit(g, block_report(io::block_code_from_json(j.contains("generator") ? j : json{{"generator", j}}), g));
    } else if (*rep) {
      return run_repro(rid, rskip, g);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "; raise --cap to proceed\n";
    return kBudget;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return g_budget_hit ? kBudget : 0;
}
