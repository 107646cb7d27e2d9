#include "commands.hpp"

#include <functional>
#include <iostream>
#include <random>

#include "loopword/errors.hpp"
#include "loopword/foshuffle.hpp"
#include "loopword/lyndon.hpp"
#include "loopword/shuffle.hpp"
#include "loopword/weyl.hpp"

namespace lw::cli {

namespace {

int or_default(int v, int d) { return v < 0 ? d : v; }

bool classical(char t) { return t == 'A' || t == 'B' || t == 'C' || t == 'D'; }

void print_reports(const CommandConfig& cfg, const std::vector<Report>& reps, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reps) ok = ok && r.passed();
  if (cfg.format == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reps) arr.push_back(r.to_json());
    nlohmann::json j{{"suite", cfg.suite},
                     {"type", std::string(1, cfg.type_letter)},
                     {"rank", cfg.rank},
                     {"passed", ok},
                     {"reports", arr}};
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& r : reps) out << r.summary() << "\n";
  out << (ok ? "PASS" : "FAIL") << "\n";
}

// Degrees in Q+ of height 1..max_height.
std::vector<Root> degrees_up_to(int rank, int max_height) {
  std::vector<Root> out;
  Root cur(rank, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank) {
      if (left < max_height) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, max_height);
  return out;
}

// All words of the given length over the colors with exponents in the range.
std::vector<Word> generator_products(int rank, int length, int lo, int hi) {
  std::vector<Word> out;
  Word w(length);
  std::function<void(int)> rec = [&](int p) {
    if (p == length) {
      out.push_back(w);
      return;
    }
    for (int c = 1; c <= rank; ++c)
      for (int e = lo; e <= hi; ++e) {
        w[p] = {c, e};
        rec(p + 1);
      }
  };
  rec(0);
  return out;
}

}  // namespace

int cmd_tables(const CommandConfig& cfg, std::ostream& out) {
  auto cp = build_cartan(cfg.type_letter, cfg.rank);
  LoopLyndonTable table(cp);
  const CartanDatum& cd = *cp;
  const bool annotate = classical(cfg.type_letter);
  bool all_ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (size_t k = 0; k < cd.roots.size(); ++k) {
    const Root& a = cd.roots[k];
    for (int d = 1; d <= height(a); ++d) {
      const Word w = table.word(static_cast<int>(k), d);
      nlohmann::json row = lyndon_entry_json(a, d, w);
      std::string mark;
      if (annotate) {
        const bool same = appendix_closed_form(cd, a, d) == w;
        all_ok = all_ok && same;
        row["closed_form"] = same;
        mark = same ? "  closed form: ok" : "  closed form: MISMATCH";
      }
      if (cfg.format == Format::json)
        rows.push_back(row);
      else
        out << root_str(a) << "  d=" << d << "  " << render_word(w, cfg.latex) << mark << "\n";
    }
  }
  if (cfg.format == Format::json)
    out << nlohmann::json{{"cartan", cartan_to_json(cd)}, {"rows", rows}}.dump(2) << "\n";
  return all_ok ? kOk : kFailed;
}

int cmd_word(const CommandConfig& cfg, std::ostream& out) {
  auto cp = build_cartan(cfg.type_letter, cfg.rank);
  LoopLyndonTable table(cp);
  const Root a = parse_root(cfg.root, cfg.rank);
  if (cp->root_index(a) < 0) throw DomainError(root_str(a) + " is not a positive root");
  const Word w = table.word(a, cfg.d);
  if (cfg.format == Format::json)
    out << lyndon_entry_json(a, cfg.d, w).dump(2) << "\n";
  else
    out << render_word(w, cfg.latex) << "\n";
  return kOk;
}

int cmd_dictionary(const CommandConfig& cfg, std::ostream& out) {
  auto cp = build_cartan(cfg.type_letter, cfg.rank);
  LoopLyndonTable table(cp);
  const auto words = emit_dictionary(table, cfg.letter);
  if (cfg.format == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : words) arr.push_back({{"word", word_to_json(w)}, {"rendered", render_word(w)}});
    out << nlohmann::json{{"letter", cfg.letter}, {"words", arr}}.dump(2) << "\n";
  } else {
    for (const auto& w : words) out << render_word(w, cfg.latex) << "\n";
  }
  return kOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  auto cp = build_cartan(cfg.type_letter, cfg.rank);
  const CartanDatum& cd = *cp;
  const std::string& s = cfg.suite;
  std::vector<Report> reps;
  if (s == "convexity") {
    LoopLyndonTable t(cp);
    reps.push_back(verify_convexity(t, 0, or_default(cfg.window, 2)));
  } else if (s == "exponent-bounds") {
    LoopLyndonTable t(cp);
    reps.push_back(verify_exponent_bounds(t, or_default(cfg.window, 2)));
  } else if (s == "monotone") {
    LoopLyndonTable t(cp);
    reps.push_back(verify_monotone(t, or_default(cfg.window, 2)));
  } else if (s == "periodicity") {
    LoopLyndonTable t(cp);
    reps.push_back(verify_periodicity(t, or_default(cfg.window, 2)));
  } else if (s == "weyl-order") {
    LoopLyndonTable t(cp);
    ReducedWordData rw = recover_reduced_word(t);
    reps.push_back(verify_weyl_order(rw, t, or_default(cfg.count, 50)));
  } else if (s == "serre") {
    reps.push_back(verify_serre_images(cd, or_default(cfg.window, 1)));
  } else if (s == "leading-word") {
    LoopLyndonTable t(cp);
    reps.push_back(verify_finite_leading_words(cd));
    reps.push_back(verify_loop_leading_words(t, 0, cfg.window));
  } else if (s == "pbw") {
    LoopLyndonTable t(cp);
    const int hmax = or_default(cfg.count, 4);
    const Window letters{-1, or_default(cfg.window, 2)};
    Report all;
    all.name = "pbw " + cd.name();
    for (const Root& g : degrees_up_to(cd.n, hmax)) {
      const int h = height(g);
      for (int v = 0; v <= h; ++v) all.merge(verify_pbw_triangularity(t, {g, v}, letters));
    }
    reps.push_back(all);
  } else if (s == "composition") {
    const int w = or_default(cfg.window, 3);
    const int len = or_default(cfg.count, 2);
    Report all;
    all.name = "composition " + cd.name();
    for (int l = 1; l <= len; ++l)
      for (const auto& x : generator_products(cd.n, l, -1, 1)) all.merge(verify_composition(cd, x, {-w, w}));
    // a few longer products drawn from the seed
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> color(1, cd.n), expo(-1, 1);
    for (int k = 0; k < 4 && len + 1 <= kDefaultProfileCap; ++k) {
      Word x(len + 1);
      for (auto& l : x) l = {color(rng), expo(rng)};
      all.merge(verify_composition(cd, x, {-w, w}));
    }
    reps.push_back(all);
  } else if (s == "fo-constraints") {
    const int w = or_default(cfg.window, 4);
    Report all;
    all.name = "fo-constraints " + cd.name();
    for (int l = 2; l <= or_default(cfg.count, 3); ++l)
      for (const auto& x : generator_products(cd.n, l, 0, 0)) {
        SymRatFunction r = upsilon_monomial(cd, x);
        all.check(wheel_conditions_hold(cd, r.numerator), [&] { return "wheel conditions fail for " + render_word(x); });
        all.merge(verify_image_constraints(cd, r, {-w, w}));
      }
    all.notes.assign(1, "generator products of colors only, exponents zero");
    reps.push_back(all);
  } else {
    throw ConfigError("unknown suite '" + s + "'");
  }
  print_reports(cfg, reps, out);
  for (const auto& r : reps)
    if (!r.passed()) return kFailed;
  return kOk;
}

}  // namespace lw::cli
