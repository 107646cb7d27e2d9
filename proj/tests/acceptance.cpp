// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "loopword/errors.hpp"
#include "loopword/foshuffle.hpp"
#include "loopword/lyndon.hpp"
#include "loopword/shuffle.hpp"
#include "loopword/weyl.hpp"

using namespace lw;

namespace {

struct TypeRank {
  char t;
  int n;
};

const std::vector<TypeRank> kSweepTypes{{'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                        {'C', 2}, {'C', 3}, {'D', 4}, {'G', 2}};

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

std::vector<Word> products(int rank, int length, int lo, int hi) {
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

int failures = 0;

void criterion(int number, const std::string& what, const std::function<Report()>& body, double budget = 0) {
  Stopwatch sw;
  Report r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.check(false, [&] { return std::string("exception: ") + e.what(); });
  }
  const double secs = sw.seconds();
  bool ok = r.passed() && r.checks > 0;
  std::string extra;
  if (budget > 0 && secs > budget) {
    ok = false;
    extra = ", over the " + std::to_string(static_cast<int>(budget)) + " s budget";
  }
  if (!ok) ++failures;
  std::printf("%s %d %s (%ld checks, %ld violations, %.2f s%s)\n", ok ? "PASS" : "FAIL", number, what.c_str(),
              r.checks, r.violations, secs, extra.c_str());
  for (const auto& c : r.counterexamples) std::printf("    %s\n", c.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(
      1, "closed forms for A1-A6, B2-B5, C2-C5, D4-D5",
      [] {
        Report all;
        for (int n = 1; n <= 6; ++n) all.merge(verify_closed_forms(LoopLyndonTable(build_cartan('A', n))));
        for (char t : {'B', 'C'})
          for (int n = 2; n <= 5; ++n) all.merge(verify_closed_forms(LoopLyndonTable(build_cartan(t, n))));
        for (int n = 4; n <= 5; ++n) all.merge(verify_closed_forms(LoopLyndonTable(build_cartan('D', n))));
        return all;
      },
      60);

  criterion(2, "convexity with |d| <= 2|alpha|", [] {
    Report all;
    for (auto [t, n] : kSweepTypes) all.merge(verify_convexity(LoopLyndonTable(build_cartan(t, n)), 0, 2));
    return all;
  });

  criterion(3, "exponent bounds, monotonicity and periodicity", [] {
    Report all;
    for (auto [t, n] : kSweepTypes) {
      LoopLyndonTable table(build_cartan(t, n));
      all.merge(verify_exponent_bounds(table, 2));
      all.merge(verify_monotone(table, 2));
      all.merge(verify_periodicity(table, 2));
    }
    return all;
  });

  criterion(4, "Weyl order for A2, A3, B2 with 50 roots each way", [] {
    Report all;
    for (auto [t, n] : {TypeRank{'A', 2}, {'A', 3}, {'B', 2}}) {
      LoopLyndonTable table(build_cartan(t, n));
      ReducedWordData rw = recover_reduced_word(table);
      all.merge(verify_weyl_order(rw, table, 50));
    }
    return all;
  });

  criterion(
      5, "finite leading words in A2, A3, B2, C2, G2",
      [] {
        Report all;
        for (auto [t, n] : {TypeRank{'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'G', 2}})
          all.merge(verify_finite_leading_words(*build_cartan(t, n)));
        return all;
      },
      30);

  criterion(6, "loop leading words in A2, B2 for 0 <= d <= |alpha| (conjecture-consistent)", [] {
    Report all;
    for (auto [t, n] : {TypeRank{'A', 2}, {'B', 2}})
      all.merge(verify_loop_leading_words(LoopLyndonTable(build_cartan(t, n)), 0, -1));
    return all;
  });

  criterion(7, "Serre images vanish; loop Serre and zeta relation in A2 with modes in [-2,2]", [] {
    Report all;
    for (auto [t, n] : {TypeRank{'B', 2}, {'C', 2}, {'G', 2}}) all.merge(verify_serre_images(*build_cartan(t, n), -1));
    all.merge(verify_serre_images(*build_cartan('A', 2), 2));
    return all;
  });

  criterion(8, "iota o Upsilon = Phi^L in A2 for products of length <= 3, exponents in [-1,1]", [] {
    auto cd = build_cartan('A', 2);
    Report all;
    for (int len = 1; len <= 3; ++len)
      for (const auto& x : products(2, len, -1, 1)) all.merge(verify_composition(*cd, x, {-3, 3}));
    LoopShuffleElement v = iota(*cd, upsilon_monomial(*cd, parse_word("1 2")), {-3, 3});
    all.check(v.coeff(parse_word("2^(1) 1^(-1)")) == parse_qrat("q^-2 - 1"),
              [] { return std::string("coefficient of 2^(1) 1^(-1) differs from q^-2 - 1"); });
    return all;
  });

  criterion(9, "PBW triangularity in A2, B2 for height <= 4, 0 <= vdeg <= height", [] {
    Report all;
    for (auto [t, n] : {TypeRank{'A', 2}, {'B', 2}}) {
      LoopLyndonTable table(build_cartan(t, n));
      for (const Root& g : degrees_up_to(n, 4))
        for (int v = 0; v <= height(g); ++v) all.merge(verify_pbw_triangularity(table, {g, v}, {-1, 2}));
    }
    return all;
  });

  criterion(10, "FO wheel conditions and image constraints on [-4,4]", [] {
    auto cd = build_cartan('A', 2);
    Report all;
    for (const char* x : {"1 2", "1 1 2"}) {
      SymRatFunction r = upsilon_monomial(*cd, parse_word(x));
      bool applicable = false;
      for (auto [i, j] : {std::pair{1, 2}, {2, 1}}) {
        WheelResult w = wheel_check(*cd, r.numerator, i, j);
        applicable = applicable || w.applicable;
        all.check(w.vanishes, [&] { return std::string("wheel condition fails for ") + x; });
      }
      if (std::string(x) == "1 1 2") all.check(applicable, [] { return std::string("wheel (1,2) not applied"); });
      all.merge(verify_image_constraints(*cd, r, {-4, 4}));
    }
    return all;
  });

  return failures == 0 ? 0 : 1;
}
