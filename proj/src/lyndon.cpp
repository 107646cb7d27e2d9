#include "loopword/lyndon.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "loopword/errors.hpp"

namespace lw {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

// Pairs (j, k) of root indices with roots[j] + roots[k] = roots[idx].
std::vector<std::pair<int, int>> decompositions(const CartanDatum& cd, int idx) {
  std::vector<std::pair<int, int>> out;
  const Root& alpha = cd.roots[idx];
  for (int j = 0; j < static_cast<int>(cd.roots.size()); ++j) {
    int k = cd.root_index(alpha - cd.roots[j]);
    if (k >= 0) out.emplace_back(j, k);
  }
  return out;
}

std::string pair_str(const Root& a, int d) { return "(" + root_str(a) + "," + std::to_string(d) + ")"; }

}  // namespace

// ------------------------------------------------------------------ tables

FiniteLyndonTable::FiniteLyndonTable(CartanPtr cd) : cd_(std::move(cd)) {
  const auto& roots = cd_->roots;
  words_.resize(roots.size());
  for (size_t idx = 0; idx < roots.size(); ++idx) {
    if (height(roots[idx]) == 1) {
      int color = static_cast<int>(std::find(roots[idx].begin(), roots[idx].end(), 1) - roots[idx].begin()) + 1;
      words_[idx] = {Letter{color, 0}};
      continue;
    }
    std::optional<Word> best;
    for (auto [j, k] : decompositions(*cd_, static_cast<int>(idx))) {
      const Word& w1 = words_[j];
      const Word& w2 = words_[k];
      if (!(w1 < w2)) continue;
      Word c = concat(w1, w2);
      if (!best || *best < c) best = std::move(c);
    }
    if (!best) throw ConsistencyError("no decomposition for root " + root_str(roots[idx]));
    words_[idx] = std::move(*best);
  }
}

const Word& FiniteLyndonTable::word(const Root& alpha) const {
  int idx = cd_->root_index(alpha);
  if (idx < 0) throw DomainError(root_str(alpha) + " is not a positive root");
  return words_[idx];
}

LoopLyndonTable::LoopLyndonTable(CartanPtr cd) : cd_(std::move(cd)) {
  const auto& roots = cd_->roots;
  fund_.resize(roots.size());
  for (size_t idx = 0; idx < roots.size(); ++idx) {
    const int h = height(roots[idx]);
    fund_[idx].resize(h);
    if (h == 1) {
      int color = static_cast<int>(std::find(roots[idx].begin(), roots[idx].end(), 1) - roots[idx].begin()) + 1;
      fund_[idx][0] = {Letter{color, 1}};
      continue;
    }
    auto decs = decompositions(*cd_, static_cast<int>(idx));
    for (int d = 1; d <= h; ++d) {
      // Exponent bounds confine each factor's degree to this range.
      const int f = floor_div(d, h), c = ceil_div(d, h);
      std::optional<Word> best;
      for (auto [j, k] : decs) {
        const int h1 = height(roots[j]), h2 = height(roots[k]);
        for (int d1 = f * h1; d1 <= c * h1; ++d1) {
          const int d2 = d - d1;
          if (d2 < f * h2 || d2 > c * h2) continue;
          Word w1 = word(j, d1);
          Word w2 = word(k, d2);
          if (!(w1 < w2)) continue;
          Word cand = concat(w1, w2);
          if (!best || *best < cand) best = std::move(cand);
        }
      }
      if (!best) throw ConsistencyError("no decomposition for " + pair_str(roots[idx], d));
      fund_[idx][d - 1] = std::move(*best);
    }
  }
}

Word LoopLyndonTable::word(int root_index, int d) const {
  const auto& row = fund_.at(root_index);
  const int h = static_cast<int>(row.size());
  // d = r + t h with r in [1, h]
  int t = floor_div(d - 1, h);
  int r = d - t * h;
  return t == 0 ? row[r - 1] : shift_exponents(row[r - 1], t);
}

Word LoopLyndonTable::word(const Root& alpha, int d) const {
  int idx = cd_->root_index(alpha);
  if (idx < 0) throw DomainError(root_str(alpha) + " is not a positive root");
  return word(idx, d);
}

WindowOracleTable::WindowOracleTable(CartanPtr cd, int s) : cd_(std::move(cd)), s_(s) {
  if (s < 1) throw PreconditionError("oracle window must be positive");
  const auto& roots = cd_->roots;
  words_.resize(roots.size());
  for (size_t idx = 0; idx < roots.size(); ++idx) {
    const int h = height(roots[idx]);
    auto& row = words_[idx];
    row.resize(2 * s * h + 1);
    if (h == 1) {
      int color = static_cast<int>(std::find(roots[idx].begin(), roots[idx].end(), 1) - roots[idx].begin()) + 1;
      for (int d = -s; d <= s; ++d) row[d + s] = {Letter{color, d}};
      continue;
    }
    auto decs = decompositions(*cd_, static_cast<int>(idx));
    for (int d = -s * h; d <= s * h; ++d) {
      const Word* b1 = nullptr;
      const Word* b2 = nullptr;
      for (auto [j, k] : decs) {
        const int h1 = height(roots[j]), h2 = height(roots[k]);
        for (int d1 = -s * h1; d1 <= s * h1; ++d1) {
          const int d2 = d - d1;
          if (d2 < -s * h2 || d2 > s * h2) continue;
          const Word& w1 = word(j, d1);
          const Word& w2 = word(k, d2);
          if (!(w1 < w2)) continue;
          if (b1) {
            // compare w1 w2 against b1 b2 without building either
            Word cand = concat(w1, w2), cur = concat(*b1, *b2);
            if (!(cur < cand)) continue;
          }
          b1 = &w1;
          b2 = &w2;
        }
      }
      if (!b1) throw ConsistencyError("oracle: no decomposition for " + pair_str(roots[idx], d));
      row[d + s * h] = concat(*b1, *b2);
    }
  }
}

const Word& WindowOracleTable::word(int root_index, int d) const {
  const auto& row = words_.at(root_index);
  const int off = static_cast<int>(row.size() - 1) / 2;
  if (d < -off || d > off) throw PreconditionError("degree outside the oracle window");
  return row[d + off];
}

// -------------------------------------------------------------- queries

Word finite_standard_lyndon(const FiniteLyndonTable& table, const Root& alpha) { return table.word(alpha); }

Word loop_standard_lyndon(const LoopLyndonTable& table, const Root& alpha, int d) { return table.word(alpha, d); }

int loop_order_compare(const LoopLyndonTable& table, const LoopRootDegree& x, const LoopRootDegree& y) {
  return compare_lex(table.word(x.alpha, -x.d), table.word(y.alpha, -y.d));
}

LoopRootDegree loop_degree(const CartanDatum& cd, const Word& w) {
  WordDegree g = word_degree(w, cd.n);
  if (!cd.is_positive_root(g.hdeg)) throw DomainError("word degree " + root_str(g.hdeg) + " is not a positive root");
  return {g.hdeg, g.vdeg};
}

// --------------------------------------------------------- verification

Report verify_convexity(const LoopLyndonTable& table, int height_bound, int vdeg_bound) {
  Stopwatch sw;
  Report rep;
  rep.name = "convexity";
  const CartanDatum& cd = table.cartan();
  const int nroots = static_cast<int>(cd.roots.size());
  ReportSink sink(rep);
  parallel_for(nroots, [&](size_t ia) {
    Report part;
    const Root& a = cd.roots[ia];
    const int ha = height(a);
    for (int ib = 0; ib < nroots; ++ib) {
      const Root& b = cd.roots[ib];
      int isum = cd.root_index(a + b);
      if (isum < 0) continue;
      if (height_bound > 0 && height(cd.roots[isum]) > height_bound) continue;
      const int hb = height(b);
      for (int d = -vdeg_bound * ha; d <= vdeg_bound * ha; ++d) {
        Word wa = table.word(static_cast<int>(ia), d);
        for (int e = -vdeg_bound * hb; e <= vdeg_bound * hb; ++e) {
          Word wb = table.word(ib, e);
          if (!(wa < wb)) continue;
          Word ws = table.word(isum, d + e);
          part.check(wa < ws && ws < wb, [&] {
            return "l" + pair_str(a, d) + "=" + render_word(wa) + ", l" + pair_str(b, e) + "=" + render_word(wb) +
                   ", sum " + render_word(ws);
          });
        }
      }
    }
    sink.merge(part);
  });
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_exponent_bounds(const LoopLyndonTable& table, int window) {
  Stopwatch sw;
  Report rep;
  rep.name = "exponent-bounds";
  const CartanDatum& cd = table.cartan();
  WindowOracleTable oracle(table.cartan_ptr(), window);
  std::set<Word> seen;
  for (size_t idx = 0; idx < cd.roots.size(); ++idx) {
    const Root& a = cd.roots[idx];
    const int h = height(a);
    for (int d = -window * h; d <= window * h; ++d) {
      const Word& w = oracle.word(static_cast<int>(idx), d);
      const int lo = floor_div(d, h), hi = ceil_div(d, h);
      bool bounds = std::all_of(w.begin(), w.end(), [&](const Letter& l) { return l.exp == lo || l.exp == hi; });
      rep.check(bounds, [&] { return "exponents of l" + pair_str(a, d) + " = " + render_word(w); });
      WordDegree g = word_degree(w, cd.n);
      rep.check(g.hdeg == a && g.vdeg == d, [&] { return "degree of l" + pair_str(a, d); });
      rep.check(is_lyndon(w), [&] { return "l" + pair_str(a, d) + " not Lyndon"; });
      rep.check(seen.insert(w).second, [&] { return "l" + pair_str(a, d) + " repeated"; });
      rep.check(w == table.word(static_cast<int>(idx), d),
                [&] { return "fast table differs from oracle at " + pair_str(a, d); });
    }
  }
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_monotone(const LoopLyndonTable& table, int window) {
  Stopwatch sw;
  Report rep;
  rep.name = "monotone";
  const CartanDatum& cd = table.cartan();
  WindowOracleTable oracle(table.cartan_ptr(), window);
  for (size_t idx = 0; idx < cd.roots.size(); ++idx) {
    const Root& a = cd.roots[idx];
    const int h = height(a);
    for (int d = -window * h + 1; d <= window * h; ++d) {
      const Word& w = oracle.word(static_cast<int>(idx), d);
      const Word& v = oracle.word(static_cast<int>(idx), d - 1);
      rep.check(w < v, [&] { return "l" + pair_str(a, d) + " >= l" + pair_str(a, d - 1); });
    }
  }
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_periodicity(const LoopLyndonTable& table, int window) {
  Stopwatch sw;
  Report rep;
  rep.name = "periodicity";
  const CartanDatum& cd = table.cartan();
  WindowOracleTable wide(table.cartan_ptr(), window + 1);
  WindowOracleTable narrow(table.cartan_ptr(), window);
  for (size_t idx = 0; idx < cd.roots.size(); ++idx) {
    const Root& a = cd.roots[idx];
    const int h = height(a);
    const int i = static_cast<int>(idx);
    for (int d = -window * h; d <= window * h; ++d) {
      rep.check(wide.word(i, d + h) == shift_exponents(wide.word(i, d), 1),
                [&] { return "l" + pair_str(a, d + h) + " is not the shift of l" + pair_str(a, d); });
      // The recursion must not depend on the window it is run in.
      rep.check(wide.word(i, d) == narrow.word(i, d),
                [&] { return "window dependence at " + pair_str(a, d); });
    }
  }
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_horizontal_match(const LoopLyndonTable& table) {
  Report rep;
  rep.name = "horizontal-match";
  FiniteLyndonTable fin(table.cartan_ptr());
  for (size_t idx = 0; idx < table.cartan().roots.size(); ++idx)
    rep.check(table.word(static_cast<int>(idx), 0) == fin.word(static_cast<int>(idx)),
              [&] { return "d=0 row differs at " + root_str(table.cartan().roots[idx]); });
  return rep;
}

CostandardSplit minimal_costandard_split(const LoopLyndonTable& table, const Root& alpha, int d) {
  const CartanDatum& cd = table.cartan();
  if (!cd.is_positive_root(alpha)) throw DomainError(root_str(alpha) + " is not a positive root");
  if (height(alpha) < 2) throw PreconditionError("a simple root has no costandard split");
  Word w = table.word(alpha, d);
  auto [w1, w2] = costandard_factorization(w);
  CostandardSplit split{loop_degree(cd, w1), loop_degree(cd, w2)};
  if (table.word(split.first.alpha, split.first.d) != w1 || table.word(split.second.alpha, split.second.d) != w2)
    throw ConsistencyError("costandard factor of l" + pair_str(alpha, d) + " is not standard");

  int emin = w.front().exp, emax = w.front().exp;
  for (const auto& l : w) {
    emin = std::min(emin, l.exp);
    emax = std::max(emax, l.exp);
  }
  const int idx = cd.root_index(alpha);
  for (auto [j, k] : decompositions(cd, idx)) {
    const int h1 = height(cd.roots[j]);
    // Outside this range the first letter of l(gamma, d1) cannot lie between
    // those of w1 and w2.
    for (int d1 = (emin - 1) * h1; d1 <= (emax + 1) * h1; ++d1) {
      Word v1 = table.word(j, d1);
      if (!(w1 < v1)) continue;
      Word v2 = table.word(k, d - d1);
      if (v1 < v2 && v2 < w2)
        throw ConsistencyError("costandard split of l" + pair_str(alpha, d) + " is not minimal");
    }
  }
  return split;
}

// ---------------------------------------------------------- closed forms

namespace {

class Builder {
 public:
  Builder& one(int c, bool ul) {
    w_.push_back({c, ul ? 1 : 0});
    return *this;
  }
  // a, a+1, ..., b; empty when b < a
  Builder& up(int a, int b, bool ul) {
    for (int c = a; c <= b; ++c) one(c, ul);
    return *this;
  }
  // b, b-1, ..., c; empty when b < c
  Builder& down(int b, int c, bool ul) {
    for (int x = b; x >= c; --x) one(x, ul);
    return *this;
  }
  Word take() { return std::move(w_); }

 private:
  Word w_;
};

struct Family {
  char kind;  // 'a' chain, 'b' beta, 'c' gamma, 's' sigma, 't' tau
  int i, j;
  bool d_branch = false;  // type D chain ending in alpha_n instead of alpha_{n-1}
};

std::map<Root, Family> classical_families(const CartanDatum& cd) {
  const int n = cd.n;
  std::map<Root, Family> m;
  auto chain = [&](int i, int j) {
    Root r(n, 0);
    for (int x = i; x <= j; ++x) r[x - 1] = 1;
    return r;
  };
  const int top = cd.type == 'D' ? n - 1 : n;
  for (int i = 1; i <= top; ++i)
    for (int j = i; j <= top; ++j) m[chain(i, j)] = {'a', i, j};
  if (cd.type == 'D') {
    // chain i .. n-2 followed by n, seen as positions i .. n-1
    for (int i = 1; i <= n - 1; ++i) {
      Root r(n, 0);
      for (int x = i; x <= n - 2; ++x) r[x - 1] = 1;
      r[n - 1] = 1;
      m[r] = {'a', i, n - 1, true};
    }
    for (int j = 1; j <= n - 2; ++j) m[chain(j, n)] = {'s', 0, j};
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j) {
        Root r = chain(i, n);
        for (int x = j; x <= n - 2; ++x) r[x - 1] = 2;
        m[r] = {'t', i, j};
      }
  }
  if (cd.type == 'B')
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Root r = chain(i, n);
        for (int x = j; x <= n; ++x) r[x - 1] = 2;
        m[r] = {'b', i, j};
      }
  if (cd.type == 'C')
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i; j <= n - 1; ++j) {
        Root r = chain(i, n);
        for (int x = j; x <= n - 1; ++x) r[x - 1] = 2;
        m[r] = {'c', i, j};
      }
  return m;
}

Word chain_form(int i, int j, int d) {
  Builder b;
  b.one(j - d + 1, true).down(j - d, i, false).up(j - d + 2, j, true);
  return b.take();
}

Word beta_form(int n, int i, int j, int d) {
  Builder b;
  if (d == 1) {
    b.one(n, true);
    for (int m = n - 1; m >= j - 1; --m) b.one(m, false).one(m + 1, false);
    b.down(j - 2, i, false);
    return b.take();
  }
  const int k = d / 2;
  if (d % 2 == 0) {
    if (j <= n - k + 1) {
      const int a = n - k + 1;
      b.one(a, true).down(a - 1, j, false).up(a + 1, n, true).down(n, a, true).down(a - 1, i, false);
    } else {
      const int a = 2 * n - j + 2 - 2 * k;
      b.one(a, true).down(a - 1, i, false).up(a + 1, n, true).down(n, j, true);
    }
  } else {
    if (j <= n - k + 1) {
      const int a = n - k;
      b.one(a, true).down(a - 1, i, false).up(a + 1, n, true).down(n, a + 1, true).down(a, j, false);
    } else {
      const int a = 2 * n - j + 1 - 2 * k;
      b.one(a, true).down(a - 1, i, false).up(a + 1, n, true).down(n, j, true);
    }
  }
  return b.take();
}

Word gamma_form(int n, int i, int j, int d) {
  Builder b;
  if (d == 1) {
    b.one(n, true);
    for (int m = n - 1; m >= j; --m) b.one(m, false).one(m, false);
    b.down(j - 1, i, false);
    return b.take();
  }
  const int k = d / 2;
  if (d % 2 == 0) {
    if (j <= n - k) {
      const int a = n - k;
      b.one(a, true).down(a - 1, i, false).up(a + 1, n, true).down(n - 1, a + 1, true).down(a, j, false);
    } else {
      const int a = 2 * n - j + 1 - 2 * k;
      b.one(a, true).down(a - 1, i, false).up(a + 1, n, true).down(n - 1, j, true);
    }
  } else if (i == j) {
    const int a = n - k;
    b.one(a, true).down(a - 1, i, false).up(a + 1, n - 1, true);
    b.one(a, true).down(a - 1, i, false).up(a + 1, n, true);
  } else if (j <= n - k) {
    const int a = n - k;
    b.one(a, true).down(a - 1, j, false).up(a + 1, n, true).down(n - 1, a, true).down(a - 1, i, false);
  } else {
    const int a = 2 * n - j - 2 * k;
    b.one(a, true).down(a - 1, i, false).up(a + 1, n, true).down(n - 1, j, true);
  }
  return b.take();
}

Word sigma_form(int n, int j, int d) {
  Builder b;
  if (d == 1) {
    b.one(n, true).one(n - 2, false).one(n - 1, false).down(n - 3, j, false);
  } else if (d == 2) {
    b.one(n - 1, true).down(n - 2, j, false).one(n, true);
  } else {
    b.one(n - d + 1, true).down(n - d, j, false).up(n - d + 2, n - 2, true).one(n, true).one(n - 1, true);
  }
  return b.take();
}

Word tau_form(int n, int i, int j, int d) {
  Builder b;
  if (d == 1) {
    b.one(n, true);
    for (int m = n - 2; m >= j - 1; --m) b.one(m, false).one(m + 1, false);
    b.down(j - 2, i, false);
    return b.take();
  }
  if (d == 2) {
    b.one(n - 1, true).down(n - 2, i, false).one(n, true).down(n - 2, j, false);
    return b.take();
  }
  if (d == 3) {
    b.one(n - 2, true).down(n - 3, i, false).one(n, true).one(n - 1, true).down(n - 2, j, false);
    return b.take();
  }
  const int k = d / 2;
  if (d % 2 == 0) {
    if (j <= n - k) {
      const int a = n - k;
      b.one(a, true).down(a - 1, j, false).up(a + 1, n - 2, true).down(n, a, true).down(a - 1, i, false);
    } else {
      const int a = 2 * n - j - 2 * k;
      b.one(a, true).down(a - 1, i, false).up(a + 1, n - 2, true).down(n, j, true);
    }
  } else {
    if (j <= n - k - 1) {
      const int a = n - k - 1;
      b.one(a, true).down(a - 1, i, false).up(a + 1, n - 2, true).down(n, a + 1, true).down(a, j, false);
    } else {
      const int a = 2 * n - j - 2 * k - 1;
      b.one(a, true).down(a - 1, i, false).up(a + 1, n - 2, true).down(n, j, true);
    }
  }
  return b.take();
}

}  // namespace

Word appendix_closed_form(const CartanDatum& cd, const Root& alpha, int d) {
  if (cd.type != 'A' && cd.type != 'B' && cd.type != 'C' && cd.type != 'D')
    throw UnsupportedError(std::string("no closed forms for type ") + cd.type);
  if (!cd.is_positive_root(alpha)) throw DomainError(root_str(alpha) + " is not a positive root");
  const int h = height(alpha);
  if (d < 1 || d > h) throw PreconditionError("closed forms cover 1 <= d <= |alpha| only");
  auto fams = classical_families(cd);
  auto it = fams.find(alpha);
  if (it == fams.end()) throw ConsistencyError("unclassified root " + root_str(alpha));
  const Family& f = it->second;
  const int n = cd.n;
  Word w;
  switch (f.kind) {
    case 'a':
      w = chain_form(f.i, f.j, d);
      if (f.d_branch)
        for (auto& l : w)
          if (l.color == n - 1) l.color = n;
      break;
    case 'b':
      w = beta_form(n, f.i, f.j, d);
      break;
    case 'c':
      w = gamma_form(n, f.i, f.j, d);
      break;
    case 's':
      w = sigma_form(n, f.j, d);
      break;
    case 't':
      w = tau_form(n, f.i, f.j, d);
      break;
    default:
      throw ConsistencyError("bad family");
  }
  return w;
}

std::set<Word> emit_dictionary(const LoopLyndonTable& table, int a) {
  const CartanDatum& cd = table.cartan();
  if (a < 1 || a > cd.n) throw DomainError("color out of range");
  std::set<Word> out;
  for (const auto& row : table.fundamental())
    for (const auto& w : row)
      if (w.front() == Letter{a, 1}) out.insert(w);
  return out;
}

Report verify_closed_forms(const LoopLyndonTable& table) {
  Stopwatch sw;
  Report rep;
  rep.name = "closed-forms " + table.cartan().name();
  const CartanDatum& cd = table.cartan();
  for (size_t idx = 0; idx < cd.roots.size(); ++idx) {
    const Root& a = cd.roots[idx];
    for (int d = 1; d <= height(a); ++d) {
      Word expect = appendix_closed_form(cd, a, d);
      Word got = table.word(static_cast<int>(idx), d);
      rep.check(expect == got, [&] {
        return "l" + pair_str(a, d) + ": algorithm " + render_word(got) + ", closed form " + render_word(expect);
      });
    }
  }
  rep.seconds = sw.seconds();
  return rep;
}

nlohmann::json lyndon_entry_json(const Root& alpha, int d, const Word& w) {
  return {{"root", alpha}, {"d", d}, {"word", word_to_json(w)}, {"rendered", render_word(w)}};
}

}  // namespace lw
