#include "loopword/shuffle.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>

#include "loopword/errors.hpp"

namespace lw {

namespace {

constexpr int kUnbounded = INT_MAX / 4;

// Coefficient of (z_b/z_a)^r in the expansion of the zeta ratio for a pair
// with pairing delta: q^delta for r = 0, q^{delta r}(q^delta - q^-delta) after.
QLaurent ratio_coeff(int delta, int r) {
  if (r == 0) return QLaurent::monomial(delta);
  return QLaurent::monomial(delta * (r + 1)) - QLaurent::monomial(delta * (r - 1));
}

// Output positions with fixed colors and base exponents, plus the pairs
// (hi > lo) that carry a zeta ratio. A shift r on a pair lowers the exponent
// at hi and raises the one at lo by r.
struct ShiftProblem {
  std::vector<int> color;
  std::vector<int> base;
  std::vector<std::vector<std::pair<int, int>>> up_pairs;  // at lo: (hi, delta)
};

class ShiftEnumerator {
 public:
  using Emit = std::function<void(const Word&, const QLaurent&)>;

  ShiftEnumerator(const ShiftProblem& pr, const Window& w, bool allow_shift, const Word* floor, Emit emit)
      : pr_(pr), win_(w), shift_(allow_shift), floor_(floor), emit_(std::move(emit)) {}

  void run() {
    const int k = static_cast<int>(pr_.base.size());
    long sum = 0, phi0 = 0;
    for (int p = 0; p < k; ++p) {
      sum += pr_.base[p];
      phi0 += static_cast<long>(p) * pr_.base[p];
    }
    if (sum < static_cast<long>(k) * win_.lo || sum > static_cast<long>(k) * win_.hi) return;
    // Each unit of shift on (hi, lo) lowers sum_p p*e_p by hi - lo, and that
    // sum is bounded below on the window.
    long rest = sum - static_cast<long>(k) * win_.lo, phimin = 0;
    for (int p = 0; p < k; ++p) {
      long extra = std::min<long>(rest, win_.hi - win_.lo);
      rest -= extra;
      phimin += static_cast<long>(p) * (win_.lo + extra);
    }
    long budget = phi0 - phimin;
    if (budget < 0) return;
    has_up_.assign(k, false);
    for (int lo = 0; lo < k; ++lo)
      for (auto [hi, delta] : pr_.up_pairs[lo])
        if (shift_ && delta != 0) has_up_[hi] = true;
    e_ = pr_.base;
    out_.assign(k, Letter{});
    position(0, floor_ == nullptr, budget, QLaurent(1));
  }

 private:
  void position(int p, bool greater, long budget, const QLaurent& coeff) {
    const int k = static_cast<int>(e_.size());
    if (p == k) {
      emit_(out_, coeff);
      return;
    }
    const int cur = e_[p];
    int upper = win_.hi;
    if (!greater) {
      const Letter& f = (*floor_)[p];
      upper = std::min(upper, pr_.color[p] >= f.color ? f.exp : f.exp - 1);
    }
    const int umin = std::max(0, win_.lo - cur), umax = upper - cur;
    if (umax < umin) return;
    assign(p, 0, 0, umin, umax, greater, budget, coeff);
  }

  void assign(int p, size_t idx, int u, int umin, int umax, bool greater, long budget, const QLaurent& coeff) {
    const auto& pairs = pr_.up_pairs[p];
    if (idx == pairs.size()) {
      if (u < umin) return;
      const int ep = e_[p] + u;
      Letter l{pr_.color[p], ep};
      bool g = greater || (*floor_)[p] < l;
      out_[p] = l;
      const int saved = e_[p];
      e_[p] = ep;
      position(p + 1, g, budget, coeff);
      e_[p] = saved;
      return;
    }
    auto [hi, delta] = pairs[idx];
    const long step = hi - p;
    const int rmax = (shift_ && delta != 0) ? static_cast<int>(std::min<long>(umax - u, budget / step)) : 0;
    for (int r = 0; r <= rmax; ++r) {
      e_[hi] -= r;
      if (has_up_[hi] || e_[hi] >= win_.lo) assign(p, idx + 1, u + r, umin, umax, greater, budget - r * step,
                                                   coeff * ratio_coeff(delta, r));
      e_[hi] += r;
      if (!has_up_[hi] && e_[hi] - r - 1 < win_.lo) break;
    }
  }

  const ShiftProblem& pr_;
  Window win_;
  bool shift_;
  const Word* floor_;
  Emit emit_;
  std::vector<int> e_;
  std::vector<bool> has_up_;
  Word out_;
};

using LaurentMap = std::map<Word, QLaurent>;

void accumulate(LaurentMap& acc, const Word& w, const QLaurent& c) {
  auto it = acc.find(w);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

// All placements of a generator product: position p receives factor perm[p];
// pairs whose factors end up in the opposite order carry a zeta ratio.
void letter_product_image(const CartanDatum& cd, const Word& seq, const QLaurent& c, const Window& w, bool shift,
                          const Word* floor, LaurentMap& acc) {
  const int k = static_cast<int>(seq.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  ShiftProblem pr;
  pr.color.resize(k);
  pr.base.resize(k);
  do {
    pr.up_pairs.assign(k, {});
    for (int p = 0; p < k; ++p) {
      pr.color[p] = seq[perm[p]].color;
      pr.base[p] = seq[perm[p]].exp;
    }
    for (int lo = 0; lo < k; ++lo)
      for (int hi = lo + 1; hi < k; ++hi)
        if (perm[hi] < perm[lo]) pr.up_pairs[lo].emplace_back(hi, cd.dij(pr.color[hi], pr.color[lo]));
    ShiftEnumerator en(pr, w, shift, floor, [&](const Word& out, const QLaurent& coeff) {
      accumulate(acc, out, c * coeff);
    });
    en.run();
  } while (std::next_permutation(perm.begin(), perm.end()));
}

WordMap to_word_map(const LaurentMap& m) {
  WordMap out;
  for (const auto& [w, c] : m)
    if (!c.is_zero()) out.emplace(w, QRat(c));
  return out;
}

void add_into(WordMap& acc, const Word& w, const QRat& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

std::vector<int> colors_of(const Root& hdeg) {
  std::vector<int> colors;
  for (size_t i = 0; i < hdeg.size(); ++i)
    for (int t = 0; t < hdeg[i]; ++t) colors.push_back(static_cast<int>(i) + 1);
  return colors;
}

}  // namespace

// ------------------------------------------------------------------ finite

FiniteShuffleElement finite_element(const Word& w, const QRat& c) {
  FiniteShuffleElement x;
  if (!c.is_zero()) x.terms.emplace(w, c);
  return x;
}

FiniteShuffleElement add(const FiniteShuffleElement& x, const FiniteShuffleElement& y, const QRat& c) {
  FiniteShuffleElement r = x;
  for (const auto& [w, v] : y.terms) add_into(r.terms, w, c * v);
  return r;
}

FiniteShuffleElement shuffle_finite(const CartanDatum& cd, const FiniteShuffleElement& x,
                                    const FiniteShuffleElement& y) {
  FiniteShuffleElement out;
  for (const auto& [u, cu] : x.terms)
    for (const auto& [v, cv] : y.terms) {
      const int k = static_cast<int>(u.size()), l = static_cast<int>(v.size());
      // positions of u's letters: increasing k-subsets of [0, k+l)
      std::vector<int> sel(k + l, 0);
      std::fill(sel.begin(), sel.begin() + k, 1);
      std::sort(sel.begin(), sel.end());
      do {
        Word w;
        w.reserve(k + l);
        int iu = 0, iv = 0, lambda = 0;
        std::vector<int> placed_b;  // colors of v letters placed so far
        for (int p = 0; p < k + l; ++p) {
          if (sel[p]) {
            const Letter& a = u[iu++];
            for (int cb : placed_b) lambda += cd.dij(a.color, cb);
            w.push_back(a);
          } else {
            const Letter& b = v[iv++];
            placed_b.push_back(b.color);
            w.push_back(b);
          }
        }
        add_into(out.terms, w, cu * cv * QRat::qpow(lambda));
      } while (std::next_permutation(sel.begin(), sel.end()));
    }
  return out;
}

// -------------------------------------------------------------------- loop

QRat LoopShuffleElement::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? QRat() : it->second;
}

LoopShuffleElement loop_word_element(const CartanDatum& cd, const Word& w, const QRat& c) {
  LoopShuffleElement x;
  x.degree = word_degree(w, cd.n);
  x.length = static_cast<int>(w.size());
  x.exact = true;
  x.window = {-kUnbounded, kUnbounded};
  if (!c.is_zero()) x.terms.emplace(w, c);
  if (w.size() == 1) {
    x.span = LetterSpan{w[0].exp, w[0].exp, 1};
  }
  return x;
}

std::optional<Window> certifiable_window(const LoopShuffleElement& x, const LoopShuffleElement& y) {
  long lo = -kUnbounded, hi = kUnbounded;
  // x's letters only move down: an output window [m, M] needs x complete on
  // [m, D_x - (k-1) m]. y's letters only move up: y complete on
  // [D_y - (l-1) M, M].
  if (!x.exact) {
    const int k = x.length, dx = x.degree.vdeg;
    lo = std::max<long>(lo, x.window.lo);
    if (k > 1) {
      long need = dx - static_cast<long>(x.window.hi);
      long bound = need >= 0 ? (need + k - 2) / (k - 1) : -((-need) / (k - 1));
      lo = std::max(lo, bound);
    } else if (dx > x.window.hi) {
      lo = std::max<long>(lo, static_cast<long>(dx) + 1);
    }
  }
  if (!y.exact) {
    const int l = y.length, dy = y.degree.vdeg;
    hi = std::min<long>(hi, y.window.hi);
    if (l > 1) {
      long room = dy - static_cast<long>(y.window.lo);
      long bound = room >= 0 ? room / (l - 1) : -((-room + l - 2) / (l - 1));
      hi = std::min(hi, bound);
    } else if (dy < y.window.lo) {
      hi = std::min<long>(hi, static_cast<long>(dy) - 1);
    }
  }
  if (lo > hi) return std::nullopt;
  return Window{static_cast<int>(lo), static_cast<int>(hi)};
}

LoopShuffleElement shuffle_loop(const CartanDatum& cd, const LoopShuffleElement& x, const LoopShuffleElement& y,
                                const Window& requested) {
  if (x.floor || y.floor) throw PreconditionError("cannot multiply elements restricted to words above a floor");
  auto cert = certifiable_window(x, y);
  if (!cert || !cert->contains(requested)) {
    throw TruncationError("requested window [" + std::to_string(requested.lo) + "," + std::to_string(requested.hi) +
                              "] is not certifiable from the input windows",
                          cert ? cert->lo : 0, cert ? cert->hi : -1, cert.has_value());
  }
  LoopShuffleElement out;
  out.degree = {x.degree.hdeg + y.degree.hdeg, x.degree.vdeg + y.degree.vdeg};
  out.length = x.length + y.length;
  out.window = requested;
  out.truncated = true;
  if (x.span && y.span)
    out.span = LetterSpan{std::min(x.span->dmin, y.span->dmin), std::max(x.span->dmax, y.span->dmax), out.length};

  const int k = x.length, l = y.length;
  for (const auto& [u, cu] : x.terms)
    for (const auto& [v, cv] : y.terms) {
      LaurentMap acc;
      std::vector<int> sel(k + l, 0);
      std::fill(sel.begin(), sel.begin() + k, 1);
      std::sort(sel.begin(), sel.end());
      ShiftProblem pr;
      pr.color.resize(k + l);
      pr.base.resize(k + l);
      do {
        pr.up_pairs.assign(k + l, {});
        int iu = 0, iv = 0;
        std::vector<int> bpos;
        for (int p = 0; p < k + l; ++p) {
          const Letter& t = sel[p] ? u[iu++] : v[iv++];
          pr.color[p] = t.color;
          pr.base[p] = t.exp;
          if (sel[p]) {
            for (int b : bpos) pr.up_pairs[b].emplace_back(p, cd.dij(t.color, pr.color[b]));
          } else {
            bpos.push_back(p);
          }
        }
        ShiftEnumerator en(pr, requested, true, nullptr,
                           [&](const Word& w, const QLaurent& c) { accumulate(acc, w, c); });
        en.run();
      } while (std::next_permutation(sel.begin(), sel.end()));
      const QRat cuv = cu * cv;
      for (const auto& [w, c] : acc) add_into(out.terms, w, cuv * QRat(c));
    }
  return out;
}

// ---------------------------------------------------------------- brackets

namespace {

BracketPtr build_tree(const CartanDatum& cd, const Word& w) {
  auto node = std::make_shared<BracketNode>();
  node->word = w;
  if (w.size() == 1) {
    node->leaf = true;
    node->letter = w[0];
    return node;
  }
  auto [w1, w2] = costandard_factorization(w);
  node->leaf = false;
  node->left = build_tree(cd, w1);
  node->right = build_tree(cd, w2);
  node->pairing = pairing(cd, word_degree(w1, cd.n).hdeg, word_degree(w2, cd.n).hdeg);
  return node;
}

LetterProducts expand_node(const BracketNode& node) {
  if (node.leaf) return {{Word{node.letter}, QLaurent(1)}};
  LetterProducts a = expand_node(*node.left), b = expand_node(*node.right), out;
  const QLaurent qp = QLaurent::monomial(node.pairing);
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b) {
      QLaurent c = ca * cb;
      accumulate(out, concat(sa, sb), c);
      accumulate(out, concat(sb, sa), -(c * qp));
    }
  return out;
}

std::string node_str(const BracketNode& n) {
  if (n.leaf) return render_word({n.letter});
  return "[" + node_str(*n.left) + ", " + node_str(*n.right) + "]_q^" + std::to_string(n.pairing);
}

}  // namespace

BracketExpr bracket_vector(const CartanDatum& cd, const Word& w) {
  if (w.empty()) throw PreconditionError("bracketing of the empty word");
  BracketExpr e;
  for (const auto& f : canonical_factorization(w)) e.factors.push_back(build_tree(cd, f));
  return e;
}

BracketExpr bracket_vector(const LoopLyndonTable& table, const Word& w) { return bracket_vector(table.cartan(), w); }

BracketExpr bracket_product(const std::vector<BracketExpr>& parts) {
  BracketExpr e;
  for (const auto& p : parts) e.factors.insert(e.factors.end(), p.factors.begin(), p.factors.end());
  return e;
}

std::string bracket_str(const BracketExpr& e) {
  std::string s;
  for (size_t k = 0; k < e.factors.size(); ++k) {
    if (k) s += " * ";
    s += node_str(*e.factors[k]);
  }
  return s;
}

LetterProducts expand_brackets(const CartanDatum&, const BracketExpr& e) {
  LetterProducts acc{{Word{}, QLaurent(1)}};
  for (const auto& f : e.factors) {
    LetterProducts part = expand_node(*f), next;
    for (const auto& [sa, ca] : acc)
      for (const auto& [sb, cb] : part) accumulate(next, concat(sa, sb), ca * cb);
    acc = std::move(next);
  }
  return acc;
}

LetterSpan letter_span(const LetterProducts& p) {
  if (p.empty()) throw PreconditionError("empty combination of generator products");
  LetterSpan s{kUnbounded, -kUnbounded, static_cast<int>(p.begin()->first.size())};
  for (const auto& [w, c] : p) {
    if (static_cast<int>(w.size()) != s.length) throw PreconditionError("generator products of different lengths");
    for (const auto& l : w) {
      s.dmin = std::min(s.dmin, l.exp);
      s.dmax = std::max(s.dmax, l.exp);
    }
  }
  return s;
}

LoopShuffleElement phi_letter_products(const CartanDatum& cd, const LetterProducts& p, const Window& window,
                                       const Word* floor) {
  LoopShuffleElement out;
  out.window = window;
  out.truncated = true;
  if (p.empty()) return out;
  out.degree = word_degree(p.begin()->first, cd.n);
  for (const auto& [w, c] : p)
    if (!(word_degree(w, cd.n) == out.degree)) throw PreconditionError("inhomogeneous combination");
  out.length = static_cast<int>(p.begin()->first.size());
  out.span = letter_span(p);
  if (floor) {
    if (static_cast<int>(floor->size()) != out.length) throw PreconditionError("floor word has the wrong length");
    out.floor = *floor;
  }
  LaurentMap acc;
  for (const auto& [w, c] : p) letter_product_image(cd, w, c, window, true, floor, acc);
  out.terms = to_word_map(acc);
  return out;
}

LoopShuffleElement phi_loop(const CartanDatum& cd, const BracketExpr& e, const Window& window) {
  return phi_letter_products(cd, expand_brackets(cd, e), window);
}

FiniteShuffleElement phi_finite_products(const CartanDatum& cd, const LetterProducts& p) {
  LaurentMap acc;
  for (const auto& [w, c] : p) {
    for (const auto& l : w)
      if (l.exp != 0) throw PreconditionError("finite shuffle images need exponent-zero generators");
    letter_product_image(cd, w, c, Window{0, 0}, false, nullptr, acc);
  }
  FiniteShuffleElement out;
  out.terms = to_word_map(acc);
  return out;
}

FiniteShuffleElement phi_finite(const CartanDatum& cd, const BracketExpr& e) {
  return phi_finite_products(cd, expand_brackets(cd, e));
}

std::pair<Word, QRat> leading_word(const LoopShuffleElement& x) {
  if (!x.exact) {
    if (!x.span) throw TruncationError("element carries no letter span; leading word cannot be certified", 0, -1, false);
    Window box = x.span->lead_box();
    if (!x.window.contains(box))
      throw TruncationError("window does not contain the lead box", box.lo, box.hi, true);
  }
  if (x.terms.empty()) {
    if (x.floor) throw PreconditionError("leading word lies below the floor " + render_word(*x.floor));
    throw PreconditionError("leading word of the zero element");
  }
  return *x.terms.rbegin();
}

std::pair<Word, QRat> leading_word(const FiniteShuffleElement& x) {
  if (x.terms.empty()) throw PreconditionError("leading word of the zero element");
  return *x.terms.rbegin();
}

// ---------------------------------------------------- standard and good

bool is_standard(const LoopLyndonTable& table, const Word& w) {
  if (w.empty()) return true;
  const CartanDatum& cd = table.cartan();
  for (const auto& f : canonical_factorization(w)) {
    WordDegree g = word_degree(f, cd.n);
    int idx = cd.root_index(g.hdeg);
    if (idx < 0 || table.word(idx, g.vdeg) != f) return false;
  }
  return true;
}

std::vector<Word> words_of_degree(const WordDegree& g, const Window& win) {
  std::vector<int> colors = colors_of(g.hdeg);
  const int k = static_cast<int>(colors.size());
  std::vector<Word> out;
  std::vector<int> exps(k);
  std::function<void(int, int)> rec = [&](int p, int left) {
    if (p == k) {
      if (left != 0) return;
      Word w(k);
      for (int t = 0; t < k; ++t) w[t] = {colors[t], exps[t]};
      out.push_back(std::move(w));
      return;
    }
    const int rem = k - p - 1;
    for (int e = win.lo; e <= win.hi; ++e) {
      const long after = static_cast<long>(left) - e;
      if (after < static_cast<long>(rem) * win.lo || after > static_cast<long>(rem) * win.hi) continue;
      exps[p] = e;
      rec(p + 1, static_cast<int>(after));
    }
  };
  std::sort(colors.begin(), colors.end());
  do {
    rec(0, g.vdeg);
  } while (std::next_permutation(colors.begin(), colors.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool good_word_linear_test(const CartanDatum& cd, const Word& w, std::optional<Window> letter_window) {
  if (w.empty()) throw PreconditionError("goodness of the empty word");
  Window lw;
  if (letter_window) {
    lw = *letter_window;
  } else {
    lw = {w[0].exp, w[0].exp};
    for (const auto& l : w) {
      lw.lo = std::min(lw.lo, l.exp - 1);
      lw.hi = std::max(lw.hi, l.exp + 1);
    }
  }
  WordDegree g = word_degree(w, cd.n);
  const int k = static_cast<int>(w.size());
  const Window box{lw.lo - (k - 1), lw.hi + (k - 1)};
  for (const auto& l : w)
    if (!box.contains(l.exp)) return false;  // no element of the span has a leading word outside the box
  std::vector<WordMap> rows;
  for (const auto& prod : words_of_degree(g, lw)) {
    LaurentMap acc;
    letter_product_image(cd, prod, QLaurent(1), box, true, &w, acc);
    if (!acc.empty()) rows.push_back(to_word_map(acc));
  }
  return span_leading_words(rows, &w).count(w) > 0;
}

std::set<Word> span_leading_words(const std::vector<WordMap>& input, const Word* stop) {
  std::map<Word, WordMap> pivots;
  for (WordMap r : input) {
    if (stop) r.erase(r.begin(), r.lower_bound(*stop));
    while (!r.empty()) {
      auto lead = std::prev(r.end());
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        const QRat inv = QRat(1) / lead->second;
        for (auto& [w, c] : r) c *= inv;
        Word key = lead->first;
        pivots.emplace(std::move(key), std::move(r));
        break;
      }
      const QRat c = lead->second;
      for (const auto& [w, pc] : it->second) add_into(r, w, -(c * pc));
    }
  }
  std::set<Word> out;
  for (const auto& [w, r] : pivots) out.insert(w);
  return out;
}

bool satisfies_finite_image_condition(const CartanDatum& cd, const FiniteShuffleElement& x) {
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j) {
      if (i == j) continue;
      const int n = 1 - cd.aij(i, j);
      // Contexts (w, w') in which some stored word contains a Serre block.
      std::set<std::pair<Word, Word>> contexts;
      for (const auto& [u, c] : x.terms) {
        const int len = static_cast<int>(u.size());
        for (int s = 0; s + n + 1 <= len; ++s) {
          bool block = true;
          int js = 0;
          for (int t = s; t <= s + n; ++t) {
            if (u[t].color == j)
              ++js;
            else if (u[t].color != i)
              block = false;
          }
          if (block && js == 1)
            contexts.insert({Word(u.begin(), u.begin() + s), Word(u.begin() + s + n + 1, u.end())});
        }
      }
      for (const auto& [pre, post] : contexts) {
        QRat sum;
        for (int k = 0; k <= n; ++k) {
          Word w = pre;
          for (int t = 0; t < k; ++t) w.push_back({i, 0});
          w.push_back({j, 0});
          for (int t = k; t < n; ++t) w.push_back({i, 0});
          w.insert(w.end(), post.begin(), post.end());
          auto it = x.terms.find(w);
          if (it == x.terms.end()) continue;
          QRat term = q_binomial(n, k, cd.di(i)) * it->second;
          sum += (k % 2 ? -term : term);
        }
        if (!sum.is_zero()) return false;
      }
    }
  return true;
}

// ----------------------------------------------------------- verification

namespace {

// The element is zero iff it vanishes on its lead box.
bool vanishes(const CartanDatum& cd, const LetterProducts& p) {
  LetterProducts nz;
  for (const auto& [w, c] : p)
    if (!c.is_zero()) nz.emplace(w, c);
  if (nz.empty()) return true;
  LoopShuffleElement x = phi_letter_products(cd, nz, letter_span(nz).lead_box());
  return x.is_zero();
}

Word letters(std::initializer_list<std::pair<int, int>> ls) {
  Word w;
  for (auto [c, e] : ls) w.push_back({c, e});
  return w;
}

}  // namespace

Report verify_serre_images(const CartanDatum& cd, int mode_bound) {
  Stopwatch sw;
  Report rep;
  rep.name = "serre " + cd.name();
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j) {
      if (i == j) continue;
      const int n = 1 - cd.aij(i, j);
      // finite: through the product engine and through iterated shuffles
      LetterProducts fin;
      FiniteShuffleElement iterated;
      for (int k = 0; k <= n; ++k) {
        Word w;
        for (int t = 0; t < k; ++t) w.push_back({i, 0});
        w.push_back({j, 0});
        for (int t = k; t < n; ++t) w.push_back({i, 0});
        QRat b = q_binomial(n, k, cd.di(i));
        if (k % 2) b = -b;
        accumulate(fin, w, b.num());
        FiniteShuffleElement prod = finite_element({});
        for (const auto& l : w) prod = shuffle_finite(cd, prod, finite_element({l}));
        iterated = add(iterated, prod, b);
      }
      rep.check(phi_finite_products(cd, fin).is_zero(),
                [&] { return "finite Serre image nonzero for (" + std::to_string(i) + "," + std::to_string(j) + ")"; });
      rep.check(iterated.is_zero(), [&] {
        return "finite Serre image (iterated shuffles) nonzero for (" + std::to_string(i) + "," + std::to_string(j) +
               ")";
      });
      if (mode_bound < 0) continue;
      // loop: modes s_1 <= ... <= s_n for color i and t for color j
      std::vector<int> s(n, -mode_bound);
      while (true) {
        for (int t = -mode_bound; t <= mode_bound; ++t) {
          LetterProducts p;
          std::vector<int> order(n);
          std::iota(order.begin(), order.end(), 0);
          do {
            for (int k = 0; k <= n; ++k) {
              Word w;
              for (int a = 0; a < k; ++a) w.push_back({i, s[order[a]]});
              w.push_back({j, t});
              for (int a = k; a < n; ++a) w.push_back({i, s[order[a]]});
              QRat b = q_binomial(n, k, cd.di(i));
              accumulate(p, w, k % 2 ? -b.num() : b.num());
            }
          } while (std::next_permutation(order.begin(), order.end()));
          rep.check(vanishes(cd, p), [&] {
            std::string m;
            for (int v : s) m += std::to_string(v) + ",";
            return "loop Serre (" + std::to_string(i) + "," + std::to_string(j) + ") modes " + m + std::to_string(t);
          });
        }
        int pos = n - 1;
        while (pos >= 0 && s[pos] == mode_bound) --pos;
        if (pos < 0) break;
        ++s[pos];
        for (int a = pos + 1; a < n; ++a) s[a] = s[pos];
      }
    }
  if (mode_bound >= 0) {
    // zeta relation with denominators cleared, coefficient of z^-a w^-b:
    // q^-d e_{i,a+1} e_{j,b} - e_{i,a} e_{j,b+1} - e_{j,b} e_{i,a+1} + q^-d e_{j,b+1} e_{i,a} = 0
    for (int i = 1; i <= cd.n; ++i)
      for (int j = 1; j <= cd.n; ++j)
        for (int a = -mode_bound; a <= mode_bound; ++a)
          for (int b = -mode_bound; b <= mode_bound; ++b) {
            const QLaurent qd = QLaurent::monomial(-cd.dij(i, j));
            LetterProducts p;
            accumulate(p, letters({{i, a + 1}, {j, b}}), qd);
            accumulate(p, letters({{i, a}, {j, b + 1}}), QLaurent(-1));
            accumulate(p, letters({{j, b}, {i, a + 1}}), QLaurent(-1));
            accumulate(p, letters({{j, b + 1}, {i, a}}), qd);
            rep.check(vanishes(cd, p), [&] {
              return "zeta relation (" + std::to_string(i) + "," + std::to_string(j) + ") at modes " +
                     std::to_string(a) + "," + std::to_string(b);
            });
          }
  }
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_finite_leading_words(const CartanDatum& cd) {
  Stopwatch sw;
  Report rep;
  rep.name = "finite-leading-words " + cd.name();
  auto cp = build_cartan(cd.type, cd.n);
  FiniteLyndonTable fin(cp);
  LoopLyndonTable loop(cp);
  for (size_t idx = 0; idx < cd.roots.size(); ++idx) {
    const Word& l = fin.word(static_cast<int>(idx));
    FiniteShuffleElement img = phi_finite(cd, bracket_vector(cd, l));
    rep.check(!img.is_zero() && leading_word(img).first == l,
              [&] { return "leading word of Phi(e_l) differs from l = " + render_word(l); });
    std::vector<WordMap> rows;
    std::vector<Word> all = words_of_degree({cd.roots[idx], 0}, {0, 0});
    for (const auto& prod : all) rows.push_back(phi_finite_products(cd, {{prod, QLaurent(1)}}).terms);
    std::set<Word> good = span_leading_words(rows);
    rep.check(!good.empty() && *good.begin() == l,
              [&] { return "smallest good word of degree " + root_str(cd.roots[idx]) + " is not " + render_word(l); });
    for (const auto& w : all)
      rep.check(good.count(w) == static_cast<size_t>(is_standard(loop, w)),
                [&] { return "good/standard disagree on " + render_word(w); });
  }
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_loop_leading_words(const LoopLyndonTable& table, int dmin, int dmax) {
  Stopwatch sw;
  Report rep;
  const CartanDatum& cd = table.cartan();
  rep.name = "loop-leading-words " + cd.name();
  std::vector<std::pair<int, int>> jobs;
  for (size_t idx = 0; idx < cd.roots.size(); ++idx) {
    const int h = height(cd.roots[idx]);
    for (int d = dmin; d <= (dmax < 0 ? h : dmax); ++d) jobs.emplace_back(static_cast<int>(idx), d);
  }
  ReportSink sink(rep);
  parallel_for(jobs.size(), [&](size_t t) {
    Report part;
    auto [idx, d] = jobs[t];
    Word l = table.word(idx, d);
    LetterProducts p = expand_brackets(cd, bracket_vector(cd, l));
    LoopShuffleElement x = phi_letter_products(cd, p, letter_span(p).lead_box(), &l);
    // Only words >= l are stored, on a window containing the lead box.
    part.check(x.terms.size() == 1 && x.terms.begin()->first == l, [&] {
      std::string top = x.terms.empty() ? "nothing at or above l" : render_word(x.terms.rbegin()->first);
      return "leading word of Phi(e_l) for l = " + render_word(l) + " is " + top;
    });
    sink.merge(part);
  });
  rep.notes.push_back("consistent with the conjectured leading-word property on every tested degree");
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_pbw_triangularity(const LoopLyndonTable& table, const WordDegree& degree, const Window& letter_window) {
  Stopwatch sw;
  Report rep;
  const CartanDatum& cd = table.cartan();
  rep.name = "pbw " + cd.name() + " " + root_str(degree.hdeg) + "," + std::to_string(degree.vdeg);
  // standard Lyndon words fitting under the degree with letters in the window
  std::vector<Word> cands;
  for (size_t idx = 0; idx < cd.roots.size(); ++idx) {
    const Root& a = cd.roots[idx];
    bool fits = true;
    for (int i = 0; i < cd.n; ++i) fits = fits && a[i] <= degree.hdeg[i];
    if (!fits) continue;
    const int h = height(a);
    for (int d = letter_window.lo * h; d <= letter_window.hi * h; ++d) cands.push_back(table.word(static_cast<int>(idx), d));
  }
  std::sort(cands.rbegin(), cands.rend());
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  std::function<void(size_t, Root, int)> rec = [&](size_t from, Root left, int vleft) {
    if (is_zero_root(left)) {
      if (vleft == 0) tuples.push_back(cur);
      return;
    }
    for (size_t c = from; c < cands.size(); ++c) {
      WordDegree g = word_degree(cands[c], cd.n);
      bool fits = true;
      for (int i = 0; i < cd.n; ++i) fits = fits && g.hdeg[i] <= left[i];
      if (!fits) continue;
      cur.push_back(static_cast<int>(c));
      rec(c, left - g.hdeg, vleft - g.vdeg);
      cur.pop_back();
    }
  };
  rec(0, degree.hdeg, degree.vdeg);

  std::set<Word> concatenations;
  std::vector<Word> concs(tuples.size());
  for (size_t t = 0; t < tuples.size(); ++t) {
    Word c;
    for (int i : tuples[t]) c = concat(c, cands[i]);
    concs[t] = c;
    rep.check(concatenations.insert(c).second, [&] { return "repeated concatenation " + render_word(c); });
  }
  ReportSink sink(rep);
  parallel_for(tuples.size(), [&](size_t t) {
    Report part;
    std::vector<BracketExpr> parts;
    for (int i : tuples[t]) parts.push_back(bracket_vector(cd, cands[i]));
    LetterProducts p = expand_brackets(cd, bracket_product(parts));
    const Word& target = concs[t];
    LoopShuffleElement x = phi_letter_products(cd, p, letter_span(p).lead_box(), &target);
    part.check(x.terms.size() == 1 && x.terms.begin()->first == target, [&] {
      std::string top = x.terms.empty() ? "below the concatenation" : render_word(x.terms.rbegin()->first);
      return "leading word for " + render_word(target) + " is " + top;
    });
    sink.merge(part);
  });
  rep.notes.push_back(std::to_string(tuples.size()) + " tuples");
  rep.seconds = sw.seconds();
  return rep;
}

// -------------------------------------------------------------------- json

nlohmann::json element_to_json(const LoopShuffleElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = x.terms.rbegin(); it != x.terms.rend(); ++it)
    terms.push_back({{"word", word_to_json(it->first)}, {"rendered", render_word(it->first)}, {"coeff", it->second.str()}});
  nlohmann::json j{{"degree", {{"hdeg", x.degree.hdeg}, {"vdeg", x.degree.vdeg}}}, {"terms", terms}};
  if (x.exact)
    j["window"] = nullptr;
  else
    j["window"] = {x.window.lo, x.window.hi};
  return j;
}

nlohmann::json element_to_json(const FiniteShuffleElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = x.terms.rbegin(); it != x.terms.rend(); ++it)
    terms.push_back({{"word", word_to_json(it->first)}, {"rendered", render_word(it->first)}, {"coeff", it->second.str()}});
  return {{"terms", terms}};
}

}  // namespace lw
