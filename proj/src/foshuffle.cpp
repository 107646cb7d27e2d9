#include "loopword/foshuffle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "loopword/errors.hpp"

namespace lw {

namespace {

using Exps = std::vector<int>;
using Poly = std::map<Exps, QRat>;

void add_term(Poly& p, const Exps& e, const QRat& c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (size_t s = 0; s < e.size(); ++s) e[s] = ea[s] + eb[s];
      add_term(out, e, ca * cb);
    }
  return out;
}

// z_u - c z_v
Poly binomial(int nvars, int u, int v, const QRat& c) {
  Poly p;
  Exps eu(nvars, 0), ev(nvars, 0);
  eu[u] = 1;
  ev[v] = 1;
  add_term(p, eu, QRat(1));
  add_term(p, ev, -c);
  return p;
}

Poly permuted(const Poly& p, const std::vector<int>& perm) {
  Poly out;
  for (const auto& [e, c] : p) {
    Exps f(e.size());
    for (size_t s = 0; s < e.size(); ++s) f[perm[s]] = e[s];
    add_term(out, f, c);
  }
  return out;
}

// Exact quotient by z_u - z_v. Long division with z_u leading: variables are
// moved so that u is first and v second, making the map's last key the
// leading term.
Poly divide_binomial(const Poly& p, int u, int v) {
  if (p.empty()) return p;
  const int n = static_cast<int>(p.begin()->first.size());
  std::vector<int> order{u, v};
  for (int s = 0; s < n; ++s)
    if (s != u && s != v) order.push_back(s);
  std::vector<int> to(n), back(n);
  for (int s = 0; s < n; ++s) {
    to[order[s]] = s;
    back[s] = order[s];
  }
  Poly r = permuted(p, to);
  int min0 = r.begin()->first[0];
  for (const auto& [e, c] : r) min0 = std::min(min0, e[0]);
  Poly q;
  while (!r.empty()) {
    auto it = std::prev(r.end());
    Exps m = it->first;
    QRat c = it->second;
    if (m[0] <= min0 - 1) throw ArithmeticError("polynomial is not divisible by the binomial");
    r.erase(it);
    m[0] -= 1;
    add_term(q, m, c);
    m[1] += 1;
    add_term(r, m, c);
  }
  return permuted(q, back);
}

// Products of permutations within each color block, with their signs.
std::vector<std::pair<std::vector<int>, int>> color_permutations(const std::vector<int>& profile) {
  std::vector<std::pair<std::vector<int>, int>> out{{{}, 1}};
  for (int k : profile) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> blocks;
    do {
      int inv = 0;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) inv += p[a] > p[b];
      blocks.emplace_back(p, inv % 2 ? -1 : 1);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::pair<std::vector<int>, int>> next;
    for (const auto& [head, sh] : out)
      for (const auto& [blk, sb] : blocks) {
        std::vector<int> full = head;
        const int off = static_cast<int>(head.size());
        for (int x : blk) full.push_back(off + x);
        next.emplace_back(std::move(full), sh * sb);
      }
    out = std::move(next);
  }
  return out;
}

long factorial(int k) {
  long f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int cross_pairs(const std::vector<int>& profile) {
  int s = 0;
  for (size_t i = 0; i < profile.size(); ++i)
    for (size_t j = i + 1; j < profile.size(); ++j) s += profile[i] * profile[j];
  return s;
}

std::vector<int> colors_of_profile(const std::vector<int>& profile) {
  std::vector<int> c;
  for (size_t i = 0; i < profile.size(); ++i)
    for (int t = 0; t < profile[i]; ++t) c.push_back(static_cast<int>(i) + 1);
  return c;
}

}  // namespace

// ------------------------------------------------------------------ types

int ColoredLaurentPoly::variables() const { return total(profile); }

int ColoredLaurentPoly::slot(int color, int a) const {
  if (color < 1 || color > static_cast<int>(profile.size()) || a < 0 || a >= profile[color - 1])
    throw PreconditionError("no variable z_{" + std::to_string(color) + "," + std::to_string(a + 1) + "}");
  int s = 0;
  for (int i = 1; i < color; ++i) s += profile[i - 1];
  return s + a;
}

int ColoredLaurentPoly::color_of_slot(int s) const {
  for (size_t i = 0; i < profile.size(); ++i) {
    if (s < profile[i]) return static_cast<int>(i) + 1;
    s -= profile[i];
  }
  throw PreconditionError("slot out of range");
}

bool ColoredLaurentPoly::is_symmetric() const {
  for (const auto& [perm, sign] : color_permutations(profile)) {
    (void)sign;
    if (permuted(terms, perm) != terms) return false;
  }
  return true;
}

WordDegree SymRatFunction::degree() const {
  WordDegree g{numerator.profile, 0};
  if (numerator.terms.empty()) return g;
  const int t = total(numerator.terms.begin()->first);
  for (const auto& [e, c] : numerator.terms)
    if (total(e) != t) throw PreconditionError("inhomogeneous numerator");
  g.vdeg = t - cross_pairs(numerator.profile);
  return g;
}

SymRatFunction fo_unit(const CartanDatum& cd) {
  SymRatFunction f;
  f.numerator.profile.assign(cd.n, 0);
  f.numerator.terms.emplace(Exps{}, QRat(1));
  return f;
}

SymRatFunction fo_monomial(const CartanDatum& cd, int color, int d) {
  if (color < 1 || color > cd.n) throw DomainError("color " + std::to_string(color) + " out of range");
  SymRatFunction f;
  f.numerator.profile.assign(cd.n, 0);
  f.numerator.profile[color - 1] = 1;
  f.numerator.terms.emplace(Exps{d}, QRat(1));
  return f;
}

SymRatFunction fo_add(const SymRatFunction& f, const SymRatFunction& g, const QRat& c) {
  if (f.numerator.profile != g.numerator.profile) throw PreconditionError("adding functions of different profiles");
  SymRatFunction r = f;
  for (const auto& [e, v] : g.numerator.terms) add_term(r.numerator.terms, e, c * v);
  return r;
}

// ---------------------------------------------------------------- product

SymRatFunction fo_mult(const CartanDatum& cd, const SymRatFunction& f, const SymRatFunction& g, int profile_cap) {
  const auto& pf = f.numerator.profile;
  const auto& pg = g.numerator.profile;
  if (static_cast<int>(pf.size()) != cd.n || static_cast<int>(pg.size()) != cd.n)
    throw PreconditionError("profiles do not match the Cartan datum");
  ColoredLaurentPoly out;
  out.profile.resize(cd.n);
  for (int i = 0; i < cd.n; ++i) out.profile[i] = pf[i] + pg[i];
  const int nv = out.variables();
  if (nv > profile_cap)
    throw ConfigError("product has " + std::to_string(nv) + " variables, above the cap of " +
                      std::to_string(profile_cap));
  SymRatFunction res;
  if (f.numerator.is_zero() || g.numerator.is_zero()) {
    res.numerator = out;
    return res;
  }
  // variables of f take the first slots of each color, those of g the rest
  auto fslot = [&](int i, int a) { return out.slot(i, a); };
  auto gslot = [&](int i, int b) { return out.slot(i, pf[i - 1] + b); };
  Poly rf, rg;
  for (const auto& [e, c] : f.numerator.terms) {
    Exps x(nv, 0);
    for (int s = 0; s < static_cast<int>(e.size()); ++s) {
      int i = f.numerator.color_of_slot(s);
      x[fslot(i, s - f.numerator.slot(i, 0))] = e[s];
    }
    add_term(rf, x, c);
  }
  for (const auto& [e, c] : g.numerator.terms) {
    Exps x(nv, 0);
    for (int s = 0; s < static_cast<int>(e.size()); ++s) {
      int i = g.numerator.color_of_slot(s);
      x[gslot(i, s - g.numerator.slot(i, 0))] = e[s];
    }
    add_term(rg, x, c);
  }
  Poly t = mul(rf, rg);
  // zeta numerators; the cross-color denominators join the output's, with a
  // sign when the pair is oriented against color order
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j)
      for (int a = 0; a < pf[i - 1]; ++a)
        for (int b = 0; b < pg[j - 1]; ++b) {
          QRat c = QRat::qpow(-cd.dij(i, j));
          Poly fac = binomial(nv, fslot(i, a), gslot(j, b), c);
          if (i > j)
            for (auto& [e, v] : fac) v = -v;
          t = mul(t, fac);
        }
  // Sym[t / V], V the same-color f-g factors, equals Antisym[t W] / Vandermonde
  // with W the same-color factors within f and within g.
  for (int i = 1; i <= cd.n; ++i) {
    for (int a = 0; a < pf[i - 1]; ++a)
      for (int a2 = a + 1; a2 < pf[i - 1]; ++a2) t = mul(t, binomial(nv, fslot(i, a), fslot(i, a2), QRat(1)));
    for (int b = 0; b < pg[i - 1]; ++b)
      for (int b2 = b + 1; b2 < pg[i - 1]; ++b2) t = mul(t, binomial(nv, gslot(i, b), gslot(i, b2), QRat(1)));
  }
  Poly anti;
  for (const auto& [perm, sign] : color_permutations(out.profile))
    for (const auto& [e, c] : permuted(t, perm)) add_term(anti, e, sign > 0 ? c : -c);
  for (int i = 1; i <= cd.n; ++i)
    for (int a = 0; a < out.profile[i - 1]; ++a)
      for (int b = a + 1; b < out.profile[i - 1]; ++b) anti = divide_binomial(anti, out.slot(i, a), out.slot(i, b));
  long norm = 1;
  for (int i = 0; i < cd.n; ++i) norm *= factorial(pf[i]) * factorial(pg[i]);
  const QRat scale(BigRational(1, norm));
  for (auto& [e, c] : anti) c *= scale;
  out.terms = std::move(anti);
  res.numerator = std::move(out);
  return res;
}

SymRatFunction upsilon_monomial(const CartanDatum& cd, const Word& letters, int profile_cap) {
  if (static_cast<int>(letters.size()) > profile_cap)
    throw ConfigError("product has " + std::to_string(letters.size()) + " variables, above the cap of " +
                      std::to_string(profile_cap));
  SymRatFunction f = fo_unit(cd);
  for (const auto& l : letters) f = fo_mult(cd, f, fo_monomial(cd, l.color, l.exp), profile_cap);
  return f;
}

// ------------------------------------------------------------------ wheel

WheelResult wheel_check(const CartanDatum& cd, const ColoredLaurentPoly& r, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > cd.n || j > cd.n) throw PreconditionError("wheel conditions need distinct colors");
  const int n = 1 - cd.aij(i, j);
  WheelResult res;
  if (r.profile[i - 1] < n || r.profile[j - 1] < 1) return res;
  res.applicable = true;
  const int di = cd.di(i);
  // (z_{i,a_1}, ..., z_{i,a_n}) -> (w, w q_i^2, ...), z_{j,b} -> w q_i^{-a_ij};
  // for symmetric r the first slots suffice
  std::vector<std::vector<int>> choices;
  std::vector<int> pick(r.profile[i - 1]);
  std::iota(pick.begin(), pick.end(), 0);
  const bool sym = r.is_symmetric();
  do {
    std::vector<int> c(pick.begin(), pick.begin() + n);
    if (std::find(choices.begin(), choices.end(), c) == choices.end()) choices.push_back(c);
  } while (!sym && std::next_permutation(pick.begin(), pick.end()));
  const int nj = sym ? 1 : r.profile[j - 1];
  for (const auto& c : choices)
    for (int b = 0; b < nj; ++b) {
      std::vector<int> shift(r.variables(), 0);
      std::vector<bool> used(r.variables(), false);
      for (int t = 0; t < n; ++t) {
        shift[r.slot(i, c[t])] = 2 * di * t;
        used[r.slot(i, c[t])] = true;
      }
      shift[r.slot(j, b)] = -di * cd.aij(i, j);
      used[r.slot(j, b)] = true;
      Poly sub;
      for (const auto& [e, coeff] : r.terms) {
        Exps key(e.size() + 1, 0);
        int qexp = 0;
        for (size_t s = 0; s < e.size(); ++s) {
          if (used[s]) {
            key.back() += e[s];
            qexp += shift[s] * e[s];
          } else {
            key[s] = e[s];
          }
        }
        add_term(sub, key, coeff * QRat::qpow(qexp));
      }
      if (!sub.empty()) res.vanishes = false;
    }
  return res;
}

bool wheel_conditions_hold(const CartanDatum& cd, const ColoredLaurentPoly& r) {
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j)
      if (i != j && !wheel_check(cd, r, i, j).vanishes) return false;
  return true;
}

// ------------------------------------------------------------------- iota

std::map<std::vector<int>, QRat> positional_polynomial(const CartanDatum& cd, const SymRatFunction& r,
                                                       const std::vector<int>& colors) {
  const auto& num = r.numerator;
  std::vector<int> count(cd.n, 0);
  for (int c : colors) ++count[c - 1];
  if (count != num.profile) throw PreconditionError("color sequence does not match the profile");
  const int k = static_cast<int>(colors.size());
  // position a takes the next unused variable of its color
  std::vector<int> to(k);
  std::vector<int> seen(cd.n, 0);
  for (int a = 0; a < k; ++a) to[num.slot(colors[a], seen[colors[a] - 1]++)] = a;
  Poly p = permuted(num.terms, to);
  // R prod_{a<b} (z_a - z_b) = sign * r * prod_{a<b, same color} (z_a - z_b)
  int inversions = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (colors[a] > colors[b]) ++inversions;
      if (colors[a] == colors[b]) p = mul(p, binomial(k, a, b, QRat(1)));
    }
  if (inversions % 2)
    for (auto& [e, c] : p) c = -c;
  return p;
}

namespace {

// Coefficient of z^d in P / prod_{a<b} (z_a - c_ab z_b), each factor expanded
// as -sum_n c_ab^{-n-1} z_a^n z_b^{-n-1}, with c_ab = q^{-d(i_a, i_b)}.
QRat iterated_constant_term(const CartanDatum& cd, const Poly& p, const std::vector<int>& colors, const Exps& d) {
  const int k = static_cast<int>(colors.size());
  QRat total_coeff;
  std::vector<int> carry(k, 0);
  for (const auto& [m, c] : p) {
    std::map<int, long> acc;  // q exponent -> signed count
    std::fill(carry.begin(), carry.end(), 0);
    std::function<void(int, int, int, int, int)> dist;
    std::function<void(int, int, int)> at = [&](int a, int qexp, int sign) {
      const int need = d[a] - m[a] + carry[a];
      if (a == k - 1) {
        if (need == 0) acc[qexp] += sign;
        return;
      }
      if (need < 0) return;
      dist(a, a + 1, need, qexp, sign);
    };
    dist = [&](int a, int b, int left, int qexp, int sign) {
      const int dab = cd.dij(colors[a], colors[b]);
      const int lo = (b == k - 1) ? left : 0;
      for (int n = lo; n <= left; ++n) {
        carry[b] += n + 1;
        if (b == k - 1)
          at(a + 1, qexp + dab * (n + 1), -sign);
        else
          dist(a, b + 1, left - n, qexp + dab * (n + 1), -sign);
        carry[b] -= n + 1;
      }
    };
    at(0, 0, 1);
    for (const auto& [e, cnt] : acc)
      if (cnt != 0) total_coeff += c * QRat(QLaurent::monomial(e, cnt));
  }
  return total_coeff;
}

}  // namespace

LoopShuffleElement iota(const CartanDatum& cd, const SymRatFunction& r, const Window& window) {
  if (window.lo > window.hi) throw PreconditionError("empty window");
  LoopShuffleElement out;
  out.degree = r.degree();
  out.length = r.numerator.variables();
  out.window = window;
  out.truncated = true;
  if (r.numerator.is_zero()) return out;
  if (out.length == 0) {
    out.exact = true;
    out.terms.emplace(Word{}, r.numerator.terms.begin()->second);
    return out;
  }
  std::map<std::vector<int>, Poly> cache;
  for (const auto& w : words_of_degree(out.degree, window)) {
    std::vector<int> colors;
    Exps d;
    for (const auto& l : w) {
      colors.push_back(l.color);
      d.push_back(l.exp);
    }
    auto it = cache.find(colors);
    if (it == cache.end()) it = cache.emplace(colors, positional_polynomial(cd, r, colors)).first;
    QRat c = iterated_constant_term(cd, it->second, colors, d);
    if (!c.is_zero()) out.terms.emplace(w, c);
  }
  return out;
}

// ----------------------------------------------------------- verification

Report verify_composition(const CartanDatum& cd, const Word& letters, const Window& window) {
  Stopwatch sw;
  Report rep;
  rep.name = "composition " + render_word(letters);
  LoopShuffleElement viaf = iota(cd, upsilon_monomial(cd, letters), window);
  LoopShuffleElement direct = phi_letter_products(cd, {{letters, QLaurent(1)}}, window);
  std::set<Word> support;
  for (const auto& [w, c] : viaf.terms) support.insert(w);
  for (const auto& [w, c] : direct.terms) support.insert(w);
  for (const auto& w : support)
    rep.check(viaf.coeff(w) == direct.coeff(w), [&] {
      return "coefficient of " + render_word(w) + ": " + viaf.coeff(w).str() + " vs " + direct.coeff(w).str();
    });
  rep.notes.push_back(std::to_string(support.size()) + " nonzero coefficients compared");
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_image_constraints(const CartanDatum& cd, const SymRatFunction& r, const Window& window) {
  Stopwatch sw;
  Report rep;
  rep.name = "image-constraints";
  const LoopShuffleElement img = iota(cd, r, window);
  const int k = img.length;
  const WordDegree g = img.degree;
  auto gamma = [&](const Word& w) { return img.coeff(w); };
  if (k < 2) {
    rep.notes.push_back("one variable: constraints are vacuous");
    rep.seconds = sw.seconds();
    return rep;
  }

  // Four-term relation: every instance whose six exponents lie in the window.
  long c1 = 0;
  for (const auto& v : words_of_degree(g, window))
    for (int c = 0; c + 1 < k; ++c) {
      const int i = v[c].color, j = v[c + 1].color, rr = v[c].exp + 1, s = v[c + 1].exp;
      if (rr > window.hi || s - 1 < window.lo) continue;
      auto with = [&](int ci, int ei, int cj, int ej) {
        Word w = v;
        w[c] = {ci, ei};
        w[c + 1] = {cj, ej};
        return gamma(w);
      };
      const QRat qd = QRat::qpow(-cd.dij(i, j));
      QRat lhs = with(i, rr - 1, j, s) - with(i, rr, j, s - 1) * qd;
      QRat rhs = with(j, s, i, rr - 1) * qd - with(j, s - 1, i, rr);
      ++c1;
      rep.check(lhs == rhs, [&] { return "four-term relation fails at " + render_word(v) + ", position " + std::to_string(c); });
    }
  rep.notes.push_back(std::to_string(c1) + " four-term instances");

  // Boundedness: a nonzero coefficient has sum_{t<=a} d_t >= M_a, read off the
  // positional polynomial.
  std::map<std::vector<int>, Poly> polys;
  std::map<std::vector<int>, std::vector<long>> bound;
  long global_m = 0;
  bool have_m = false;
  std::vector<int> colors = colors_of_profile(g.hdeg);
  do {
    Poly p = positional_polynomial(cd, r, colors);
    std::vector<long> ma(k, 0);
    bool first = true;
    for (const auto& [e, c] : p) {
      long part = 0;
      for (int a = 0; a + 1 < k; ++a) {
        part += e[a];
        const long b = part - static_cast<long>(a + 1) * a / 2;
        ma[a] = first ? b : std::min(ma[a], b);
      }
      first = false;
    }
    for (int a = 0; a + 1 < k && !p.empty(); ++a) {
      global_m = have_m ? std::min(global_m, ma[a]) : ma[a];
      have_m = true;
    }
    bound[colors] = ma;
    polys[colors] = std::move(p);
  } while (std::next_permutation(colors.begin(), colors.end()));
  for (const auto& [w, c] : img.terms) {
    std::vector<int> cs;
    for (const auto& l : w) cs.push_back(l.color);
    const auto& ma = bound[cs];
    long part = 0;
    for (int a = 0; a + 1 < k; ++a) {
      part += w[a].exp;
      rep.check(part >= ma[a], [&] { return "boundedness fails at " + render_word(w); });
    }
  }
  if (have_m) rep.notes.push_back("boundedness constant M = " + std::to_string(global_m));

  // Alternating sums equal the coefficients of R prod (z_a - z_b), hence vanish
  // outside its support.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  const long npairs = static_cast<long>(pairs.size());
  long c3 = 0, c3_outside = 0;
  const Window inner{window.lo + k - 1, window.hi};
  if (inner.lo <= inner.hi) {
    const WordDegree shifted{g.hdeg, g.vdeg + static_cast<int>(npairs)};
    for (const auto& v : words_of_degree(shifted, inner)) {
      std::vector<int> cs;
      Exps d;
      for (const auto& l : v) {
        cs.push_back(l.color);
        d.push_back(l.exp);
      }
      QRat sum;
      for (long mask = 0; mask < (1L << npairs); ++mask) {
        Word w = v;
        int qexp = 0, sign = 1;
        for (long t = 0; t < npairs; ++t) {
          auto [a, b] = pairs[t];
          if (mask >> t & 1) {
            w[b].exp -= 1;
            qexp -= cd.dij(cs[a], cs[b]);
            sign = -sign;
          } else {
            w[a].exp -= 1;
          }
        }
        QRat gv = gamma(w);
        if (!gv.is_zero()) sum += (sign > 0 ? gv : -gv) * QRat::qpow(qexp);
      }
      const Poly& p = polys[cs];
      auto it = p.find(d);
      const QRat expect = it == p.end() ? QRat() : it->second;
      bool outside = false;
      for (int a = 0; a < k; ++a) {
        int lo = INT32_MAX, hi = INT32_MIN;
        for (const auto& [e, c] : p) {
          lo = std::min(lo, e[a]);
          hi = std::max(hi, e[a]);
        }
        if (p.empty() || d[a] < lo || d[a] > hi) outside = true;
      }
      ++c3;
      if (outside) ++c3_outside;
      rep.check(sum == expect, [&] {
        return "alternating sum at " + render_word(v) + " is " + sum.str() + ", expected " + expect.str();
      });
    }
  }
  rep.notes.push_back(std::to_string(c3) + " alternating sums, " + std::to_string(c3_outside) +
                      " outside the support box");

  // Serre pattern sample: the block i..i j i..i first (then last), the rest of
  // the colors in increasing order.
  long c2 = 0;
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j) {
      if (i == j) continue;
      const int n = 1 - cd.aij(i, j);
      if (g.hdeg[i - 1] < n || g.hdeg[j - 1] < 1) continue;
      Root rest = g.hdeg;
      rest[i - 1] -= n;
      rest[j - 1] -= 1;
      std::vector<int> tail = colors_of_profile(rest);
      const int m = static_cast<int>(tail.size());
      for (int placement = 0; placement < (m > 0 ? 2 : 1); ++placement) {
        // exponents: s_1 <= ... <= s_n, t, and the rest, all in the window
        std::vector<int> s(n, window.lo), chi(m, window.lo);
        std::function<void(int)> over_chi;
        std::function<void(int)> over_s = [&](int p) {
          if (p == n) {
            over_chi(0);
            return;
          }
          for (int v = (p ? s[p - 1] : window.lo); v <= window.hi; ++v) {
            s[p] = v;
            over_s(p + 1);
          }
        };
        over_chi = [&](int p) {
          if (p < m) {
            for (int v = window.lo; v <= window.hi; ++v) {
              chi[p] = v;
              over_chi(p + 1);
            }
            return;
          }
          int sum_rest = std::accumulate(s.begin(), s.end(), 0) + std::accumulate(chi.begin(), chi.end(), 0);
          const int t = g.vdeg - sum_rest;
          if (!window.contains(t)) return;
          QRat total_sum;
          std::vector<int> order(n);
          std::iota(order.begin(), order.end(), 0);
          do {
            for (int kk = 0; kk <= n; ++kk) {
              Word block;
              for (int a = 0; a < kk; ++a) block.push_back({i, s[order[a]]});
              block.push_back({j, t});
              for (int a = kk; a < n; ++a) block.push_back({i, s[order[a]]});
              Word other;
              for (int a = 0; a < m; ++a) other.push_back({tail[a], chi[a]});
              Word w = placement == 0 ? concat(block, other) : concat(other, block);
              QRat b = q_binomial(n, kk, cd.di(i)) * gamma(w);
              total_sum += kk % 2 ? -b : b;
            }
          } while (std::next_permutation(order.begin(), order.end()));
          ++c2;
          rep.check(total_sum.is_zero(), [&] {
            return "Serre pattern (" + std::to_string(i) + "," + std::to_string(j) + ") fails at t = " + std::to_string(t);
          });
        };
        over_s(0);
      }
    }
  if (c2) rep.notes.push_back(std::to_string(c2) + " Serre-pattern instances");
  rep.seconds = sw.seconds();
  return rep;
}

// ------------------------------------------------------------------- json

nlohmann::json to_json(const ColoredLaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms) terms.push_back({{"exponents", e}, {"coeff", c.str()}});
  return {{"profile", p.profile}, {"terms", terms}};
}

nlohmann::json to_json(const SymRatFunction& f) {
  nlohmann::json j{{"numerator", to_json(f.numerator)}};
  try {
    WordDegree g = f.degree();
    j["degree"] = {{"hdeg", g.hdeg}, {"vdeg", g.vdeg}};
  } catch (const PreconditionError&) {
    j["degree"] = nullptr;
  }
  return j;
}

std::string fo_str(const SymRatFunction& f) {
  const auto& num = f.numerator;
  auto var = [&](int s) {
    const int c = num.color_of_slot(s);
    return "z" + std::to_string(c) + std::to_string(s - num.slot(c, 0) + 1);
  };
  std::string top;
  for (auto it = num.terms.rbegin(); it != num.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t s = 0; s < e.size(); ++s) {
      if (e[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var(static_cast<int>(s));
      if (e[s] != 1) mono += "^" + std::to_string(e[s]);
    }
    std::string cs = c.str();
    if (!top.empty()) top += " + ";
    if (mono.empty())
      top += "(" + cs + ")";
    else if (cs == "1")
      top += mono;
    else
      top += "(" + cs + ")*" + mono;
  }
  if (top.empty()) top = "0";
  std::string bottom;
  const int nv = num.variables();
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (num.color_of_slot(a) != num.color_of_slot(b)) bottom += "(" + var(a) + " - " + var(b) + ")";
  return bottom.empty() ? top : "(" + top + ") / " + bottom;
}

}  // namespace lw
