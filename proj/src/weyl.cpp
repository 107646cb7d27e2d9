#include "loopword/weyl.hpp"

#include <algorithm>
#include <set>

#include "loopword/errors.hpp"

namespace lw {

AffineRoot affine_simple_root(const CartanDatum& cd, int i) {
  if (i == 0) return {-cd.theta, 1};
  return {cd.simple_root(i), 0};
}

int affine_simple_index(const CartanDatum& cd, const AffineRoot& x) {
  for (int i = 0; i <= cd.n; ++i)
    if (affine_simple_root(cd, i) == x) return i;
  return -1;
}

bool is_positive_affine_root(const CartanDatum& cd, const AffineRoot& x) {
  if (is_zero_root(x.alpha)) return x.d > 0;
  if (cd.is_positive_root(x.alpha)) return x.d >= 0;
  if (cd.is_positive_root(-x.alpha)) return x.d > 0;
  return false;
}

int affine_cartan(const CartanDatum& cd, int i, int j) {
  const Root ai = affine_simple_root(cd, i).alpha, aj = affine_simple_root(cd, j).alpha;
  return 2 * pairing(cd, ai, aj) / pairing(cd, ai, ai);
}

AffineRoot apply_simple(const CartanDatum& cd, int i, const AffineRoot& x) {
  if (i == 0) {
    const Root& th = cd.theta;
    const int p = 2 * pairing(cd, x.alpha, th) / pairing(cd, th, th);
    Root r = x.alpha;
    for (int k = 0; k < cd.n; ++k) r[k] -= p * th[k];
    return {r, x.d + p};
  }
  return {reflect(cd, i, x.alpha), x.d};
}

AffineRoot apply_translation(const CartanDatum&, const Coweight& mu, const AffineRoot& x) {
  return {x.alpha, x.d - coweight_pairing(x.alpha, mu)};
}

int ReducedWordData::index(long k) const {
  // k = r + t l with r in [1-l, 0]
  long t = k > 0 ? (k + l - 1) / l : -((-k) / l);
  long r = k - t * l;
  int i = indices[static_cast<size_t>(r + l - 1)];
  // apply tau^t (t may be negative; tau is an involution here but we do not rely on it)
  std::vector<int> inv(tau.size());
  for (size_t j = 0; j < tau.size(); ++j) inv[tau[j]] = static_cast<int>(j);
  for (long s = 0; s < (t > 0 ? t : -t); ++s) i = t > 0 ? tau[i] : inv[i];
  return i;
}

ReducedWordData recover_reduced_word(const LoopLyndonTable& table) {
  const CartanDatum& cd = table.cartan();
  std::vector<AffineRoot> L;
  for (const auto& a : cd.roots)
    for (int d = 0; d < height(a); ++d) L.push_back({a, d});
  std::sort(L.begin(), L.end(), [&](const AffineRoot& x, const AffineRoot& y) {
    return table.word(x.alpha, -x.d) < table.word(y.alpha, -y.d);
  });
  const int l = static_cast<int>(L.size());
  if (l != length_pairing_2rho(cd, rho_vee(cd))) throw ConsistencyError("|L| differs from (2rho, rho^vee)");

  // L[m] = beta_{-m}; invert beta_k = s_{i_0} ... s_{i_{k+1}}(alpha_{i_k}).
  std::vector<int> rev;  // i_0, i_{-1}, ...
  for (int m = 0; m < l; ++m) {
    AffineRoot x = L[m];
    for (int t = 0; t < m; ++t) x = apply_simple(cd, rev[t], x);
    int i = affine_simple_index(cd, x);
    if (i < 0)
      throw ConsistencyError("beta_" + std::to_string(-m) + " inverts to " + affine_root_str(x) +
                             ", which is not an affine simple root");
    rev.push_back(i);
  }
  ReducedWordData rw;
  rw.l = l;
  rw.indices.assign(rev.rbegin(), rev.rend());

  // tau = rho^vee o s_{i_0} ... s_{i_{1-l}}, with s_{i_{1-l}} applied first.
  const Coweight rv = rho_vee(cd);
  rw.tau.resize(cd.n + 1);
  for (int j = 0; j <= cd.n; ++j) {
    AffineRoot x = affine_simple_root(cd, j);
    for (int t = 0; t < l; ++t) x = apply_simple(cd, rw.indices[t], x);
    x = apply_translation(cd, rv, x);
    int tj = affine_simple_index(cd, x);
    if (tj < 0) throw ConsistencyError("residual map does not permute the affine simple roots");
    rw.tau[j] = tj;
  }
  for (int i = 0; i <= cd.n; ++i)
    for (int j = 0; j <= cd.n; ++j)
      if (affine_cartan(cd, rw.tau[i], rw.tau[j]) != affine_cartan(cd, i, j))
        throw ConsistencyError("tau is not a diagram automorphism");
  return rw;
}

std::vector<AffineRoot> beta_sequence(const CartanDatum& cd, const ReducedWordData& rw, long from, long to) {
  if (from > to) throw PreconditionError("beta_sequence needs from <= to");
  std::vector<AffineRoot> out;
  for (long k = from; k <= to; ++k) {
    AffineRoot x;
    if (k <= 0) {
      x = affine_simple_root(cd, rw.index(k));
      for (long t = k + 1; t <= 0; ++t) x = apply_simple(cd, rw.index(t), x);
    } else {
      x = affine_simple_root(cd, rw.index(k));
      x = {-x.alpha, -x.d};
      for (long t = k - 1; t >= 1; --t) x = apply_simple(cd, rw.index(t), x);
    }
    out.push_back(x);
  }
  return out;
}

Report verify_weyl_order(const ReducedWordData& rw, const LoopLyndonTable& table, int count) {
  if (count < 1) throw PreconditionError("count must be positive");
  Stopwatch sw;
  Report rep;
  rep.name = "weyl-order";
  const CartanDatum& cd = table.cartan();
  // beta_{count} < ... < beta_1 < beta_0 < ... < beta_{1-count}
  auto betas = beta_sequence(cd, rw, 1 - count, count);
  const long base = 1 - count;
  std::set<std::pair<Root, int>> seen;
  for (size_t m = 0; m < betas.size(); ++m) {
    const AffineRoot& b = betas[m];
    const long k = base + static_cast<long>(m);
    rep.check(cd.is_positive_root(b.alpha) && (k <= 0 ? b.d >= 0 : b.d < 0),
              [&] { return "beta_" + std::to_string(k) + " = " + affine_root_str(b) + " outside the expected half"; });
    rep.check(seen.insert({b.alpha, b.d}).second, [&] { return "beta_" + std::to_string(k) + " repeated"; });
  }
  for (size_t m = 0; m + 1 < betas.size(); ++m) {
    // betas[m] = beta_k, betas[m+1] = beta_{k+1}; need beta_{k+1} < beta_k.
    const AffineRoot& lo = betas[m + 1];
    const AffineRoot& hi = betas[m];
    if (!cd.is_positive_root(lo.alpha) || !cd.is_positive_root(hi.alpha)) continue;
    int c = loop_order_compare(table, {lo.alpha, lo.d}, {hi.alpha, hi.d});
    rep.check(c < 0, [&] {
      long k = base + static_cast<long>(m);
      return "beta_" + std::to_string(k + 1) + " = " + affine_root_str(lo) + " is not below beta_" + std::to_string(k) +
             " = " + affine_root_str(hi);
    });
  }
  // Quasi-periodicity beta_{k+l} = rho^vee(beta_k) on the same window.
  const Coweight rv = rho_vee(cd);
  for (size_t m = 0; m + rw.l < betas.size(); ++m)
    rep.check(betas[m + rw.l] == apply_translation(cd, rv, betas[m]),
              [&] { return "periodicity fails at beta_" + std::to_string(base + static_cast<long>(m)); });
  rep.check(rw.l == length_pairing_2rho(cd, rv), [] { return std::string("length mismatch"); });
  rep.seconds = sw.seconds();
  return rep;
}

nlohmann::json reduced_word_to_json(const ReducedWordData& rw) {
  return {{"tau", rw.tau}, {"indices", rw.indices}, {"l", rw.l}};
}

nlohmann::json affine_root_to_json(const AffineRoot& x) { return {{"alpha", x.alpha}, {"d", x.d}}; }

std::string affine_root_str(const AffineRoot& x) { return "(" + root_str(x.alpha) + "," + std::to_string(x.d) + ")"; }

}  // namespace lw
