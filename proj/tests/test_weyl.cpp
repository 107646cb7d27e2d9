#include "doctest.h"
#include "loopword/errors.hpp"
#include "loopword/weyl.hpp"

using namespace lw;

TEST_CASE("affine reflections") {
  auto cd = build_cartan('A', 2);
  const Root th{1, 1};
  CHECK(apply_simple(*cd, 1, {{1, 0}, 0}) == AffineRoot{{-1, 0}, 0});
  CHECK(apply_simple(*cd, 0, {th, 0}) == AffineRoot{{-1, -1}, 2});
  for (int i = 0; i <= 2; ++i)
    for (const Root& r : cd->roots)
      for (int d = -2; d <= 2; ++d) CHECK(apply_simple(*cd, i, apply_simple(*cd, i, {r, d})) == AffineRoot{r, d});
  // s_i permutes the positive affine roots other than alpha_i
  for (int i = 0; i <= 2; ++i)
    for (const Root& r : cd->roots)
      for (int d = 0; d <= 3; ++d) {
        AffineRoot x{r, d};
        if (x == affine_simple_root(*cd, i)) continue;
        CHECK(is_positive_affine_root(*cd, apply_simple(*cd, i, x)));
      }
}

TEST_CASE("translation by rho vee") {
  auto cd = build_cartan('A', 2);
  const Coweight rv = rho_vee(*cd);
  CHECK(apply_translation(*cd, rv, {{1, 1}, 0}) == AffineRoot{{1, 1}, -2});
  CHECK(apply_translation(*cd, rv, {{1, 0}, 5}) == AffineRoot{{1, 0}, 4});
  CHECK(apply_translation(*cd, Coweight{{0, 0}}, {{1, 0}, 5}) == AffineRoot{{1, 0}, 5});
}

TEST_CASE("reduced word for A2") {
  auto cd = build_cartan('A', 2);
  LoopLyndonTable t(cd);
  ReducedWordData rw = recover_reduced_word(t);
  CHECK(rw.l == 4);
  CHECK(rw.index(0) == 1);
  CHECK(rw.index(1) == 0);
  auto b = beta_sequence(*cd, rw, -4, 1);
  CHECK(b[4] == AffineRoot{{1, 0}, 0});   // beta_0
  CHECK(b[3] == AffineRoot{{1, 1}, 0});   // beta_-1
  CHECK(b[2] == AffineRoot{{0, 1}, 0});   // beta_-2
  CHECK(b[1] == AffineRoot{{1, 1}, 1});   // beta_-3
  CHECK(b[0] == AffineRoot{{1, 0}, 1});   // beta_-4
  CHECK(cd->is_positive_root(b[5].alpha));
  CHECK(b[5].d < 0);
  CHECK_THROWS_AS(beta_sequence(*cd, rw, 2, 1), PreconditionError);
}

TEST_CASE("order of the beta sequence") {
  for (auto [t, n, count] : {std::tuple{'A', 2, 10}, {'A', 3, 25}, {'B', 2, 10}, {'C', 3, 20}, {'G', 2, 20}, {'D', 4, 15}}) {
    auto cd = build_cartan(t, n);
    LoopLyndonTable table(cd);
    ReducedWordData rw = recover_reduced_word(table);
    CHECK(rw.l == length_pairing_2rho(*cd, rho_vee(*cd)));
    // the recovered word has l distinct roots beta_0 ... beta_{1-l} with d >= 0
    Report r = verify_weyl_order(rw, table, count);
    CHECK_MESSAGE(r.passed(), r.summary());
    // tau is a diagram automorphism fixing the affine Cartan matrix
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) CHECK(affine_cartan(*cd, rw.tau[i], rw.tau[j]) == affine_cartan(*cd, i, j));
  }
}
