#include "doctest.h"
#include "loopword/errors.hpp"
#include "loopword/rootsys.hpp"

using namespace lw;

TEST_CASE("type A2 data") {
  auto cd = build_cartan('A', 2);
  CHECK(cd->aij(1, 2) == -1);
  CHECK(cd->aij(2, 1) == -1);
  CHECK(cd->dij(1, 2) == -1);
  CHECK(positive_roots(*cd).size() == 3);
  CHECK(cd->theta == Root{1, 1});
  CHECK(height(cd->theta) == 2);
  CHECK(pairing(*cd, {1, 0}, {0, 1}) == -1);
  CHECK(pairing(*cd, cd->theta, cd->theta) == 2);
  CHECK(length_pairing_2rho(*cd, rho_vee(*cd)) == 4);
}

TEST_CASE("type B2 data") {
  auto cd = build_cartan('B', 2);
  CHECK(cd->theta == Root{1, 2});
  CHECK(height(cd->theta) == 3);
  CHECK(cd->di(1) == 2);
  CHECK(cd->di(2) == 1);
  CHECK(pairing(*cd, {0, 1}, {0, 1}) == 2);
  const auto& r = positive_roots(*cd);
  CHECK(r.size() == 4);
  for (const Root& x : {Root{1, 0}, Root{0, 1}, Root{1, 1}, Root{1, 2}}) CHECK(cd->is_positive_root(x));
  auto c2 = build_cartan('C', 2);
  CHECK(c2->theta == Root{2, 1});
}

TEST_CASE("positive root counts") {
  // |Delta+| from dim g = rank + 2 |Delta+|
  struct Case {
    char t;
    int n;
    size_t count;
  };
  for (auto c : {Case{'A', 1, 1}, Case{'A', 4, 10}, Case{'A', 6, 21}, Case{'B', 3, 9}, Case{'B', 5, 25},
                 Case{'C', 4, 16}, Case{'D', 4, 12}, Case{'D', 5, 20}, Case{'E', 6, 36}, Case{'E', 7, 63},
                 Case{'E', 8, 120}, Case{'F', 4, 24}, Case{'G', 2, 6}})
    CHECK(positive_roots(*build_cartan(c.t, c.n)).size() == c.count);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(build_cartan('G', 3), ConfigError);
  CHECK_THROWS_AS(build_cartan('D', 3), ConfigError);
  CHECK_THROWS_AS(build_cartan('B', 1), ConfigError);
  CHECK_THROWS_AS(build_cartan('C', 1), ConfigError);
  CHECK_THROWS_AS(build_cartan('E', 5), ConfigError);
  CHECK_THROWS_AS(build_cartan('E', 9), ConfigError);
  CHECK_THROWS_AS(build_cartan('A', 0), ConfigError);
  CHECK_THROWS_AS(build_cartan('X', 2), ConfigError);
}

TEST_CASE("root system invariants") {
  for (auto [t, n] : {std::pair{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'E', 6}, {'F', 4}, {'G', 2}}) {
    auto cd = build_cartan(t, n);
    // symmetrized form: (alpha_i, alpha_j) = d_i a_ij is symmetric
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(cd->dij(i, j) == cd->dij(j, i));
        CHECK(cd->dij(i, j) == cd->di(i) * cd->aij(i, j));
      }
    // theta is the unique root that no simple root can be added to
    for (const Root& r : cd->roots) {
      bool maximal = true;
      for (int i = 1; i <= n; ++i) maximal = maximal && !cd->is_positive_root(r + cd->simple_root(i));
      CHECK(maximal == (r == cd->theta));
    }
    // reflections permute the roots and are involutions
    for (int i = 1; i <= n; ++i)
      for (const Root& r : cd->roots) {
        Root s = reflect(*cd, i, r);
        CHECK(reflect(*cd, i, s) == r);
        if (r == cd->simple_root(i))
          CHECK(s == -r);
        else
          CHECK(cd->is_positive_root(s));
      }
    // (2 rho, rho^vee) counts pairs (alpha, d) with 0 <= d < |alpha|
    int count = 0;
    for (const Root& r : cd->roots) count += height(r);
    CHECK(length_pairing_2rho(*cd, rho_vee(*cd)) == count);
  }
}

TEST_CASE("root parsing") {
  CHECK(parse_root("1,2", 2) == Root{1, 2});
  CHECK(root_str(Root{1, 2}) == "(1,2)");
  CHECK_THROWS_AS(parse_root("1,2,3", 2), ConfigError);
  CHECK_THROWS_AS(parse_root("a,b", 2), ConfigError);
}
