#include <random>

#include "doctest.h"
#include "loopword/errors.hpp"
#include "loopword/foshuffle.hpp"

using namespace lw;

namespace {

Word W(const char* s) { return parse_word(s); }
QRat Q(const char* s) { return parse_qrat(s); }

}  // namespace

TEST_CASE("upsilon of generators") {
  auto cd = build_cartan('A', 2);
  SymRatFunction g = upsilon_monomial(*cd, W("1^(3)"));
  CHECK(g.numerator.profile == std::vector<int>{1, 0});
  CHECK(g.numerator.terms.size() == 1);
  CHECK(g.numerator.terms.at({3}) == QRat(1));
  SymRatFunction unit = upsilon_monomial(*cd, Word{});
  CHECK(unit.numerator.variables() == 0);
  CHECK(unit.numerator.terms.at({}) == QRat(1));
  // (z11 - q z21) / (z11 - z21)
  SymRatFunction u = upsilon_monomial(*cd, W("1 2"));
  CHECK(u.numerator.terms.size() == 2);
  CHECK(u.numerator.terms.at({1, 0}) == QRat(1));
  CHECK(u.numerator.terms.at({0, 1}) == -Q("q"));
  CHECK(u == fo_mult(*cd, fo_monomial(*cd, 1, 0), fo_monomial(*cd, 2, 0)));
  CHECK(u.degree().vdeg == 0);
}

TEST_CASE("product is symmetric, graded and associative") {
  auto cd = build_cartan('A', 2);
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) {
      auto s = fo_add(fo_mult(*cd, fo_monomial(*cd, 1, a), fo_monomial(*cd, 1, b)),
                      fo_mult(*cd, fo_monomial(*cd, 1, b), fo_monomial(*cd, 1, a)));
      CHECK(s.numerator.profile == std::vector<int>{2, 0});
      CHECK(s.numerator.is_symmetric());
      CHECK(s.degree().vdeg == a + b);
    }
  auto x = fo_monomial(*cd, 1, 0), y = fo_monomial(*cd, 1, 0), z = fo_monomial(*cd, 2, 0);
  CHECK(fo_mult(*cd, fo_mult(*cd, x, y), z) == fo_mult(*cd, x, fo_mult(*cd, y, z)));
  auto b2 = build_cartan('B', 2);
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> color(1, 2), ex(-1, 1);
  for (int t = 0; t < 6; ++t) {
    SymRatFunction f[3];
    for (auto& v : f) v = fo_monomial(*b2, color(rng), ex(rng));
    auto l = fo_mult(*b2, fo_mult(*b2, f[0], f[1]), f[2]);
    auto r = fo_mult(*b2, f[0], fo_mult(*b2, f[1], f[2]));
    CHECK(l == r);
    CHECK(l.degree().hdeg == f[0].degree().hdeg + f[1].degree().hdeg + f[2].degree().hdeg);
  }
}

TEST_CASE("profile cap") {
  auto cd = build_cartan('A', 2);
  CHECK_THROWS_AS(upsilon_monomial(*cd, W("1 2 1 2 1 2")), ConfigError);
  CHECK_NOTHROW(upsilon_monomial(*cd, W("1 2 1 2 1 2"), 6));
}

TEST_CASE("wheel conditions") {
  auto cd = build_cartan('A', 2);
  auto u = upsilon_monomial(*cd, W("1 2"));
  WheelResult na = wheel_check(*cd, u.numerator, 1, 2);
  CHECK_FALSE(na.applicable);
  CHECK(na.passed());
  auto u3 = upsilon_monomial(*cd, W("1 1 2"));
  WheelResult w = wheel_check(*cd, u3.numerator, 1, 2);
  CHECK(w.applicable);
  CHECK(w.vanishes);
  ColoredLaurentPoly one;
  one.profile = {2, 1};
  one.terms[{0, 0, 0}] = QRat(1);
  CHECK_FALSE(wheel_check(*cd, one, 1, 2).vanishes);
  // closure: products of generators stay in the wheel subspace
  for (char t : {'A', 'B', 'G'}) {
    auto c = build_cartan(t, 2);
    std::mt19937 rng(t);
    std::uniform_int_distribution<int> color(1, 2), ex(-1, 1);
    for (int trial = 0; trial < 5; ++trial) {
      Word x(t == 'G' ? 5 : 4);
      for (auto& l : x) l = {color(rng), ex(rng)};
      CHECK(wheel_conditions_hold(*c, upsilon_monomial(*c, x).numerator));
    }
  }
}

TEST_CASE("iota on generators and products") {
  auto cd = build_cartan('A', 2);
  for (int d = -2; d <= 2; ++d) {
    auto x = iota(*cd, fo_monomial(*cd, 1, d), {-3, 3});
    CHECK(x.terms.size() == 1);
    CHECK(x.coeff({{1, d}}) == QRat(1));
  }
  auto x = iota(*cd, upsilon_monomial(*cd, W("1 2")), {-3, 3});
  CHECK(x.coeff(W("2 1")) == Q("q^-1"));
  CHECK(x.coeff(W("2^(1) 1^(-1)")) == Q("q^-2 - 1"));
  CHECK_THROWS(iota(*cd, fo_monomial(*cd, 1, 0), {1, 0}));
}

TEST_CASE("iota does not depend on which same-color slot a position takes") {
  auto cd = build_cartan('B', 2);
  SymRatFunction r = upsilon_monomial(*cd, W("2 1^(1) 2^(-1)"));
  REQUIRE(r.numerator.is_symmetric());
  // swapping the two color-2 variables leaves the numerator, hence iota, unchanged
  SymRatFunction swapped = r;
  swapped.numerator.terms.clear();
  for (const auto& [e, c] : r.numerator.terms) {
    auto f = e;
    std::swap(f[1], f[2]);
    swapped.numerator.terms[f] = c;
  }
  CHECK(iota(*cd, swapped, {-2, 2}).terms == iota(*cd, r, {-2, 2}).terms);
}

TEST_CASE("iota intertwines the products") {
  auto cd = build_cartan('A', 2);
  auto f = upsilon_monomial(*cd, W("1 2^(1)"));
  auto g = upsilon_monomial(*cd, W("2^(-1)"));
  auto lhs = iota(*cd, fo_mult(*cd, f, g), {-3, 3});
  auto fi = iota(*cd, f, {-5, 5});
  auto gi = iota(*cd, g, {-5, 5});
  auto cert = certifiable_window(fi, gi);
  REQUIRE(cert.has_value());
  REQUIRE(cert->contains(Window{-3, 3}));
  auto rhs = shuffle_loop(*cd, fi, gi, {-3, 3});
  CHECK(lhs.terms == rhs.terms);
}

TEST_CASE("composition with the loop shuffle algebra") {
  auto cd = build_cartan('A', 2);
  CHECK(verify_composition(*cd, W("1 2"), {-3, 3}).passed());
  CHECK(verify_composition(*cd, W("1^(1) 1^(-1)"), {-3, 3}).passed());
  CHECK(verify_composition(*cd, W("2^(4)"), {-3, 3}).passed());
  auto g2 = build_cartan('G', 2);
  CHECK(verify_composition(*g2, W("2 1^(1) 1"), {-2, 2}).passed());
}

TEST_CASE("iota is injective on spans of generator products") {
  auto cd = build_cartan('A', 2);
  // degree (2 alpha_1 + alpha_2, 0) with exponents in [-1, 1]
  std::vector<SymRatFunction> fs;
  for (const auto& x : words_of_degree({{2, 1}, 0}, {-1, 1})) fs.push_back(upsilon_monomial(*cd, x));
  // rank of the numerators, keyed as pseudo-words (slot, exponent)
  std::vector<WordMap> nums, images;
  for (const auto& f : fs) {
    WordMap m;
    for (const auto& [e, c] : f.numerator.terms) {
      Word key;
      for (size_t s = 0; s < e.size(); ++s) key.push_back({static_cast<int>(s) + 1, e[s]});
      m[key] = c;
    }
    nums.push_back(m);
    images.push_back(iota(*cd, f, {-4, 4}).terms);
  }
  CHECK(span_leading_words(nums).size() == span_leading_words(images).size());
  CHECK(span_leading_words(nums).size() > 1);
}

TEST_CASE("image constraints") {
  auto cd = build_cartan('A', 2);
  Report r1 = verify_image_constraints(*cd, upsilon_monomial(*cd, W("1 2")), {-4, 4});
  CHECK_MESSAGE(r1.passed(), r1.summary());
  CHECK(r1.checks > 0);
  Report r2 = verify_image_constraints(*cd, upsilon_monomial(*cd, W("1 1 2")), {-4, 4});
  CHECK_MESSAGE(r2.passed(), r2.summary());
  Report r0 = verify_image_constraints(*cd, fo_monomial(*cd, 1, 2), {-4, 4});
  CHECK(r0.passed());
  CHECK(r0.checks == 0);
  // the third constraint is an identity with the positional polynomial
  auto p = positional_polynomial(*cd, upsilon_monomial(*cd, W("1 2")), {2, 1});
  CHECK(p.size() == 2);
  CHECK(p.at({1, 0}) == Q("q"));
  CHECK(p.at({0, 1}) == QRat(-1));
}

TEST_CASE("text and json") {
  auto cd = build_cartan('A', 2);
  auto u = upsilon_monomial(*cd, W("1 2"));
  CHECK(fo_str(u) == "(z11 + (-q)*z21) / (z11 - z21)");
  auto j = to_json(u);
  CHECK(j["numerator"]["profile"] == std::vector<int>{1, 1});
  CHECK(j["numerator"]["terms"].size() == 2);
  CHECK(j["degree"]["vdeg"] == 0);
}
