#include <random>

#include "doctest.h"
#include "loopword/errors.hpp"
#include "loopword/shuffle.hpp"

using namespace lw;

namespace {

Word W(const char* s) { return parse_word(s); }
QRat Q(const char* s) { return parse_qrat(s); }

// Generator product e_{x1} ... e_{xk} as iterated loop shuffles of single
// letters, each step on the widest certifiable window containing target.
LoopShuffleElement iterated(const CartanDatum& cd, const Word& x, const Window& target) {
  LoopShuffleElement acc = loop_word_element(cd, {x[0]});
  for (size_t k = 1; k < x.size(); ++k) {
    LoopShuffleElement next = loop_word_element(cd, {x[k]});
    auto cert = certifiable_window(acc, next);
    REQUIRE(cert.has_value());
    const int pad = static_cast<int>(x.size());
    Window w{std::max(cert->lo, target.lo - pad), std::min(cert->hi, target.hi + pad)};
    acc = shuffle_loop(cd, acc, next, w);
  }
  return acc;
}

}  // namespace

TEST_CASE("finite shuffle products") {
  auto cd = build_cartan('A', 2);
  auto p = shuffle_finite(*cd, finite_element(W("1")), finite_element(W("2")));
  CHECK(p.terms.size() == 2);
  CHECK(p.terms[W("1 2")] == QRat(1));
  CHECK(p.terms[W("2 1")] == Q("q^-1"));
  for (int i = 1; i <= 2; ++i) {
    auto s = shuffle_finite(*cd, finite_element(finite_word({i})), finite_element(finite_word({i})));
    CHECK(s.terms[finite_word({i, i})] == QRat(1) + QRat::qpow(cd->dij(i, i)));
  }
  auto x = finite_element(W("1 2 1"), Q("q + 3"));
  CHECK(shuffle_finite(*cd, finite_element(Word{}), x).terms == x.terms);
  CHECK(shuffle_finite(*cd, x, finite_element(Word{})).terms == x.terms);
}

TEST_CASE("finite shuffle is associative") {
  auto cd = build_cartan('B', 2);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> len(1, 2), color(1, 2);
  for (int t = 0; t < 15; ++t) {
    FiniteShuffleElement e[3];
    for (auto& x : e) {
      Word w(len(rng));
      for (auto& l : w) l = {color(rng), 0};
      x = finite_element(w);
    }
    auto l = shuffle_finite(*cd, shuffle_finite(*cd, e[0], e[1]), e[2]);
    auto r = shuffle_finite(*cd, e[0], shuffle_finite(*cd, e[1], e[2]));
    CHECK(l.terms == r.terms);
  }
}

TEST_CASE("loop shuffle coefficients") {
  auto cd = build_cartan('A', 2);
  auto p = shuffle_loop(*cd, loop_word_element(*cd, W("1")), loop_word_element(*cd, W("2")), {-2, 2});
  CHECK(p.coeff(W("2 1")) == Q("q^-1"));
  CHECK(p.coeff(W("2^(1) 1^(-1)")) == Q("q^-1 * (q^-1 - q)"));
  CHECK(p.coeff(W("1 2")) == QRat(1));
  CHECK(p.coeff(W("1^(1) 2^(-1)")).is_zero());
  // r-th shift carries q^{-r}(q^-1 - q) for the pair of colors 2 over 1
  CHECK(p.coeff(W("2^(2) 1^(-2)")) == Q("q^-2 * (q^-1 - q)"));
  // single letters carry a span, so the product's leading word is certified
  auto wide = shuffle_loop(*cd, loop_word_element(*cd, W("1")), loop_word_element(*cd, W("2")), {-3, 3});
  CHECK(leading_word(wide).first == W("2 1"));
}

TEST_CASE("certifiable windows") {
  auto cd = build_cartan('A', 2);
  auto x = shuffle_loop(*cd, loop_word_element(*cd, W("1")), loop_word_element(*cd, W("2")), {-3, 3});
  auto y = loop_word_element(*cd, W("1"));
  auto c = certifiable_window(x, y);
  REQUIRE(c.has_value());
  CHECK(c->lo == -3);
  auto c2 = certifiable_window(y, x);
  REQUIRE(c2.has_value());
  CHECK(c2->hi == 3);
  CHECK_THROWS_AS(shuffle_loop(*cd, x, y, {-4, 0}), TruncationError);
  try {
    shuffle_loop(*cd, x, y, {-4, 0});
  } catch (const TruncationError& e) {
    CHECK(e.has_certified);
    CHECK(e.certified_lo == -3);
  }
}

TEST_CASE("loop shuffle is associative on certified windows") {
  auto cd = build_cartan('A', 2);
  const Word letters[] = {W("1"), W("2^(1)"), W("1^(-1)")};
  auto a = loop_word_element(*cd, letters[0]), b = loop_word_element(*cd, letters[1]),
       c = loop_word_element(*cd, letters[2]);
  // products of exact letters are certifiable on any window
  auto ab = shuffle_loop(*cd, a, b, {-4, 4});
  auto bc = shuffle_loop(*cd, b, c, {-4, 4});
  auto lcert = certifiable_window(ab, c), rcert = certifiable_window(a, bc);
  REQUIRE(lcert.has_value());
  REQUIRE(rcert.has_value());
  auto left = shuffle_loop(*cd, ab, c, *lcert);
  auto right = shuffle_loop(*cd, a, bc, *rcert);
  const Window common{std::max(lcert->lo, rcert->lo), std::min(lcert->hi, rcert->hi)};
  REQUIRE(common.lo <= common.hi);
  for (const auto& [w, v] : left.terms) {
    bool inside = true;
    for (const auto& l : w) inside = inside && common.contains(l.exp);
    if (inside) CHECK(right.coeff(w) == v);
  }
  for (const auto& [w, v] : right.terms) {
    bool inside = true;
    for (const auto& l : w) inside = inside && common.contains(l.exp);
    if (inside) CHECK(left.coeff(w) == v);
  }
}

TEST_CASE("generator products agree with iterated shuffles") {
  for (char t : {'A', 'B', 'G'}) {
    auto cd = build_cartan(t, 2);
    std::mt19937 rng(t);
    std::uniform_int_distribution<int> len(1, 3), color(1, 2), ex(-1, 1);
    for (int trial = 0; trial < 12; ++trial) {
      Word x(len(rng));
      for (auto& l : x) l = {color(rng), ex(rng)};
      const Window target{-2, 2};
      LoopShuffleElement direct = phi_letter_products(*cd, {{x, QLaurent(1)}}, target);
      LoopShuffleElement oracle = iterated(*cd, x, target);
      for (const auto& [w, v] : direct.terms) CHECK(oracle.coeff(w) == v);
      for (const auto& [w, v] : oracle.terms) {
        bool inside = true;
        for (const auto& l : w) inside = inside && target.contains(l.exp);
        if (inside) CHECK(direct.coeff(w) == v);
      }
    }
  }
}

TEST_CASE("brackets and images") {
  auto cd = build_cartan('A', 2);
  BracketExpr e = bracket_vector(*cd, W("1 2"));
  LetterProducts p = expand_brackets(*cd, e);
  CHECK(p.size() == 2);
  CHECK(p[W("1 2")] == QLaurent(1));
  CHECK(p[W("2 1")] == -QLaurent::monomial(-1));
  FiniteShuffleElement f = phi_finite(*cd, e);
  // oracle: [1]*[2] - q^{(a1,a2)} [2]*[1] via the finite shuffle
  auto s12 = shuffle_finite(*cd, finite_element(W("1")), finite_element(W("2")));
  auto s21 = shuffle_finite(*cd, finite_element(W("2")), finite_element(W("1")));
  CHECK(f.terms == add(s12, s21, -QRat::qpow(-1)).terms);
  CHECK(f.terms.size() == 1);
  CHECK(f.terms[W("1 2")] == Q("1 - q^-2"));
  CHECK(leading_word(f).first == W("1 2"));
  // generators map to single words
  auto g = phi_loop(*cd, bracket_vector(*cd, W("2^(3)")), {-5, 5});
  CHECK(g.terms.size() == 1);
  CHECK(g.coeff(W("2^(3)")) == QRat(1));
}

TEST_CASE("loop leading words") {
  auto cd = build_cartan('A', 2);
  LoopLyndonTable t(cd);
  Word l = t.word(Root{1, 1}, 1);
  LetterProducts p = expand_brackets(*cd, bracket_vector(*cd, l));
  LetterSpan sp = letter_span(p);
  LoopShuffleElement x = phi_letter_products(*cd, p, sp.lead_box());
  CHECK(leading_word(x).first == l);
  // a window missing the lead box cannot certify the leading word
  LoopShuffleElement narrow = phi_letter_products(*cd, p, {0, 0});
  CHECK_THROWS_AS(leading_word(narrow), TruncationError);
  // leading word of [1]*[2] is [2 1] with coefficient q^-1
  LetterProducts e12{{W("1 2"), QLaurent(1)}};
  LoopShuffleElement y = phi_letter_products(*cd, e12, letter_span(e12).lead_box());
  CHECK(leading_word(y).first == W("2 1"));
  CHECK(leading_word(y).second == Q("q^-1"));
  CHECK(leading_word(loop_word_element(*cd, W("1^(2) 2"))).first == W("1^(2) 2"));
  CHECK(verify_loop_leading_words(t, 0, -1).passed());
}

TEST_CASE("standard and good words") {
  auto cd = build_cartan('A', 2);
  LoopLyndonTable t(cd);
  CHECK(is_standard(t, W("1 2")));
  CHECK(is_standard(t, W("2 2")));
  CHECK(is_standard(t, W("2 1")));
  CHECK_FALSE(is_standard(t, W("1^(1) 2")));
  // goodness decided without Lyndon data must match standardness
  for (const auto& w : words_of_degree({{1, 1}, 1}, {-1, 2})) CHECK(good_word_linear_test(*cd, w) == is_standard(t, w));
  for (const auto& w : words_of_degree({{2, 1}, 0}, {-1, 1})) CHECK(good_word_linear_test(*cd, w) == is_standard(t, w));
  CHECK(good_word_linear_test(*cd, W("2 2")));
  CHECK(good_word_linear_test(*cd, W("2 1")));
}

TEST_CASE("finite image condition") {
  auto cd = build_cartan('A', 2);
  auto x = shuffle_finite(*cd, finite_element(W("1")), finite_element(W("2")));
  CHECK(satisfies_finite_image_condition(*cd, x));
  auto bad = finite_element(W("1 1 2"));
  CHECK_FALSE(satisfies_finite_image_condition(*cd, bad));
}

TEST_CASE("Serre relations") {
  auto a2 = build_cartan('A', 2);
  // [1]*[1]*[2] - (q + q^-1)[1]*[2]*[1] + [2]*[1]*[1] = 0
  auto e = [&](const char* s) { return finite_element(W(s)); };
  auto prod3 = [&](const char* a, const char* b, const char* c) {
    return shuffle_finite(*a2, shuffle_finite(*a2, e(a), e(b)), e(c));
  };
  auto sum = add(add(prod3("1", "1", "2"), prod3("1", "2", "1"), -Q("q + q^-1")), prod3("2", "1", "1"));
  CHECK(sum.is_zero());
  for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}})
    CHECK(verify_serre_images(*build_cartan(t, n), -1).passed());
  CHECK(verify_serre_images(*a2, 0).passed());
}

TEST_CASE("PBW triangularity") {
  auto cd = build_cartan('A', 2);
  LoopLyndonTable t(cd);
  Report r0 = verify_pbw_triangularity(t, {{1, 1}, 0}, {-1, 2});
  CHECK(r0.passed());
  CHECK(verify_pbw_triangularity(t, {{1, 1}, 1}, {-1, 2}).passed());
  CHECK(verify_pbw_triangularity(t, {{2, 1}, 2}, {-1, 2}).passed());
}

TEST_CASE("span leading words") {
  std::vector<WordMap> rows{{{W("1 2"), QRat(1)}, {W("2 1"), QRat(1)}}, {{W("2 1"), QRat(2)}, {W("1 2"), QRat(2)}},
                            {{W("2 1"), QRat(1)}}};
  auto lead = span_leading_words(rows);
  CHECK(lead == std::set<Word>{W("2 1"), W("1 2")});
  Word stop = W("2 1");
  CHECK(span_leading_words(rows, &stop) == std::set<Word>{W("2 1")});
}

TEST_CASE("json output") {
  auto cd = build_cartan('A', 2);
  auto p = shuffle_loop(*cd, loop_word_element(*cd, W("1")), loop_word_element(*cd, W("2")), {-1, 1});
  auto j = element_to_json(p);
  CHECK(j["terms"].size() == 3);
  CHECK(j["window"][0] == -1);
  CHECK(j["terms"][0]["rendered"] == "2 1");
}
