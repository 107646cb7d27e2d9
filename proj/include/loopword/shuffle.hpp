#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "loopword/lyndon.hpp"
#include "loopword/qfield.hpp"
#include "loopword/report.hpp"
#include "loopword/words.hpp"

namespace lw {

// Closed exponent interval [lo, hi].
struct Window {
  int lo = 0;
  int hi = 0;
  bool contains(int e) const { return lo <= e && e <= hi; }
  bool contains(const Window& w) const { return lo <= w.lo && w.hi <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

using WordMap = std::map<Word, QRat>;

// ----------------------------------------------------------------- finite

struct FiniteShuffleElement {
  WordMap terms;
  bool is_zero() const { return terms.empty(); }
};

FiniteShuffleElement finite_element(const Word& w, const QRat& c = QRat(1));
FiniteShuffleElement shuffle_finite(const CartanDatum& cd, const FiniteShuffleElement& x,
                                    const FiniteShuffleElement& y);
FiniteShuffleElement add(const FiniteShuffleElement& x, const FiniteShuffleElement& y, const QRat& c = QRat(1));

// ------------------------------------------------------------------- loop

// Range of letter exponents and word length of a combination of letter
// products. Any nonzero such combination has its leading word inside
// lead_box(); see leading_word().
struct LetterSpan {
  int dmin = 0;
  int dmax = 0;
  int length = 0;
  Window lead_box() const { return {dmin - (length - 1), dmax + (length - 1)}; }
};

// A homogeneous element of the completed loop shuffle algebra, stored on an
// exponent window. Every word of the degree whose exponents lie in the window
// and whose coefficient is nonzero is present (restricted to words >= floor
// when floor is set). exact means terms is the whole element.
struct LoopShuffleElement {
  WordDegree degree;
  int length = 0;
  Window window;
  bool exact = false;
  bool truncated = false;
  WordMap terms;
  std::optional<LetterSpan> span;
  std::optional<Word> floor;
  bool is_zero() const { return terms.empty(); }
  QRat coeff(const Word& w) const;
};

LoopShuffleElement loop_word_element(const CartanDatum& cd, const Word& w, const QRat& c = QRat(1));
// Largest window on which x * y is provably complete.
std::optional<Window> certifiable_window(const LoopShuffleElement& x, const LoopShuffleElement& y);
// Throws TruncationError when the requested window is not certifiable.
LoopShuffleElement shuffle_loop(const CartanDatum& cd, const LoopShuffleElement& x, const LoopShuffleElement& y,
                                const Window& requested);

// -------------------------------------------------------------- brackets

struct BracketNode {
  bool leaf = true;
  Letter letter;
  std::shared_ptr<const BracketNode> left, right;
  int pairing = 0;  // (hdeg left, hdeg right)
  Word word;
};
using BracketPtr = std::shared_ptr<const BracketNode>;

// Product of q-bracketed Lyndon factors.
struct BracketExpr {
  std::vector<BracketPtr> factors;
};

BracketExpr bracket_vector(const CartanDatum& cd, const Word& w);
BracketExpr bracket_vector(const LoopLyndonTable& table, const Word& w);
BracketExpr bracket_product(const std::vector<BracketExpr>& parts);
std::string bracket_str(const BracketExpr& e);

// A linear combination of products of generators e_{i,d}; the product
// e_{x1} ... e_{xk} is keyed by the word x1 ... xk.
using LetterProducts = std::map<Word, QLaurent>;
LetterProducts expand_brackets(const CartanDatum& cd, const BracketExpr& e);
LetterSpan letter_span(const LetterProducts& p);

// Image of a combination of generator products, complete on the window
// (and restricted to words >= floor when given). Exact on any window.
LoopShuffleElement phi_letter_products(const CartanDatum& cd, const LetterProducts& p, const Window& window,
                                       const Word* floor = nullptr);
LoopShuffleElement phi_loop(const CartanDatum& cd, const BracketExpr& e, const Window& window);
FiniteShuffleElement phi_finite_products(const CartanDatum& cd, const LetterProducts& p);
FiniteShuffleElement phi_finite(const CartanDatum& cd, const BracketExpr& e);

// Lex-largest word with nonzero coefficient. For loop elements the stored
// window must contain the lead box of the letter span (or the element must
// be exact); otherwise TruncationError.
std::pair<Word, QRat> leading_word(const LoopShuffleElement& x);
std::pair<Word, QRat> leading_word(const FiniteShuffleElement& x);

bool is_standard(const LoopLyndonTable& table, const Word& w);
// Decides whether w is the leading word of some element in the span of the
// images of generator products with the colors of w and exponents in the
// letter window (default: exponents of w widened by one). Uses no Lyndon
// data.
bool good_word_linear_test(const CartanDatum& cd, const Word& w, std::optional<Window> letter_window = std::nullopt);

// Leading words of the span of the given rows, considering only columns
// >= stop (all columns when stop is null).
std::set<Word> span_leading_words(const std::vector<WordMap>& rows, const Word* stop = nullptr);

// All words with the given color multiset and exponents in the window
// summing to vdeg.
std::vector<Word> words_of_degree(const WordDegree& g, const Window& w);

// The finite image condition on a shuffle element (q-Serre sums of
// coefficients vanish for all distinct i, j and contexts).
bool satisfies_finite_image_condition(const CartanDatum& cd, const FiniteShuffleElement& x);

Report verify_serre_images(const CartanDatum& cd, int mode_bound);
Report verify_finite_leading_words(const CartanDatum& cd);
Report verify_loop_leading_words(const LoopLyndonTable& table, int dmin, int dmax);
Report verify_pbw_triangularity(const LoopLyndonTable& table, const WordDegree& degree, const Window& letter_window);

nlohmann::json element_to_json(const LoopShuffleElement& x);
nlohmann::json element_to_json(const FiniteShuffleElement& x);

}  // namespace lw
