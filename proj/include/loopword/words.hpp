#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "loopword/rootsys.hpp"

namespace lw {

// The letter i^(d). Larger exponent means smaller letter; ties broken by
// color.
struct Letter {
  int color = 1;
  int exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& x, const Letter& y) {
    if (x.exp != y.exp) return y.exp <=> x.exp;
    return x.color <=> y.color;
  }
};

// std::vector's lexicographic comparison with the Letter order is exactly
// the word order (a proper prefix is smaller).
using Word = std::vector<Letter>;

struct WordDegree {
  Root hdeg;
  int vdeg = 0;
  friend bool operator==(const WordDegree&, const WordDegree&) = default;
};

int compare_lex(const Word& w, const Word& v);  // -1, 0, 1
bool is_lyndon(const Word& w);
std::pair<Word, Word> costandard_factorization(const Word& w);
std::vector<Word> canonical_factorization(const Word& w);
Word shift_exponents(const Word& w, int n);
Word concat(const Word& a, const Word& b);
WordDegree word_degree(const Word& w, int rank);

// Finite words with all exponents zero, from a list of colors.
Word finite_word(const std::vector<int>& colors);

// "2^(1) 1 2"; exponent 0 is suppressed. In latex mode exponent 1 becomes
// \underline{i} and other exponents i^{(d)}.
std::string render_word(const Word& w, bool latex = false);
Word parse_word(const std::string& text);
nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

}  // namespace lw
