#include "loopword/words.hpp"

#include <sstream>

#include "loopword/errors.hpp"

namespace lw {

int compare_lex(const Word& w, const Word& v) {
  if (w < v) return -1;
  if (v < w) return 1;
  return 0;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw PreconditionError("Lyndon test on the empty word");
  for (size_t k = 1; k < w.size(); ++k)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + k, w.end())) return false;
  return true;
}

std::pair<Word, Word> costandard_factorization(const Word& w) {
  if (w.size() < 2) throw PreconditionError("costandard factorization needs at least two letters");
  if (!is_lyndon(w)) throw PreconditionError("costandard factorization of a non-Lyndon word");
  for (size_t k = 1; k < w.size(); ++k) {
    Word suffix(w.begin() + k, w.end());
    if (is_lyndon(suffix)) return {Word(w.begin(), w.begin() + k), suffix};
  }
  throw ConsistencyError("Lyndon word without a Lyndon suffix");
}

// Duval's algorithm; only the Letter comparator is used.
std::vector<Word> canonical_factorization(const Word& w) {
  std::vector<Word> out;
  size_t i = 0;
  const size_t n = w.size();
  while (i < n) {
    size_t j = i + 1, k = i;
    while (j < n && !(w[j] < w[k])) {
      if (w[k] < w[j])
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + i, w.begin() + i + (j - k));
      i += j - k;
    }
  }
  return out;
}

Word shift_exponents(const Word& w, int n) {
  Word r = w;
  for (auto& l : r) l.exp += n;
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

WordDegree word_degree(const Word& w, int rank) {
  WordDegree g{Root(rank, 0), 0};
  for (const auto& l : w) {
    g.hdeg[l.color - 1] += 1;
    g.vdeg += l.exp;
  }
  return g;
}

Word finite_word(const std::vector<int>& colors) {
  Word w;
  for (int c : colors) w.push_back({c, 0});
  return w;
}

std::string render_word(const Word& w, bool latex) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += " ";
    const auto& l = w[k];
    std::string c = std::to_string(l.color);
    if (l.exp == 0)
      s += c;
    else if (latex && l.exp == 1)
      s += "\\underline{" + c + "}";
    else if (latex)
      s += c + "^{(" + std::to_string(l.exp) + ")}";
    else
      s += c + "^(" + std::to_string(l.exp) + ")";
  }
  return s;
}

Word parse_word(const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    Letter l;
    try {
      size_t used = 0;
      l.color = std::stoi(tok, &used);
      if (used != tok.size()) {
        if (tok.compare(used, 2, "^(") != 0 || tok.back() != ')') throw ParseError("");
        std::string e = tok.substr(used + 2, tok.size() - used - 3);
        size_t eu = 0;
        l.exp = std::stoi(e, &eu);
        if (eu != e.size()) throw ParseError("");
      }
    } catch (const std::exception&) {
      throw ParseError("malformed letter '" + tok + "'");
    }
    if (l.color < 1) throw ParseError("colors start at 1: '" + tok + "'");
    w.push_back(l);
  }
  return w;
}

nlohmann::json word_to_json(const Word& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& l : w) j.push_back({l.color, l.exp});
  return j;
}

Word word_from_json(const nlohmann::json& j) {
  Word w;
  for (const auto& p : j) w.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  return w;
}

}  // namespace lw
