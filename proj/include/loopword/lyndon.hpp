#pragma once

#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "loopword/report.hpp"
#include "loopword/rootsys.hpp"
#include "loopword/words.hpp"

namespace lw {

struct LoopRootDegree {
  Root alpha;
  int d = 0;
  friend bool operator==(const LoopRootDegree&, const LoopRootDegree&) = default;
};

// l(alpha) for alpha in the positive roots, all exponents zero.
class FiniteLyndonTable {
 public:
  explicit FiniteLyndonTable(CartanPtr cd);
  const CartanDatum& cartan() const { return *cd_; }
  const Word& word(int root_index) const { return words_.at(root_index); }
  const Word& word(const Root& alpha) const;

 private:
  CartanPtr cd_;
  std::vector<Word> words_;
};

// l(alpha, d), stored on the fundamental domain 1 <= d <= |alpha| and
// extended to all d by shifting exponents.
class LoopLyndonTable {
 public:
  explicit LoopLyndonTable(CartanPtr cd);
  const CartanDatum& cartan() const { return *cd_; }
  CartanPtr cartan_ptr() const { return cd_; }
  Word word(int root_index, int d) const;
  Word word(const Root& alpha, int d) const;
  // fundamental()[k][d-1] = l(roots[k], d)
  const std::vector<std::vector<Word>>& fundamental() const { return fund_; }

 private:
  CartanPtr cd_;
  std::vector<std::vector<Word>> fund_;
};

// The recursion over all decompositions with |d_k| <= s |gamma_k|, with no
// periodicity or pruning. Slow; used to cross-check the fast table.
class WindowOracleTable {
 public:
  WindowOracleTable(CartanPtr cd, int s);
  int s() const { return s_; }
  // Requires |d| <= s |alpha|.
  const Word& word(int root_index, int d) const;

 private:
  CartanPtr cd_;
  int s_;
  std::vector<std::vector<Word>> words_;  // [k][d + s|alpha|]
};

Word finite_standard_lyndon(const FiniteLyndonTable& table, const Root& alpha);
Word loop_standard_lyndon(const LoopLyndonTable& table, const Root& alpha, int d);
// Order on loop roots: (a,d) < (b,e) iff l(a,-d) < l(b,-e).
int loop_order_compare(const LoopLyndonTable& table, const LoopRootDegree& x, const LoopRootDegree& y);

// Degree of a word as a loop root; throws DomainError if hdeg is not a
// positive root.
LoopRootDegree loop_degree(const CartanDatum& cd, const Word& w);

Report verify_convexity(const LoopLyndonTable& table, int height_bound, int vdeg_bound);
Report verify_exponent_bounds(const LoopLyndonTable& table, int window);
Report verify_monotone(const LoopLyndonTable& table, int window);
Report verify_periodicity(const LoopLyndonTable& table, int window);
// Loop table at d = 0 against the finite table.
Report verify_horizontal_match(const LoopLyndonTable& table);

struct CostandardSplit {
  LoopRootDegree first;
  LoopRootDegree second;
};
// Degrees of the costandard factors of l(alpha, d). Both factors are checked
// to be standard, and the split is checked to be minimal: there is no pair
// l1 < l1' < l2' < l2 of standard Lyndon words with the same total degree.
CostandardSplit minimal_costandard_split(const LoopLyndonTable& table, const Root& alpha, int d);

// Closed forms for classical types, 1 <= d <= |alpha|.
Word appendix_closed_form(const CartanDatum& cd, const Root& alpha, int d);
// All l(alpha, d) in the fundamental domain whose first letter is a^(1).
std::set<Word> emit_dictionary(const LoopLyndonTable& table, int a);
Report verify_closed_forms(const LoopLyndonTable& table);

nlohmann::json lyndon_entry_json(const Root& alpha, int d, const Word& w);

}  // namespace lw
