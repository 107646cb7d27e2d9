#pragma once

#include <vector>

#include "json.hpp"
#include "loopword/lyndon.hpp"
#include "loopword/report.hpp"
#include "loopword/rootsys.hpp"

namespace lw {

// (lambda, d) in Q x Z; lambda may have any signs.
struct AffineRoot {
  Root alpha;
  int d = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// Affine simple roots: index 0 is (-theta, 1), index i >= 1 is (alpha_i, 0).
AffineRoot affine_simple_root(const CartanDatum& cd, int i);
// Index of x among the affine simple roots, or -1.
int affine_simple_index(const CartanDatum& cd, const AffineRoot& x);
bool is_positive_affine_root(const CartanDatum& cd, const AffineRoot& x);
int affine_cartan(const CartanDatum& cd, int i, int j);

AffineRoot apply_simple(const CartanDatum& cd, int i, const AffineRoot& x);
AffineRoot apply_translation(const CartanDatum& cd, const Coweight& mu, const AffineRoot& x);

struct ReducedWordData {
  std::vector<int> tau;      // tau[i] for i in 0..n
  std::vector<int> indices;  // i_{1-l}, ..., i_0
  int l = 0;
  // i_k for any k, via i_{k+l} = tau(i_k).
  int index(long k) const;
};

ReducedWordData recover_reduced_word(const LoopLyndonTable& table);
// beta_k for k in [from, to], in increasing k.
std::vector<AffineRoot> beta_sequence(const CartanDatum& cd, const ReducedWordData& rw, long from, long to);
Report verify_weyl_order(const ReducedWordData& rw, const LoopLyndonTable& table, int count);

nlohmann::json reduced_word_to_json(const ReducedWordData& rw);
nlohmann::json affine_root_to_json(const AffineRoot& x);
std::string affine_root_str(const AffineRoot& x);

}  // namespace lw
