#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace lw {

// Coefficients over the simple roots; slot k holds the coefficient of
// alpha_{k+1}.
using Root = std::vector<int>;

// Coefficients over the fundamental coweights; (alpha_j, omega_i^vee) = delta_ij.
struct Coweight {
  std::vector<int> coeffs;
};

struct CartanDatum {
  char type = 'A';
  int n = 0;
  // Matrices are stored 0-based; the accessors below take colors 1..n.
  std::vector<std::vector<int>> a;
  std::vector<std::vector<int>> d;
  std::vector<int> sym;  // d_i, with (alpha_i, alpha_i) = 2 d_i
  Root theta;
  std::vector<Root> roots;  // positive roots, by height then descending lex
  std::map<Root, int> index;

  int rank() const { return n; }
  int aij(int i, int j) const { return a[i - 1][j - 1]; }
  int dij(int i, int j) const { return d[i - 1][j - 1]; }
  int di(int i) const { return sym[i - 1]; }
  std::string name() const { return std::string(1, type) + std::to_string(n); }

  // -1 if r is not a positive root.
  int root_index(const Root& r) const;
  bool is_positive_root(const Root& r) const { return root_index(r) >= 0; }
  Root simple_root(int i) const;
};

using CartanPtr = std::shared_ptr<const CartanDatum>;

// Throws ConfigError for invalid (type, rank).
CartanPtr build_cartan(char type, int rank);

const std::vector<Root>& positive_roots(const CartanDatum& cd);
int pairing(const CartanDatum& cd, const Root& x, const Root& y);
// <x, alpha_i^vee> for color i.
int coroot_pairing(const CartanDatum& cd, const Root& x, int i);
// s_i(x) for color i.
Root reflect(const CartanDatum& cd, int i, const Root& x);
int height(const Root& x);
const Root& highest_root(const CartanDatum& cd);
// 2 rho, the sum of the positive roots, in simple-root coordinates.
Root two_rho(const CartanDatum& cd);
Coweight rho_vee(const CartanDatum& cd);
int coweight_pairing(const Root& x, const Coweight& mu);
// sum over positive roots of (alpha, mu); requires mu dominant.
int length_pairing_2rho(const CartanDatum& cd, const Coweight& mu);

Root operator+(const Root& x, const Root& y);
Root operator-(const Root& x, const Root& y);
Root operator-(const Root& x);
bool is_zero_root(const Root& x);
std::string root_str(const Root& x);
// Parses "1,2,0" style coefficient lists.
Root parse_root(const std::string& text, int rank);

nlohmann::json cartan_to_json(const CartanDatum& cd);

}  // namespace lw
