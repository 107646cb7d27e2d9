#include "loopword/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "loopword/errors.hpp"

namespace lw {

namespace {

// Symmetric form d_ij on simple roots; edges given 1-based with their value.
struct Diagram {
  std::vector<int> sym;
  std::vector<std::tuple<int, int, int>> edges;
};

Diagram diagram(char type, int n) {
  Diagram g;
  auto chain = [&](int from, int to, int value) {
    for (int i = from; i < to; ++i) g.edges.emplace_back(i, i + 1, value);
  };
  switch (type) {
    case 'A':
      if (n < 1) break;
      g.sym.assign(n, 1);
      chain(1, n, -1);
      return g;
    case 'B':
      if (n < 2) break;
      g.sym.assign(n, 2);
      g.sym[n - 1] = 1;
      chain(1, n, -2);
      return g;
    case 'C':
      if (n < 2) break;
      g.sym.assign(n, 1);
      g.sym[n - 1] = 2;
      chain(1, n - 1, -1);
      g.edges.emplace_back(n - 1, n, -2);
      return g;
    case 'D':
      if (n < 4) break;
      g.sym.assign(n, 1);
      chain(1, n - 2, -1);
      g.edges.emplace_back(n - 2, n - 1, -1);
      g.edges.emplace_back(n - 2, n, -1);
      return g;
    case 'E':
      if (n < 6 || n > 8) break;
      g.sym.assign(n, 1);
      g.edges.emplace_back(1, 3, -1);
      g.edges.emplace_back(2, 4, -1);
      chain(3, n, -1);
      return g;
    case 'F':
      if (n != 4) break;
      g.sym = {2, 2, 1, 1};
      g.edges = {{1, 2, -2}, {2, 3, -2}, {3, 4, -1}};
      return g;
    case 'G':
      if (n != 2) break;
      g.sym = {1, 3};
      g.edges = {{1, 2, -3}};
      return g;
    default:
      throw ConfigError(std::string("unknown Cartan type '") + type + "'");
  }
  throw ConfigError(std::string("invalid rank ") + std::to_string(n) + " for type " + type);
}

bool root_order(const Root& x, const Root& y) {
  int hx = height(x), hy = height(y);
  if (hx != hy) return hx < hy;
  return x > y;
}

}  // namespace

int CartanDatum::root_index(const Root& r) const {
  auto it = index.find(r);
  return it == index.end() ? -1 : it->second;
}

Root CartanDatum::simple_root(int i) const {
  Root r(n, 0);
  r[i - 1] = 1;
  return r;
}

CartanPtr build_cartan(char type, int rank) {
  if (type >= 'a' && type <= 'z') type = static_cast<char>(type - 'a' + 'A');
  Diagram g = diagram(type, rank);
  auto cd = std::make_shared<CartanDatum>();
  cd->type = type;
  cd->n = rank;
  cd->sym = g.sym;
  cd->d.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) cd->d[i][i] = 2 * g.sym[i];
  for (auto [i, j, v] : g.edges) cd->d[i - 1][j - 1] = cd->d[j - 1][i - 1] = v;
  cd->a.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (cd->d[i][j] % g.sym[i] != 0) throw ConsistencyError("non-integral Cartan entry");
      cd->a[i][j] = cd->d[i][j] / g.sym[i];
    }

  // Closure: alpha + alpha_i is a root iff p - <alpha, alpha_i^vee> > 0, where
  // p is the length of the alpha_i-string below alpha.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= rank; ++i) {
    Root s = cd->simple_root(i);
    seen.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      int p = 0;
      Root down = r;
      while (true) {
        down[i - 1] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - coroot_pairing(*cd, r, i) > 0) {
        Root up = r;
        up[i - 1] += 1;
        if (seen.insert(up).second) queue.push_back(up);
      }
    }
  }
  cd->roots.assign(seen.begin(), seen.end());
  std::sort(cd->roots.begin(), cd->roots.end(), root_order);
  for (size_t k = 0; k < cd->roots.size(); ++k) cd->index[cd->roots[k]] = static_cast<int>(k);
  cd->theta = cd->roots.back();
  return cd;
}

const std::vector<Root>& positive_roots(const CartanDatum& cd) { return cd.roots; }

int pairing(const CartanDatum& cd, const Root& x, const Root& y) {
  int s = 0;
  for (int i = 0; i < cd.n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < cd.n; ++j) s += x[i] * y[j] * cd.d[i][j];
  }
  return s;
}

int coroot_pairing(const CartanDatum& cd, const Root& x, int i) {
  int s = 0;
  for (int j = 0; j < cd.n; ++j) s += x[j] * cd.a[i - 1][j];
  return s;
}

Root reflect(const CartanDatum& cd, int i, const Root& x) {
  Root r = x;
  r[i - 1] -= coroot_pairing(cd, x, i);
  return r;
}

int height(const Root& x) {
  int h = 0;
  for (int k : x) h += k;
  return h;
}

const Root& highest_root(const CartanDatum& cd) { return cd.theta; }

Root two_rho(const CartanDatum& cd) {
  Root r(cd.n, 0);
  for (const auto& a : cd.roots) r = r + a;
  return r;
}

Coweight rho_vee(const CartanDatum& cd) { return Coweight{std::vector<int>(cd.n, 1)}; }

int coweight_pairing(const Root& x, const Coweight& mu) {
  int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * mu.coeffs[i];
  return s;
}

int length_pairing_2rho(const CartanDatum& cd, const Coweight& mu) {
  if (static_cast<int>(mu.coeffs.size()) != cd.n) throw PreconditionError("coweight has wrong rank");
  for (int m : mu.coeffs)
    if (m < 0) throw PreconditionError("coweight is not dominant");
  int s = 0;
  for (const auto& a : cd.roots) s += coweight_pairing(a, mu);
  return s;
}

Root operator+(const Root& x, const Root& y) {
  Root r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Root operator-(const Root& x, const Root& y) {
  Root r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Root operator-(const Root& x) {
  Root r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

bool is_zero_root(const Root& x) {
  return std::all_of(x.begin(), x.end(), [](int k) { return k == 0; });
}

std::string root_str(const Root& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

Root parse_root(const std::string& text, int rank) {
  Root r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      r.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw ConfigError("");
    } catch (const std::exception&) {
      throw ConfigError("malformed root coefficient list '" + text + "'");
    }
  }
  if (static_cast<int>(r.size()) != rank)
    throw ConfigError("root '" + text + "' needs " + std::to_string(rank) + " coefficients");
  return r;
}

nlohmann::json cartan_to_json(const CartanDatum& cd) {
  nlohmann::json j;
  j["type"] = std::string(1, cd.type);
  j["rank"] = cd.n;
  j["cartan"] = cd.a;
  j["symmetrized"] = cd.d;
  j["symmetrizers"] = cd.sym;
  j["theta"] = cd.theta;
  j["positive_roots"] = cd.roots;
  return j;
}

}  // namespace lw
