#pragma once

#include <map>
#include <vector>

#include "json.hpp"
#include "loopword/qfield.hpp"
#include "loopword/report.hpp"
#include "loopword/rootsys.hpp"
#include "loopword/shuffle.hpp"
#include "loopword/words.hpp"

namespace lw {

constexpr int kDefaultProfileCap = 5;

// Laurent polynomial in the variables z_{i,a}, 1 <= a <= profile[i-1].
// Exponent vectors list the variables color by color: all of color 1, then
// color 2, and so on.
struct ColoredLaurentPoly {
  std::vector<int> profile;
  std::map<std::vector<int>, QRat> terms;

  int variables() const;
  // Position of z_{color, a} (a 0-based) in an exponent vector.
  int slot(int color, int a) const;
  int color_of_slot(int s) const;
  bool is_zero() const { return terms.empty(); }
  bool is_symmetric() const;
  friend bool operator==(const ColoredLaurentPoly&, const ColoredLaurentPoly&) = default;
};

// r / prod_{i < i'} prod_{a, a'} (z_{i a} - z_{i' a'}).
struct SymRatFunction {
  ColoredLaurentPoly numerator;
  // Throws PreconditionError unless homogeneous (the zero function has vdeg 0).
  WordDegree degree() const;
  friend bool operator==(const SymRatFunction&, const SymRatFunction&) = default;
};

SymRatFunction fo_unit(const CartanDatum& cd);
SymRatFunction fo_monomial(const CartanDatum& cd, int color, int d);
SymRatFunction fo_add(const SymRatFunction& f, const SymRatFunction& g, const QRat& c = QRat(1));
// Throws ConfigError when the result would exceed the profile cap.
SymRatFunction fo_mult(const CartanDatum& cd, const SymRatFunction& f, const SymRatFunction& g,
                       int profile_cap = kDefaultProfileCap);

struct WheelResult {
  bool applicable = false;
  bool vanishes = true;
  bool passed() const { return vanishes; }
};
WheelResult wheel_check(const CartanDatum& cd, const ColoredLaurentPoly& r, int i, int j);
// All ordered pairs of distinct colors; passes iff every applicable one vanishes.
bool wheel_conditions_hold(const CartanDatum& cd, const ColoredLaurentPoly& r);

// Image of e_{x1} ... e_{xk}, the word x1 ... xk listing the generators.
SymRatFunction upsilon_monomial(const CartanDatum& cd, const Word& letters, int profile_cap = kDefaultProfileCap);

// All coefficients of words with exponents in the window. Each coefficient
// is a finite constant-term computation, so every window is certified.
LoopShuffleElement iota(const CartanDatum& cd, const SymRatFunction& r, const Window& window);

// R * prod_{a<b} (z_a - z_b) in the positional variables of a color
// sequence; its coefficients are the alternating sums of the third image
// constraint.
std::map<std::vector<int>, QRat> positional_polynomial(const CartanDatum& cd, const SymRatFunction& r,
                                                       const std::vector<int>& colors);

Report verify_composition(const CartanDatum& cd, const Word& letters, const Window& window);
Report verify_image_constraints(const CartanDatum& cd, const SymRatFunction& r, const Window& window);

nlohmann::json to_json(const ColoredLaurentPoly& p);
nlohmann::json to_json(const SymRatFunction& f);
std::string fo_str(const SymRatFunction& f);

}  // namespace lw
