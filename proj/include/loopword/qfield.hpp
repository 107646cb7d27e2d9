#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace lw {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Sparse Laurent polynomial in q with rational coefficients. Terms are kept
// sorted by exponent with no zero coefficients.
class QLaurent {
 public:
  using Term = std::pair<int, BigRational>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT(google-explicit-constructor)
  explicit QLaurent(const BigRational& c);

  static QLaurent monomial(int exponent, const BigRational& coeff = 1);
  // Accepts unsorted terms with repeats and zeros.
  static QLaurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exp() const;
  int max_exp() const;
  BigRational coeff(int exponent) const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  QLaurent shifted(int e) const;  // multiply by q^e
  QLaurent scaled(const BigRational& c) const;
  // q -> q^{-1}
  QLaurent bar() const;

  BigRational evaluate(const BigRational& q0) const;
  std::string str() const;

  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

// Exact quotient a/b if b divides a in Q[q, q^-1]; throws ArithmeticError
// otherwise (or if b = 0).
QLaurent exact_div(const QLaurent& a, const QLaurent& b);

// Monic-free gcd of the polynomial parts (q-power factors removed), scaled
// so that the constant term is 1.
QLaurent poly_gcd(const QLaurent& a, const QLaurent& b);

QLaurent parse_laurent(const std::string& text);

// Element of Q(q) in canonical form: num/den coprime, den a polynomial
// with den(0) = 1.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(const QLaurent& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QRat(const BigRational& c) : num_(c), den_(1) {}
  QRat(const QLaurent& n, const QLaurent& d);

  static QRat qpow(int e) { return QRat(QLaurent::monomial(e)); }

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }

  BigRational evaluate(const BigRational& q0) const;
  std::string str() const;

  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

 private:
  struct Raw {};
  // Caller guarantees num/den is already reduced with den normalized.
  QRat(QLaurent n, QLaurent d, Raw) : num_(std::move(n)), den_(std::move(d)) {
    if (num_.is_zero()) den_ = QLaurent(1);
  }
  QLaurent num_;
  QLaurent den_;
};

QRat parse_qrat(const std::string& text);

// Quantum integers and binomials in q_i = q^{di}.
QRat q_integer(int n, int di);
QRat q_binomial(int n, int k, int di);

}  // namespace lw
