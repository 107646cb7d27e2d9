#include "loopword/qfield.hpp"

#include <algorithm>
#include <cctype>

#include "loopword/errors.hpp"

namespace lw {

namespace {

// Dense polynomial helpers, ascending coefficients.
using DenseQ = std::vector<BigRational>;
using DenseZ = std::vector<BigInt>;

template <class V>
void trim(V& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Splits a nonzero Laurent polynomial into q^shift * P(q) with P(0) != 0.
DenseQ to_dense(const QLaurent& a, int& shift) {
  shift = a.min_exp();
  DenseQ p(a.max_exp() - shift + 1);
  for (const auto& [e, c] : a.terms()) p[e - shift] = c;
  return p;
}

QLaurent from_dense(const DenseQ& p, int shift) {
  std::vector<QLaurent::Term> t;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) t.emplace_back(static_cast<int>(i) + shift, p[i]);
  return QLaurent::from_terms(std::move(t));
}

DenseZ clear_denominators(const DenseQ& p) {
  BigInt l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  DenseZ out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[i].get_num() * (l / p[i].get_den());
  return out;
}

void make_primitive(DenseZ& p) {
  BigInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero).
DenseZ pseudo_rem(DenseZ a, const DenseZ& b) {
  const size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    BigInt la = a.back();
    size_t off = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i <= db; ++i) a[off + i] -= la * b[i];
    trim(a);
  }
  return a;
}

DenseZ gcd_primitive(DenseZ a, DenseZ b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.size() <= 1) return DenseZ{1};
    DenseZ r = pseudo_rem(a, b);
    if (r.empty()) return b;
    if (r.size() == 1) return DenseZ{1};
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
}

// Exact division of dense polynomials; returns false if there is a remainder.
bool dense_div(DenseQ a, const DenseQ& b, DenseQ& quot) {
  trim(a);
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    quot.clear();
    return a.empty();
  }
  quot.assign(a.size() - db, 0);
  for (size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    BigRational c = a[k] / b.back();
    quot[k - db] = c;
    for (size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  trim(a);
  return a.empty();
}

}  // namespace

// ---------------------------------------------------------------- QLaurent

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, BigRational(c));
}

QLaurent::QLaurent(const BigRational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

QLaurent QLaurent::monomial(int exponent, const BigRational& coeff) {
  QLaurent r;
  if (coeff != 0) r.terms_.emplace_back(exponent, coeff);
  return r;
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  QLaurent r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (t.second != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool QLaurent::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

int QLaurent::min_exp() const {
  if (terms_.empty()) throw PreconditionError("min_exp of zero Laurent polynomial");
  return terms_.front().first;
}

int QLaurent::max_exp() const {
  if (terms_.empty()) throw PreconditionError("max_exp of zero Laurent polynomial");
  return terms_.back().first;
}

BigRational QLaurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      BigRational s = terms_[i].second + o.terms_[j].second;
      if (s != 0) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() || b.is_zero()) return QLaurent();
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  std::vector<QLaurent::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) t.emplace_back(ea + eb, ca * cb);
  return QLaurent::from_terms(std::move(t));
}

QLaurent QLaurent::shifted(int e) const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.first += e;
  return r;
}

QLaurent QLaurent::scaled(const BigRational& c) const {
  if (c == 0) return QLaurent();
  QLaurent r = *this;
  if (c == 1) return r;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

QLaurent QLaurent::bar() const {
  QLaurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

BigRational QLaurent::evaluate(const BigRational& q0) const {
  if (terms_.empty()) return 0;
  if (q0 == 0) {
    if (terms_.front().first < 0) throw ArithmeticError("negative power of q evaluated at q = 0");
    return coeff(0);
  }
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) {
    BigRational p = 1;
    mpz_pow_ui(p.get_num_mpz_t(), q0.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(p.get_den_mpz_t(), q0.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    p.canonicalize();
    if (e < 0) p = 1 / p;
    sum += c * p;
  }
  return sum;
}

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    BigRational mag = neg ? BigRational(-c) : c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    bool unit = mag == 1;
    if (e == 0) {
      s += mag.get_str();
      continue;
    }
    if (!unit) s += mag.get_str() + "*";
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

QLaurent exact_div(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  if (a.is_zero()) return QLaurent();
  if (b.is_monomial()) return a.shifted(-b.min_exp()).scaled(1 / b.terms()[0].second);
  int sa = 0, sb = 0;
  DenseQ pa = to_dense(a, sa), pb = to_dense(b, sb), quot;
  if (!dense_div(pa, pb, quot)) throw ArithmeticError("inexact Laurent division");
  return from_dense(quot, sa - sb);
}

QLaurent poly_gcd(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() && b.is_zero()) return QLaurent();
  if (a.is_zero() || b.is_zero()) {
    const QLaurent& x = a.is_zero() ? b : a;
    int s = 0;
    DenseQ p = to_dense(x, s);
    BigRational c = p.front();
    for (auto& v : p) v /= c;
    return from_dense(p, 0);
  }
  if (a.is_monomial() || b.is_monomial()) return QLaurent(1);
  int sa = 0, sb = 0;
  DenseZ g = gcd_primitive(clear_denominators(to_dense(a, sa)), clear_denominators(to_dense(b, sb)));
  DenseQ gq(g.size());
  for (size_t i = 0; i < g.size(); ++i) gq[i] = BigRational(g[i]) / BigRational(g.front());
  return from_dense(gq, 0);
}

// -------------------------------------------------------------------- QRat

QRat::QRat(const QLaurent& n, const QLaurent& d) {
  if (d.is_zero()) throw ArithmeticError("division by zero");
  if (n.is_zero()) {
    num_ = QLaurent();
    den_ = QLaurent(1);
    return;
  }
  if (d.is_monomial()) {
    num_ = n.shifted(-d.min_exp()).scaled(1 / d.terms()[0].second);
    den_ = QLaurent(1);
    return;
  }
  int sn = 0, sd = 0;
  DenseQ pn = to_dense(n, sn), pd = to_dense(d, sd);
  if (pn.size() > 1) {
    DenseZ g = gcd_primitive(clear_denominators(pn), clear_denominators(pd));
    if (g.size() > 1) {
      DenseQ gq(g.begin(), g.end()), qn, qd;
      if (!dense_div(pn, gq, qn) || !dense_div(pd, gq, qd)) throw ConsistencyError("gcd does not divide");
      pn = std::move(qn);
      pd = std::move(qd);
    }
  }
  BigRational c = pd.front();
  for (auto& v : pn) v /= c;
  for (auto& v : pd) v /= c;
  num_ = from_dense(pn, sn - sd);
  den_ = from_dense(pd, 0);
}

QRat QRat::operator-() const { return QRat(-num_, den_, Raw{}); }

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_laurent() && b.is_laurent()) return QRat(a.num_ + b.num_, QLaurent(1), QRat::Raw{});
  if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
  // gcd(n + m*d, d) = gcd(n, d) = 1, so no reduction is needed here.
  if (b.is_laurent()) return QRat(a.num_ + b.num_ * a.den_, a.den_, QRat::Raw{});
  if (a.is_laurent()) return QRat(a.num_ * b.den_ + b.num_, b.den_, QRat::Raw{});
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return QRat();
  if (a.is_laurent() && b.is_laurent()) return QRat(a.num_ * b.num_, QLaurent(1), QRat::Raw{});
  if (b.num_.is_monomial() && b.is_laurent()) return QRat(a.num_ * b.num_, a.den_, QRat::Raw{});
  if (a.num_.is_monomial() && a.is_laurent()) return QRat(a.num_ * b.num_, b.den_, QRat::Raw{});
  return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  if (a.is_zero()) return QRat();
  if (b.is_laurent() && b.num_.is_monomial()) {
    const auto& [e, c] = b.num_.terms()[0];
    return QRat(a.num_.shifted(-e).scaled(1 / c), a.den_, QRat::Raw{});
  }
  return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

BigRational QRat::evaluate(const BigRational& q0) const {
  BigRational d = den_.evaluate(q0);
  if (d == 0) throw ArithmeticError("pole at q = " + q0.get_str());
  return num_.evaluate(q0) / d;
}

std::string QRat::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QRat q_integer(int n, int di) {
  // [n]_i = (q_i^n - q_i^-n)/(q_i - q_i^-1) = q_i^{n-1} + q_i^{n-3} + ... + q_i^{1-n}
  if (n < 0) return -q_integer(-n, di);
  std::vector<QLaurent::Term> t;
  for (int k = 0; k < n; ++k) t.emplace_back(di * (n - 1 - 2 * k), BigRational(1));
  return QRat(QLaurent::from_terms(std::move(t)));
}

QRat q_binomial(int n, int k, int di) {
  if (k < 0 || k > n) return QRat();
  QRat num(1), den(1);
  for (int t = 0; t < k; ++t) {
    num *= q_integer(n - t, di);
    den *= q_integer(t + 1, di);
  }
  return num / den;
}

// ----------------------------------------------------------------- parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  bool at_end() {
    skip();
    return pos == s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + s + "' at position " + std::to_string(pos) + ": " + what);
  }
  std::string digits() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  }
};

QLaurent parse_term(Cursor& c) {
  BigRational coeff = 1;
  bool have_coeff = false;
  c.skip();
  if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    std::string num = c.digits();
    std::string den = "1";
    // A slash here belongs to the coefficient only if digits follow.
    size_t save = c.pos;
    if (c.eat('/')) {
      c.skip();
      if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        den = c.digits();
      else
        c.pos = save;
    }
    coeff = BigRational(BigInt(num), BigInt(den));
    coeff.canonicalize();
    have_coeff = true;
    if (!c.eat('*')) return QLaurent::monomial(0, coeff);
  }
  if (!c.eat('q')) {
    if (have_coeff) c.fail("expected q after '*'");
    c.fail("expected a term");
  }
  int e = 1;
  if (c.eat('^')) {
    bool neg = c.eat('-');
    if (!neg) c.eat('+');
    e = std::stoi(c.digits());
    if (neg) e = -e;
  }
  return QLaurent::monomial(e, coeff);
}

QLaurent parse_sum(Cursor& c) {
  QLaurent acc;
  bool neg = false;
  if (c.eat('-'))
    neg = true;
  else
    c.eat('+');
  QLaurent t = parse_term(c);
  acc += neg ? -t : t;
  while (true) {
    if (c.eat('+')) {
      acc += parse_term(c);
    } else if (c.eat('-')) {
      acc -= parse_term(c);
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

QLaurent parse_laurent(const std::string& text) {
  Cursor c{text};
  QLaurent r = parse_sum(c);
  if (!c.at_end()) c.fail("trailing input");
  return r;
}

namespace {

// expr := ['+'|'-'] prod (('+'|'-') prod)*, prod := atom (('*'|'/') atom)*,
// atom := integer | q['^' integer] | '(' expr ')'
QRat parse_expr(Cursor& c);

QRat parse_atom(Cursor& c) {
  c.skip();
  if (c.eat('(')) {
    QRat r = parse_expr(c);
    if (!c.eat(')')) c.fail("expected ')'");
    return r;
  }
  if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
    return QRat(BigRational(BigInt(c.digits())));
  if (!c.eat('q')) c.fail("expected a term");
  int e = 1;
  if (c.eat('^')) {
    bool neg = c.eat('-');
    if (!neg) c.eat('+');
    e = std::stoi(c.digits());
    if (neg) e = -e;
  }
  return QRat::qpow(e);
}

QRat parse_prod(Cursor& c) {
  QRat acc = parse_atom(c);
  while (true) {
    if (c.eat('*'))
      acc *= parse_atom(c);
    else if (c.eat('/'))
      acc /= parse_atom(c);
    else
      return acc;
  }
}

QRat parse_expr(Cursor& c) {
  bool neg = c.eat('-');
  if (!neg) c.eat('+');
  QRat acc = parse_prod(c);
  if (neg) acc = -acc;
  while (true) {
    if (c.eat('+'))
      acc += parse_prod(c);
    else if (c.eat('-'))
      acc -= parse_prod(c);
    else
      return acc;
  }
}

}  // namespace

QRat parse_qrat(const std::string& text) {
  Cursor c{text};
  QRat r = parse_expr(c);
  if (!c.at_end()) c.fail("trailing input");
  return r;
}

}  // namespace lw
