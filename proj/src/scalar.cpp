/*
  This is scalar.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.
*/

#include "qlie/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qlie {

namespace {

void trim(LaurentZ& p) {
  std::size_t b = p.c.size();
  while (b > 0 && p.c[b - 1] == 0) --b;
  p.c.resize(b);
  std::size_t a = 0;
  while (a < p.c.size() && p.c[a] == 0) ++a;
  if (a == p.c.size()) {
    p.c.clear();
    p.lo = 0;
    return;
  }
  if (a > 0) {
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(a));
    p.lo += static_cast<long>(a);
  }
}

LaurentZ lz_const(const mpz_class& n) {
  LaurentZ p;
  if (n != 0) p.c.push_back(n);
  return p;
}

LaurentZ lz_add(const LaurentZ& x, const LaurentZ& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  long lo = std::min(x.lo, y.lo);
  long hi = std::max(x.hi(), y.hi());
  LaurentZ r;
  r.lo = lo;
  r.c.assign(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
  for (std::size_t k = 0; k < x.c.size(); ++k)
    r.c[static_cast<std::size_t>(x.lo - lo) + k] += x.c[k];
  for (std::size_t k = 0; k < y.c.size(); ++k)
    r.c[static_cast<std::size_t>(y.lo - lo) + k] += y.c[k];
  trim(r);
  return r;
}

LaurentZ lz_neg(LaurentZ p) {
  for (auto& z : p.c) z = -z;
  return p;
}

LaurentZ lz_mul(const LaurentZ& x, const LaurentZ& y) {
  if (x.is_zero() || y.is_zero()) return LaurentZ();
  LaurentZ r;
  r.lo = x.lo + y.lo;
  r.c.assign(x.c.size() + y.c.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (std::size_t j = 0; j < y.c.size(); ++j) r.c[i + j] += x.c[i] * y.c[j];
  }
  trim(r);
  return r;
}

mpz_class content(const std::vector<mpz_class>& c) {
  mpz_class g = 0;
  for (const auto& z : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 only for the zero polynomial
}

std::vector<mpz_class> divide_scalar(std::vector<mpz_class> c, const mpz_class& s) {
  for (auto& z : c) {
    mpz_class q_, r_;
    mpz_tdiv_qr(q_.get_mpz_t(), r_.get_mpz_t(), z.get_mpz_t(), s.get_mpz_t());
    z = q_;
  }
  return c;
}

std::size_t degree(const std::vector<mpz_class>& c) { return c.size() - 1; }

void poly_trim(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

/* Pseudo-remainder of a by b (degree-ascending coefficient vectors,
   b nonzero, deg a >= deg b). */
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a,
                                  const std::vector<mpz_class>& b) {
  const mpz_class& lb = b.back();
  long k = static_cast<long>(degree(a)) - static_cast<long>(degree(b));
  while (k >= 0 && !a.empty()) {
    mpz_class head = a.back();
    for (auto& z : a) z *= lb;
    // subtract head * q^k * b
    for (std::size_t j = 0; j < b.size(); ++j)
      a[static_cast<std::size_t>(k) + j] -= head * b[j];
    poly_trim(a);
    k = a.empty() ? -1
                  : static_cast<long>(degree(a)) - static_cast<long>(degree(b));
  }
  return a;
}

std::vector<mpz_class> primitive_part(std::vector<mpz_class> c) {
  mpz_class g = content(c);
  if (g > 1) c = divide_scalar(std::move(c), g);
  return c;
}

/* Primitive gcd of two nonzero integer polynomials, positive leading
   coefficient. */
std::vector<mpz_class> poly_gcd(std::vector<mpz_class> a,
                                std::vector<mpz_class> b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    std::vector<mpz_class> r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  if (a.back() < 0)
    for (auto& z : a) z = -z;
  return a;
}

/* Exact division of integer polynomials, valid when b | a in Q[q] and the
   quotient is known to be integral (Gauss). */
std::vector<mpz_class> poly_divexact(const std::vector<mpz_class>& a,
                                     const std::vector<mpz_class>& b) {
  std::vector<mpq_class> rem(a.begin(), a.end());
  std::vector<mpq_class> quot(a.size() - b.size() + 1, mpq_class(0));
  mpq_class lb(b.back());
  for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
    mpq_class h = rem[static_cast<std::size_t>(k) + b.size() - 1] / lb;
    quot[static_cast<std::size_t>(k)] = h;
    if (h != 0)
      for (std::size_t j = 0; j < b.size(); ++j)
        rem[static_cast<std::size_t>(k) + j] -= h * mpq_class(b[j]);
  }
  for (const auto& r : rem)
    if (r != 0) throw MathFault("poly_divexact: inexact division");
  std::vector<mpz_class> out;
  out.reserve(quot.size());
  for (const auto& c : quot) {
    if (c.get_den() != 1) throw MathFault("poly_divexact: non-integer quotient");
    out.push_back(c.get_num());
  }
  poly_trim(out);
  return out;
}

mpq_class poly_eval(const LaurentZ& p, const mpq_class& at) {
  // Horner on the polynomial part, then the Laurent shift.
  mpq_class acc(0);
  for (std::size_t k = p.c.size(); k-- > 0;) acc = acc * at + mpq_class(p.c[k]);
  if (p.lo > 0) {
    mpq_class pw(1);
    for (long i = 0; i < p.lo; ++i) pw *= at;
    acc *= pw;
  } else if (p.lo < 0) {
    if (at == 0) throw DomainError("eval: pole at q = 0");
    mpq_class pw(1);
    for (long i = 0; i < -p.lo; ++i) pw *= at;
    acc /= pw;
  }
  return acc;
}

}  // namespace

void QScalar::normalize() {
  trim(num_);
  trim(den_one_);
  if (den_one_.is_zero()) throw DomainError("scalar: zero denominator");
  if (num_.is_zero()) {
    den_one_ = lz_const(1);
    return;
  }
  // Move any pure q-power of the denominator into the numerator exponent.
  num_.lo -= den_one_.lo;
  den_one_.lo = 0;

  mpz_class cn = content(num_.c);
  mpz_class cd = content(den_one_.c);
  std::vector<mpz_class> pn = num_.c, pd = den_one_.c;
  if (cn > 1) pn = divide_scalar(std::move(pn), cn);
  if (cd > 1) pd = divide_scalar(std::move(pd), cd);
  if (degree(pd) > 0 || degree(pn) > 0) {
    std::vector<mpz_class> g = poly_gcd(pn, pd);
    if (degree(g) > 0) {
      pn = poly_divexact(pn, g);
      pd = poly_divexact(pd, g);
    }
  }
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  cn /= r;
  cd /= r;
  for (auto& z : pn) z *= cn;
  for (auto& z : pd) z *= cd;
  num_.c = std::move(pn);
  den_one_.c = std::move(pd);
  trim(num_);
  trim(den_one_);
  if (den_one_.c.back() < 0) {
    for (auto& z : den_one_.c) z = -z;
    for (auto& z : num_.c) z = -z;
  }
  // A cancelled q-power may reappear after trimming the denominator.
  if (den_one_.lo != 0) {
    num_.lo -= den_one_.lo;
    den_one_.lo = 0;
  }
}

QScalar QScalar::integer(long n) { return integer(mpz_class(n)); }

QScalar QScalar::integer(const mpz_class& n) {
  return QScalar(lz_const(n), lz_const(1));
}

QScalar QScalar::rational(const mpq_class& r) {
  mpq_class c(r);
  c.canonicalize();
  return QScalar(lz_const(c.get_num()), lz_const(c.get_den()));
}

QScalar QScalar::q_power(long e) {
  LaurentZ n;
  n.lo = e;
  n.c.push_back(1);
  return QScalar(std::move(n), lz_const(1));
}

QScalar QScalar::q_int(long n, long d) {
  if (n < 0) throw DomainError("q_int: negative n");
  if (d < 1) throw DomainError("q_int: d must be positive");
  if (n == 0) return zero();
  LaurentZ p;
  p.lo = -d * (n - 1);
  p.c.assign(static_cast<std::size_t>(2 * d * (n - 1) + 1), mpz_class(0));
  for (long k = 0; k < n; ++k) p.c[static_cast<std::size_t>(2 * d * k)] = 1;
  return QScalar(std::move(p), lz_const(1));
}

QScalar QScalar::q_factorial(long n, long d) {
  if (n < 0) throw DomainError("q_factorial: negative n");
  QScalar r = one();
  for (long k = 2; k <= n; ++k) r *= q_int(k, d);
  return r;
}

QScalar QScalar::q_binom(long n, long k, long d) {
  if (k < 0 || k > n) throw DomainError("q_binom: k out of range");
  return q_factorial(n, d) / (q_factorial(k, d) * q_factorial(n - k, d));
}

bool QScalar::is_one() const {
  return den_one_.c.size() == 1 && den_one_.c[0] == 1 && num_.lo == 0 &&
         num_.c.size() == 1 && num_.c[0] == 1;
}

bool QScalar::is_monomial() const {
  return !num_.is_zero() && num_.c.size() == 1 && den_one_.c.size() == 1 &&
         den_one_.c[0] == 1;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = lz_neg(r.num_);
  return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
  return QScalar(lz_add(lz_mul(num_, o.den_one_), lz_mul(o.num_, den_one_)),
                 lz_mul(den_one_, o.den_one_));
}

QScalar QScalar::operator-(const QScalar& o) const { return *this + (-o); }

QScalar QScalar::operator*(const QScalar& o) const {
  return QScalar(lz_mul(num_, o.num_), lz_mul(den_one_, o.den_one_));
}

QScalar QScalar::operator/(const QScalar& o) const {
  if (o.is_zero()) throw DomainError("scalar: division by zero");
  return QScalar(lz_mul(num_, o.den_one_), lz_mul(den_one_, o.num_));
}

mpq_class QScalar::eval(const mpq_class& at) const {
  if (is_zero()) return mpq_class(0);
  mpq_class d = poly_eval(den_one_, at);
  if (d == 0) throw DomainError("eval: pole at q = " + at.get_str());
  return poly_eval(num_, at) / d;
}

QScalar QScalar::bar() const {
  auto rev = [](const LaurentZ& p) {
    LaurentZ r;
    if (p.is_zero()) return r;
    r.lo = -p.hi();
    r.c.assign(p.c.rbegin(), p.c.rend());
    return r;
  };
  return QScalar(rev(num_), rev(den_one_));
}

namespace {

std::string monomial_str(const mpz_class& c, long e) {
  if (e == 0) return c.get_str();
  std::string base = (e == 1) ? "q" : "q^" + std::to_string(e);
  if (c == 1) return base;
  if (c == -1) return "-" + base;
  return c.get_str() + base;
}

/* Sum of monomials, highest power first; no outer parentheses. */
std::string sum_str(const LaurentZ& p, std::size_t* terms_out) {
  std::string s;
  std::size_t terms = 0;
  for (std::size_t k = p.c.size(); k-- > 0;) {
    if (p.c[k] == 0) continue;
    long e = p.lo + static_cast<long>(k);
    if (terms == 0) {
      s = monomial_str(p.c[k], e);
    } else if (p.c[k] < 0) {
      s += " - " + monomial_str(-p.c[k], e);
    } else {
      s += " + " + monomial_str(p.c[k], e);
    }
    ++terms;
  }
  if (terms_out) *terms_out = terms;
  return s;
}

}  // namespace

std::string QScalar::str() const {
  if (is_zero()) return "0";
  std::size_t nterms = 0;
  std::string ns = sum_str(num_, &nterms);
  if (nterms > 1) ns = "(" + ns + ")";
  if (den_one_.c.size() == 1) {
    if (den_one_.c[0] == 1) return ns;
    return ns + "/" + den_one_.c[0].get_str();
  }
  return ns + "/(" + sum_str(den_one_, nullptr) + ")";
}

/* ---------- parsing ---------- */

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw DomainError("scalar parse error at position " + std::to_string(i) +
                      ": " + why);
  }

  mpz_class read_int() {
    skip();
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    std::size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) fail("expected integer");
    mpz_class v(s.substr(i, k - i));
    i = k;
    return v;
  }

  long read_exponent() {
    mpz_class v = read_int();
    if (!v.fits_slong_p()) fail("exponent too large");
    return v.get_si();
  }

  QScalar power(QScalar base) {
    if (eat('^')) {
      long e = read_exponent();
      QScalar r = QScalar::one();
      QScalar b = (e < 0) ? QScalar::one() / base : base;
      for (long k = 0; k < std::labs(e); ++k) r *= b;
      return r;
    }
    return base;
  }

  QScalar atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    if (s[i] == '(') {
      ++i;
      QScalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return power(std::move(v));
    }
    if (s[i] == 'q') {
      ++i;
      return power(QScalar::q_power(1));
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      return power(QScalar::integer(read_int()));
    }
    fail("expected atom");
  }

  bool starts_atom() {
    skip();
    return i < s.size() &&
           (s[i] == '(' || s[i] == 'q' ||
            std::isdigit(static_cast<unsigned char>(s[i])));
  }

  QScalar term() {
    QScalar v = atom();
    for (;;) {
      if (eat('*')) {
        v *= atom();
      } else if (eat('/')) {
        v /= atom();
      } else if (starts_atom()) {
        v *= atom();  // implicit product, e.g. 2q^3
      } else {
        return v;
      }
    }
  }

  QScalar expr() {
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    QScalar v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
};

}  // namespace

QScalar QScalar::parse(const std::string& text) {
  Parser p(text);
  QScalar v = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace qlie
