/*
  This is scalar.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  Exact scalars for quantum-algebra computations: the field Q(q), with
  elements kept in a canonical fraction form

      (integer Laurent polynomial) / (integer polynomial),

  where the denominator has nonzero constant term, positive leading
  coefficient, is coprime to the numerator in Q[q], and shares no integer
  content with it.  Equality is therefore representation equality.
*/

#ifndef QLIE_SCALAR_HPP
#define QLIE_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qlie/common.hpp"

namespace qlie {

/* Dense integer Laurent polynomial: c[k] is the coefficient of q^(lo+k).
   Zero is represented by an empty coefficient vector; otherwise the first
   and last coefficients are nonzero. */
struct LaurentZ {
  long lo = 0;
  std::vector<mpz_class> c;

  bool is_zero() const { return c.empty(); }
  long hi() const { return lo + static_cast<long>(c.size()) - 1; }
  bool operator==(const LaurentZ&) const = default;
};

class QScalar {
 public:
  QScalar() { den_one_.c.push_back(1); }  // zero

  static QScalar zero() { return QScalar(); }
  static QScalar one() { return integer(1); }
  static QScalar integer(long n);
  static QScalar integer(const mpz_class& n);
  static QScalar rational(const mpq_class& r);
  static QScalar q_power(long e);  // q^e

  /* [n]_{q^d} = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}; requires n >= 0. */
  static QScalar q_int(long n, long d = 1);
  static QScalar q_factorial(long n, long d = 1);
  static QScalar q_binom(long n, long k, long d = 1);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /* True when the canonical form is c*q^e for a single integer c != 0. */
  bool is_monomial() const;

  QScalar operator-() const;
  QScalar operator+(const QScalar&) const;
  QScalar operator-(const QScalar&) const;
  QScalar operator*(const QScalar&) const;
  QScalar operator/(const QScalar&) const;  // throws DomainError on zero divisor
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }
  bool operator==(const QScalar&) const = default;
  bool operator!=(const QScalar&) const = default;

  /* Exact evaluation at a rational point; throws DomainError at a pole
     (including q = 0 when negative powers of q are present). */
  mpq_class eval(const mpq_class& at) const;

  /* Substitute q -> q^(-1). */
  QScalar bar() const;

  std::string str() const;
  static QScalar parse(const std::string& text);

  const LaurentZ& num() const { return num_; }
  const LaurentZ& den() const { return den_one_; }

 private:
  QScalar(LaurentZ n, LaurentZ d) : num_(std::move(n)), den_one_(std::move(d)) {
    normalize();
  }
  void normalize();

  LaurentZ num_;
  LaurentZ den_one_;  // lo == 0 always; equals 1 for Laurent polynomials
};

inline QScalar operator*(long n, const QScalar& s) {
  return QScalar::integer(n) * s;
}

}  // namespace qlie

#endif
