/*
  This is test_scalar.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.
*/

#include <catch2/catch_amalgamated.hpp>

#include "qlie/scalar.hpp"

using qlie::DomainError;
using qlie::QScalar;

namespace {

std::vector<QScalar> stock() {
  return {
      QScalar::zero(),
      QScalar::one(),
      QScalar::integer(-1),
      QScalar::integer(7),
      QScalar::q_power(1),
      QScalar::q_power(-2),
      QScalar::q_int(2),
      QScalar::q_int(3),
      QScalar::q_int(2, 3),
      QScalar::rational(mpq_class(1, 2)),
      QScalar::parse("(q - 1)/(q + 1)"),
      QScalar::parse("q^3/3 - q^-3"),
  };
}

}  // namespace

TEST_CASE("scalar ring laws") {
  auto xs = stock();
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == QScalar::zero());
      if (!b.is_zero()) CHECK((a / b) * b == a);
      for (const auto& c : xs) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  CHECK(QScalar::one() / QScalar::q_power(5) == QScalar::q_power(-5));
  CHECK_THROWS_AS(QScalar::one() / QScalar::zero(), DomainError);
}

TEST_CASE("q-integers and their factorials") {
  CHECK(QScalar::q_int(0) == QScalar::zero());
  CHECK(QScalar::q_int(1) == QScalar::one());
  CHECK(QScalar::q_int(2) == QScalar::parse("q + q^-1"));
  CHECK(QScalar::q_int(3) == QScalar::parse("q^2 + 1 + q^-2"));
  CHECK(QScalar::q_int(2, 3) == QScalar::parse("q^3 + q^-3"));
  CHECK(QScalar::q_int(3, 2) == QScalar::parse("q^4 + 1 + q^-4"));

  // [n] specializes to n at q = 1, for every symmetrization in use.
  for (long d = 1; d <= 3; ++d)
    for (long n = 0; n <= 20; ++n)
      CHECK(QScalar::q_int(n, d).eval(1) == mpq_class(n));

  CHECK(QScalar::q_factorial(3) == QScalar::q_int(3) * QScalar::q_int(2));
  CHECK(QScalar::q_factorial(0) == QScalar::one());

  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      QScalar b = QScalar::q_binom(n, k, 2);
      CHECK(b == QScalar::q_binom(n, n - k, 2));
      CHECK(b * QScalar::q_factorial(k, 2) * QScalar::q_factorial(n - k, 2) ==
            QScalar::q_factorial(n, 2));
      // Gaussian binomials are Laurent polynomials, never proper fractions.
      CHECK(b.den().c.size() == 1);
    }

  // Pascal rule with q-weights: [n choose k] = q^k [n-1 ch k] + q^(k-n) [n-1 ch k-1].
  for (long n = 1; n <= 6; ++n)
    for (long k = 1; k < n; ++k)
      CHECK(QScalar::q_binom(n, k) ==
            QScalar::q_power(k) * QScalar::q_binom(n - 1, k) +
                QScalar::q_power(k - n) * QScalar::q_binom(n - 1, k - 1));

  CHECK_THROWS_AS(QScalar::q_int(-1), DomainError);
  CHECK_THROWS_AS(QScalar::q_binom(3, 4), DomainError);
}

TEST_CASE("evaluation at rational points") {
  CHECK(QScalar::parse("q + q^-1").eval(1) == 2);
  CHECK(QScalar::q_int(3).eval(1) == 3);
  CHECK(QScalar::parse("(q^4 - 1)/(q - 1)").eval(2) == 15);
  CHECK(QScalar::parse("(q - 1)/(q + 1)").eval(mpq_class(1, 2)) ==
        mpq_class(-1, 3));
  CHECK(QScalar::zero().eval(5) == 0);
  CHECK_THROWS_AS(QScalar::parse("1/(q - 1)").eval(1), DomainError);
  CHECK_THROWS_AS(QScalar::q_power(-1).eval(0), DomainError);
}

TEST_CASE("canonical form and cancellation") {
  CHECK(QScalar::parse("(q^3 - q)/(q^2 - 1)") == QScalar::q_power(1));
  CHECK(QScalar::parse("(2q^2 + 2)/4") == QScalar::parse("(q^2 + 1)/2"));
  CHECK(QScalar::parse("(q^2 - 1)/(q + 1)") == QScalar::parse("q - 1"));
  CHECK(QScalar::parse("(q^2 - 2 + q^-2)/(q - q^-1)") ==
        QScalar::parse("q - q^-1"));
  CHECK(QScalar::rational(mpq_class(2, 4)) == QScalar::rational(mpq_class(1, 2)));
  // Denominators keep a nonzero constant term; stray q-powers move upstairs.
  CHECK(QScalar::parse("1/(q^2 + q)") == QScalar::parse("q^-1/(q + 1)"));
  CHECK(QScalar::parse("1/(q^2 + q)").den().lo == 0);
  // Sign normalization: the denominator leads with a positive coefficient.
  CHECK(QScalar::parse("1/(1 - q)").str() == "-1/(q - 1)");
}

TEST_CASE("printing") {
  CHECK(QScalar::zero().str() == "0");
  CHECK(QScalar::one().str() == "1");
  CHECK(QScalar::integer(-3).str() == "-3");
  CHECK(QScalar::q_power(1).str() == "q");
  CHECK(QScalar::q_power(-1).str() == "q^-1");
  CHECK((2 * QScalar::q_power(3)).str() == "2q^3");
  CHECK((-2 * QScalar::q_power(3)).str() == "-2q^3");
  CHECK((QScalar::q_power(1) / QScalar::integer(2)).str() == "q/2");
  CHECK(QScalar::q_int(3).str() == "(q^2 + 1 + q^-2)");
  CHECK(QScalar::parse("q-q^-1").str() == "(q - q^-1)");
  CHECK((QScalar::one() / QScalar::parse("q+1")).str() == "1/(q + 1)");
  CHECK(QScalar::rational(mpq_class(-1, 2)).str() == "-1/2");
}

TEST_CASE("parsing") {
  CHECK(QScalar::parse("2q^3") == 2 * QScalar::q_power(3));
  CHECK(QScalar::parse("  - q^-2 ") == -QScalar::q_power(-2));
  CHECK(QScalar::parse("q^2(q + 1)") == QScalar::parse("q^3 + q^2"));
  CHECK(QScalar::parse("(q - q^-1)^2") == QScalar::parse("q^2 - 2 + q^-2"));
  CHECK(QScalar::parse("(q + 1)^-1") == QScalar::one() / QScalar::parse("q + 1"));
  CHECK(QScalar::parse("3*q/2") == QScalar::parse("3q/2"));
  CHECK(QScalar::parse("+q") == QScalar::q_power(1));

  for (const auto& x : stock()) CHECK(QScalar::parse(x.str()) == x);

  CHECK_THROWS_AS(QScalar::parse(""), DomainError);
  CHECK_THROWS_AS(QScalar::parse("q +"), DomainError);
  CHECK_THROWS_AS(QScalar::parse("(q"), DomainError);
  CHECK_THROWS_AS(QScalar::parse("q)"), DomainError);
  CHECK_THROWS_AS(QScalar::parse("x"), DomainError);
  CHECK_THROWS_AS(QScalar::parse("1/0"), DomainError);
}

TEST_CASE("bar involution") {
  CHECK(QScalar::q_power(3).bar() == QScalar::q_power(-3));
  CHECK(QScalar::q_int(5).bar() == QScalar::q_int(5));
  CHECK(QScalar::q_binom(5, 2).bar() == QScalar::q_binom(5, 2));
  CHECK(QScalar::parse("(q - 1)/(q + 1)").bar() ==
        QScalar::parse("-(q - 1)/(q + 1)"));
  for (const auto& x : stock()) {
    CHECK(x.bar().bar() == x);
    if (!x.is_zero()) CHECK(x.bar().eval(2) == x.eval(mpq_class(1, 2)));
  }
}

TEST_CASE("monomial predicates") {
  CHECK(QScalar::q_power(2).is_monomial());
  CHECK(QScalar::integer(3).is_monomial());
  CHECK((2 * QScalar::q_power(-1)).is_monomial());
  CHECK_FALSE(QScalar::zero().is_monomial());
  CHECK_FALSE(QScalar::q_int(2).is_monomial());
  CHECK_FALSE(QScalar::rational(mpq_class(1, 2)).is_monomial());
  CHECK(QScalar::one().is_one());
  CHECK_FALSE(QScalar::q_power(1).is_one());
}
