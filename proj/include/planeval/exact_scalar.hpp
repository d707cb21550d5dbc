#pragma once

#include "planeval/arith.hpp"

#include <compare>
#include <utility>

namespace planeval {

// a + b*sqrt(d) with rational a, b and squarefree d >= 2; rational values
// are stored with b = 0 and d = 0. Arithmetic between two irrational
// values with different radicands throws MixedRadicals.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  ExactScalar(Integer a) : a_(std::move(a)) {}  // NOLINT
  // Brings d into squarefree form, folding square factors into b.
  ExactScalar(Rational a, Rational b, Integer d);

  static ExactScalar sqrt(const Integer& n);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  // Throws SchemaError when irrational.
  const Rational& rational() const;
  int sign() const;
  double to_double() const;

  ExactScalar operator-() const;
  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);
  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y);

 private:
  static Integer common_radicand(const ExactScalar& x, const ExactScalar& y);

  Rational a_;
  Rational b_;
  Integer d_;
};

// n = k^2 * d with d squarefree; returns (k, d). Exact for n < 2^60; larger
// inputs are reduced by all prime squares below 2^20.
std::pair<Integer, Integer> split_square(const Integer& n);

}  // namespace planeval
