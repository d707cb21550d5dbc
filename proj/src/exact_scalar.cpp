#include "planeval/exact_scalar.hpp"

#include "planeval/error.hpp"

#include <cmath>

namespace planeval {

std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::SchemaError, "square root of a negative integer");
  if (n == 0) return {0, 0};
  Integer rest = n, k = 1;
  auto strip = [&](unsigned long p) {
    Integer pp = Integer(p) * p;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t())) {
      rest /= pp;
      k *= p;
    }
  };
  strip(2);
  for (unsigned long p = 3; p < (1UL << 20); p += 2) {
    if (Integer(p) * p > rest) break;
    strip(p);
  }
  // Remaining prime factors exceed 2^20; below 2^60 at most two remain.
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    k *= root;
    rest = 1;
  }
  return {k, rest};
}

ExactScalar::ExactScalar(Rational a, Rational b, Integer d) : a_(std::move(a)) {
  a_.canonicalize();
  b.canonicalize();
  if (d < 0) throw Error(ErrorCode::SchemaError, "negative radicand");
  if (b == 0 || d == 0) return;
  auto [k, free] = split_square(d);
  b *= k;
  if (free == 1) {
    a_ += b;
    a_.canonicalize();
    return;
  }
  b_ = std::move(b);
  d_ = std::move(free);
}

ExactScalar ExactScalar::sqrt(const Integer& n) { return ExactScalar(0, 1, n); }

const Rational& ExactScalar::rational() const {
  if (!is_rational()) throw Error(ErrorCode::SchemaError, "value is irrational");
  return a_;
}

int ExactScalar::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 d decides.
  Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

double ExactScalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

Integer ExactScalar::common_radicand(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational() || x.d_ == y.d_) return x.d_;
  throw Error(ErrorCode::MixedRadicals, "cannot combine sqrt(" + x.d_.get_str() + ") and sqrt(" +
                                            y.d_.get_str() + ")");
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
  Integer d = ExactScalar::common_radicand(x, y);
  return ExactScalar(x.a_ + y.a_, x.b_ + y.b_, d);
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  Integer d = ExactScalar::common_radicand(x, y);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return ExactScalar(a, b, d);
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
  if (y.sign() == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  Integer d = ExactScalar::common_radicand(x, y);
  ExactScalar conj(y.a_, -y.b_, d);
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
  ExactScalar num = x * conj;
  return ExactScalar(num.a_ / norm, num.b_ / norm, d);
}

std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace planeval
