#include "planeval/arith.hpp"

#include "planeval/error.hpp"

#include <cctype>

namespace planeval {

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw Error(ErrorCode::ParseError, "malformed integer: '" + std::string(text) + "'");
  }
  Integer v(std::string(body), 10);
  return negative ? Integer(-v) : v;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(ErrorCode::ParseError, "malformed rational: '" + std::string(text) + "'");
  }
  Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

}  // namespace planeval
