#include "tdq/scalar.hpp"

#include <cctype>
#include <ostream>

namespace tdq {

namespace {

mpz_class from_ll(long long v) {
  mpz_class z;
  const std::string s = std::to_string(v);
  z.set_str(s, 10);
  return z;
}

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long long v) : value_(from_ll(v)) {}

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  value_ = mpq_class(from_ll(num), from_ll(den));
  value_.canonicalize();
}

Scalar::Scalar(const mpq_class& v) : value_(v) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(q);
}

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Scalar(mpq_class(1) / value_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(const Scalar& base, long long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Scalar result(1);
  Scalar b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace tdq
