#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tdq {

/// Thrown for any arithmetic that has no value (division by zero, singular
/// inverse, zero to a negative power).
class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : value_(v) {}           // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(v) {}          // NOLINT(google-explicit-constructor)
  Scalar(long long v);                   // NOLINT(google-explicit-constructor)
  Scalar(long long num, long long den);
  explicit Scalar(const mpq_class& v);

  /// Parses "p", "-p" or "p/q". The result is reduced; "q" must be nonzero.
  static Scalar parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] Scalar abs() const { return Scalar(mpq_class(::abs(value_))); }
  [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  mpq_class value_{0};
};

/// Integer power; negative exponents invert (error for zero base).
Scalar pow(const Scalar& base, long long exponent);

}  // namespace tdq
