#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace algint {

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p" or "p/q" (decimal, optional leading '-', q != 0). The result
  /// is canonicalized, so "2/4" reads as 1/2. Throws BadScalar otherwise.
  static Scalar parse(std::string_view text);

  /// Canonical decimal form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  bool isZero() const { return sgn(value_) == 0; }
  bool isOne() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool isInteger() const { return value_.get_den() == 1; }

  std::string numeratorStr() const { return value_.get_num().get_str(); }
  std::string denominatorStr() const { return value_.get_den().get_str(); }
  /// Bits in numerator plus denominator; a rough size measure.
  std::size_t bitSize() const;

  const mpq_class& raw() const { return value_; }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  /// Throws Singular on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class value_{0};
};

}  // namespace algint
