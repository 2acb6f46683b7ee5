#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "sgcf/error.hpp"

namespace sgcf {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator so that equality is structural.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT
  BigRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  BigInt floor() const;
  BigInt ceil() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  BigRational& operator+=(const BigRational& rhs) { value_ += rhs.value_; return *this; }
  BigRational& operator-=(const BigRational& rhs) { value_ -= rhs.value_; return *this; }
  BigRational& operator*=(const BigRational& rhs) { value_ *= rhs.value_; return *this; }
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

/// Three-way comparison for GMP integers, which predate operator<=>.
inline std::strong_ordering compare(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

BigInt lcm(const BigInt& a, const BigInt& b);

/// Floor division and the matching nonnegative remainder (for b > 0).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

}  // namespace sgcf
