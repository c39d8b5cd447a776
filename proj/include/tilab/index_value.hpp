#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tilab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact index value: an arbitrary-precision rational kept in lowest terms
/// with a positive denominator.
class IndexValue {
 public:
  IndexValue() = default;
  IndexValue(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  IndexValue(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit IndexValue(const BigRational& v) : value_(v) {}
  IndexValue(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }
  const BigRational& rational() const noexcept { return value_; }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  /// Inverse of to_string. Throws InvalidArgument.
  static IndexValue parse(const std::string& text);

  IndexValue& operator+=(const IndexValue& o) { value_ += o.value_; return *this; }
  IndexValue& operator-=(const IndexValue& o) { value_ -= o.value_; return *this; }
  IndexValue& operator*=(const IndexValue& o) { value_ *= o.value_; return *this; }
  IndexValue& operator/=(const IndexValue& o);

  friend IndexValue operator+(IndexValue a, const IndexValue& b) { return a += b; }
  friend IndexValue operator-(IndexValue a, const IndexValue& b) { return a -= b; }
  friend IndexValue operator*(IndexValue a, const IndexValue& b) { return a *= b; }
  friend IndexValue operator/(IndexValue a, const IndexValue& b) { return a /= b; }
  friend IndexValue operator-(const IndexValue& a) { return IndexValue(BigRational(-a.value_)); }

  friend bool operator==(const IndexValue& a, const IndexValue& b) { return a.value_ == b.value_; }
  friend bool operator!=(const IndexValue& a, const IndexValue& b) { return a.value_ != b.value_; }
  friend bool operator<(const IndexValue& a, const IndexValue& b) { return a.value_ < b.value_; }
  friend bool operator>(const IndexValue& a, const IndexValue& b) { return a.value_ > b.value_; }
  friend bool operator<=(const IndexValue& a, const IndexValue& b) { return a.value_ <= b.value_; }
  friend bool operator>=(const IndexValue& a, const IndexValue& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const IndexValue& v) {
    return os << v.to_string();
  }

 private:
  BigRational value_{0};
};

/// base^exponent for a rational base and non-negative exponent.
IndexValue power(const IndexValue& base, std::uint64_t exponent);

}  // namespace tilab
