// Exact arbitrary-precision fractions. Every degree and measure in the
// library is a Rational; no floating point enters any exact computation.
// Backed by Boost.Multiprecision (cpp_int / cpp_rational).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "grpdeg/errors.hpp"

namespace grpdeg {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_pow(const BigInt& base, int exp) {
  BigInt result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

// Always in lowest terms with a positive denominator (both maintained by
// the backing cpp_rational; the constructor fixes up the sign first since
// cpp_rational rejects negative denominators).
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : value_(n) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw InvalidParameter("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    value_ = boost::multiprecision::cpp_rational(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  double to_double() const { return value_.convert_to<double>(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    std::string s = numerator().str();
    BigInt den = denominator();
    if (den != 1) s += "/" + den.str();
    return s;
  }

  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos)
        return Rational(BigInt(std::string(text)));
      BigInt num{std::string(text.substr(0, slash))};
      BigInt den{std::string(text.substr(slash + 1))};
      return Rational(num, den);
    } catch (const std::exception&) {
      throw ParseError("not a rational: '" + std::string(text) + "'", 0);
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw InvalidParameter("Rational: division by zero");
    return Rational(a.value_ / b.value_);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v)
      : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_;
};

}  // namespace grpdeg
