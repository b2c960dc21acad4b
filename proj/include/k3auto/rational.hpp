#ifndef K3AUTO_RATIONAL_HPP
#define K3AUTO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "k3auto/errors.hpp"

namespace k3auto {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary precision numerator and denominator.
///
/// The representation is always reduced with a positive denominator, so two
/// values compare equal iff their numerators and denominators agree.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    value_ = boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "p" or "p/q" with an optional sign; surrounding blanks are allowed.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    auto parse_int = [](std::string_view s, bool allow_sign) -> BigInt {
      if (s.empty()) throw ParseError("empty integer in rational literal");
      std::size_t start = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
      if (start == s.size()) throw ParseError("missing digits in rational literal");
      for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
          throw ParseError("invalid character in rational literal: '" + std::string(s) + "'");
        }
      }
      BigInt v(std::string(s.substr(start)));
      return (start == 1 && s[0] == '-') ? BigInt(-v) : v;
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    BigInt num = parse_int(trim(text.substr(0, slash)), true);
    BigInt den = parse_int(trim(text.substr(slash + 1)), false);
    if (den == 0) throw ParseError("zero denominator in rational literal");
    return Rational(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    r.value_ = 1 / value_;
    return r;
  }

  std::string to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  boost::multiprecision::cpp_rational value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace k3auto

#endif  // K3AUTO_RATIONAL_HPP
