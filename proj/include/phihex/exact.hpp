#pragma once

/// \file
/// \brief Exact arithmetic over the real biquadratic field Q(sqrt3, sqrt5).
///
/// Every element is stored in the fixed basis {1, sqrt3, sqrt5, sqrt15} with
/// arbitrary-precision rational coefficients. Since the basis is linearly
/// independent over Q, two elements are equal iff their coefficients are.

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace phihex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The square root of a value lies outside Q(sqrt3, sqrt5).
class NotRepresentable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A square root was requested for a negative value.
class NegativeInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed numeric text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Rounding { kHalfEven, kTruncate };

/// a + b*sqrt3 + c*sqrt5 + d*sqrt15.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static QuadExt phi();
  static QuadExt sqrt3() { return {0, 1, 0, 0}; }
  static QuadExt sqrt5() { return {0, 0, 1, 0}; }
  static QuadExt sqrt15() { return {0, 0, 0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  /// Images under the three non-trivial field automorphisms.
  QuadExt conj3() const { return {a_, -b_, c_, -d_}; }
  QuadExt conj5() const { return {a_, b_, -c_, -d_}; }
  QuadExt conj15() const { return {a_, -b_, -c_, d_}; }

  /// Product of all four conjugates; always rational.
  Rational norm() const;

  /// Throws std::domain_error for zero.
  QuadExt inverse() const;

  QuadExt operator-() const { return {-a_, -b_, -c_, -d_}; }
  QuadExt& operator+=(const QuadExt& y);
  QuadExt& operator-=(const QuadExt& y);
  QuadExt& operator*=(const QuadExt& y);
  QuadExt& operator/=(const QuadExt& y) { return *this *= y.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt&, const QuadExt&) = default;

 private:
  Rational a_{0}, b_{0}, c_{0}, d_{0};
};

inline QuadExt field_add(const QuadExt& x, const QuadExt& y) { return x + y; }
inline QuadExt field_sub(const QuadExt& x, const QuadExt& y) { return x - y; }
inline QuadExt field_neg(const QuadExt& x) { return -x; }
inline QuadExt field_mul(const QuadExt& x, const QuadExt& y) { return x * y; }
inline bool field_equals(const QuadExt& x, const QuadExt& y) { return x == y; }

/// Exact sign of the real value: -1, 0 or +1.
int sign(const QuadExt& x);
/// sign(x - y).
inline int compare(const QuadExt& x, const QuadExt& y) { return sign(x - y); }
QuadExt abs(const QuadExt& x);

/// Rational enclosure [lo, hi] of a field element.
struct Enclosure {
  Rational lo;
  Rational hi;
};

/// Encloses x using dyadic enclosures of sqrt3, sqrt5 and sqrt15 of width
/// 2^-bits each.
Enclosure enclose(const QuadExt& x, unsigned bits);

/// Nonnegative square root of r when r is s^2, 3s^2, 5s^2 or 15s^2.
/// Throws NegativeInput for r < 0 and NotRepresentable otherwise.
QuadExt sqrt_exact(const Rational& r);

/// Decimal rendering with exactly frac_digits fractional digits and '.' as the
/// separator. Half-even rounding is correct rounding of the exact value;
/// truncation rounds toward zero. Negative zero is printed without a sign.
std::string to_decimal(const QuadExt& x, int frac_digits,
                       Rounding mode = Rounding::kHalfEven);

/// Parses "[+-]digits[(.|,)digits]". Throws ParseError.
Rational parse_decimal(std::string_view text);

/// Parses "p/q", an integer, or a decimal. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& r);

/// Largest integer not exceeding r.
BigInt floor_rational(const Rational& r);

}  // namespace phihex
