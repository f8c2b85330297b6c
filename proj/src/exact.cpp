#include "phihex/exact.hpp"

#include <array>
#include <cctype>

namespace phihex {
namespace {

const std::array<unsigned, 3> kRadicands = {3, 5, 15};

BigInt pow10(int digits) {
  BigInt p = 1;
  for (int i = 0; i < digits; ++i) p *= 10;
  return p;
}

// Dyadic enclosure of sqrt(n): [m / 2^bits, (m + 1) / 2^bits] with
// m = isqrt(n * 4^bits). n is never a perfect square here.
Enclosure enclose_sqrt(unsigned n, unsigned bits) {
  BigInt scaled = BigInt(n) << (2 * bits);
  BigInt m = boost::multiprecision::sqrt(scaled);
  BigInt denom = BigInt(1) << bits;
  return {Rational(m, denom), Rational(BigInt(m + 1), denom)};
}

// Adds coeff * [lo, hi] into acc.
void accumulate(Enclosure& acc, const Rational& coeff, const Enclosure& e) {
  if (coeff >= 0) {
    acc.lo += coeff * e.lo;
    acc.hi += coeff * e.hi;
  } else {
    acc.lo += coeff * e.hi;
    acc.hi += coeff * e.lo;
  }
}

bool is_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

// Rounds a nonnegative rational to an integer.
BigInt round_rational(const Rational& y, Rounding mode) {
  const BigInt& num = boost::multiprecision::numerator(y);
  const BigInt& den = boost::multiprecision::denominator(y);
  BigInt q = num / den;
  if (mode == Rounding::kTruncate) return q;
  BigInt twice_rem = 2 * (num % den);
  if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) q += 1;
  return q;
}

std::string format_fixed(const BigInt& scaled, int frac_digits, bool negative) {
  std::string digits = scaled.str();
  if (digits.size() <= static_cast<std::size_t>(frac_digits)) {
    digits.insert(0, static_cast<std::size_t>(frac_digits) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(frac_digits), 1, '.');
  if (negative && scaled != 0) digits.insert(0, 1, '-');
  return digits;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

QuadExt QuadExt::phi() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }

QuadExt& QuadExt::operator+=(const QuadExt& y) {
  a_ += y.a_;
  b_ += y.b_;
  c_ += y.c_;
  d_ += y.d_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  c_ -= y.c_;
  d_ -= y.d_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& y) {
  // sqrt3*sqrt5 = sqrt15, sqrt3*sqrt15 = 3 sqrt5, sqrt5*sqrt15 = 5 sqrt3.
  Rational a = a_ * y.a_ + 3 * b_ * y.b_ + 5 * c_ * y.c_ + 15 * d_ * y.d_;
  Rational b = a_ * y.b_ + b_ * y.a_ + 5 * (c_ * y.d_ + d_ * y.c_);
  Rational c = a_ * y.c_ + c_ * y.a_ + 3 * (b_ * y.d_ + d_ * y.b_);
  Rational d = a_ * y.d_ + d_ * y.a_ + b_ * y.c_ + c_ * y.b_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  return *this;
}

Rational QuadExt::norm() const {
  QuadExt n = *this * conj3() * conj5() * conj15();
  return n.a();
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: division by zero");
  QuadExt cofactor = conj3() * conj5() * conj15();
  Rational n = (*this * cofactor).a();
  return cofactor * QuadExt(Rational(1) / n);
}

Enclosure enclose(const QuadExt& x, unsigned bits) {
  Enclosure acc{x.a(), x.a()};
  const std::array<const Rational*, 3> coeffs = {&x.b(), &x.c(), &x.d()};
  for (std::size_t i = 0; i < kRadicands.size(); ++i) {
    if (*coeffs[i] != 0) accumulate(acc, *coeffs[i], enclose_sqrt(kRadicands[i], bits));
  }
  return acc;
}

int sign(const QuadExt& x) {
  if (x.is_rational()) return x.a() > 0 ? 1 : (x.a() < 0 ? -1 : 0);
  // Nonzero irrational value: refinement terminates.
  for (unsigned bits = 16;; bits *= 2) {
    Enclosure e = enclose(x, bits);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
  }
}

QuadExt abs(const QuadExt& x) { return sign(x) < 0 ? -x : x; }

QuadExt sqrt_exact(const Rational& r) {
  if (r < 0) throw NegativeInput("sqrt_exact: negative input " + to_fraction_string(r));
  if (r == 0) return {};
  const std::array<unsigned, 4> radicands = {1, 3, 5, 15};
  for (unsigned k : radicands) {
    Rational q = r / k;
    BigInt num_root;
    BigInt den_root;
    if (is_square(boost::multiprecision::numerator(q), num_root) &&
        is_square(boost::multiprecision::denominator(q), den_root)) {
      Rational s(num_root, den_root);
      switch (k) {
        case 1: return {s, 0, 0, 0};
        case 3: return {0, s, 0, 0};
        case 5: return {0, 0, s, 0};
        default: return {0, 0, 0, s};
      }
    }
  }
  throw NotRepresentable("sqrt(" + to_fraction_string(r) + ") is not in Q(sqrt3, sqrt5)");
}

BigInt floor_rational(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::string to_decimal(const QuadExt& x, int frac_digits, Rounding mode) {
  if (frac_digits < 1) throw std::invalid_argument("to_decimal: frac_digits must be >= 1");
  const int s = sign(x);
  const QuadExt magnitude = s < 0 ? -x : x;
  const BigInt scale = pow10(frac_digits);

  if (magnitude.is_rational()) {
    return format_fixed(round_rational(magnitude.a() * scale, mode), frac_digits, s < 0);
  }
  // Irrational: the scaled value is never an integer or a half-integer, so
  // the enclosure eventually pins the result.
  const Rational shift = mode == Rounding::kHalfEven ? Rational(1, 2) : Rational(0);
  for (unsigned bits = 64;; bits *= 2) {
    Enclosure e = enclose(magnitude, bits);
    BigInt lo = floor_rational(e.lo * scale + shift);
    BigInt hi = floor_rational(e.hi * scale + shift);
    if (lo == hi) return format_fixed(lo, frac_digits, s < 0);
  }
}

namespace {

// Boost treats a leading 0 as an octal prefix; feed it plain decimal digits.
BigInt decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto sep = body.find_first_of(".,"); sep != std::string_view::npos) {
    int_part = body.substr(0, sep);
    frac_part = body.substr(sep + 1);
    if (!all_digits(frac_part)) throw ParseError("malformed decimal: '" + std::string(text) + "'");
  }
  if (!all_digits(int_part)) throw ParseError("malformed decimal: '" + std::string(text) + "'");

  const BigInt num = decimal_integer(std::string(int_part) + std::string(frac_part));
  Rational value(num, pow10(static_cast<int>(frac_part.size())));
  return negative ? Rational(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = text.substr(slash + 1);
  bool negative = false;
  if (!num_text.empty() && (num_text.front() == '+' || num_text.front() == '-')) {
    negative = num_text.front() == '-';
    num_text.remove_prefix(1);
  }
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt den = decimal_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational value(decimal_integer(num_text), den);
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace phihex
