#pragma once

/// \file
/// \brief Fibonacci ratio convergents F_n / F_(n-1) and their distance from Phi.

#include <string>
#include <string_view>

#include "phihex/exact.hpp"

namespace phihex {

/// F_n / F_(n-1), with F_1 = F_2 = 1. Consecutive Fibonacci numbers are
/// coprime, so `ratio` is already in lowest terms.
struct Convergent {
  int n = 2;
  BigInt fn;
  BigInt fn_1;
  Rational ratio;
};

/// F_n for n >= 1. Throws std::invalid_argument for n < 1.
BigInt fib(int n);

/// Throws std::invalid_argument for n < 2.
Convergent convergent(int n);

/// |F_n / F_(n-1) - Phi| as an exact field element.
QuadExt variance_exact(int n);

/// Decimal rendering of variance_exact(n).
std::string variance(int n, int frac_digits, Rounding mode = Rounding::kHalfEven);

/// The convergent nearest to v (exact distance; ties go to the smaller n).
/// Throws std::invalid_argument unless v > 0.
Convergent assess_nearest(const Rational& v);

/// Parses a decimal with '.' or ',' separator, then assess_nearest.
/// Throws ParseError.
Convergent assess_nearest(std::string_view value);

}  // namespace phihex
