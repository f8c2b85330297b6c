#include "phihex/fibonacci.hpp"

#include <stdexcept>

namespace phihex {

BigInt fib(int n) {
  if (n < 1) throw std::invalid_argument("fib: n must be >= 1");
  BigInt prev = 0;
  BigInt cur = 1;
  for (int i = 1; i < n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Convergent convergent(int n) {
  if (n < 2) throw std::invalid_argument("convergent: n must be >= 2");
  Convergent c;
  c.n = n;
  c.fn = fib(n);
  c.fn_1 = fib(n - 1);
  c.ratio = Rational(c.fn, c.fn_1);
  return c;
}

QuadExt variance_exact(int n) { return abs(QuadExt(convergent(n).ratio) - QuadExt::phi()); }

std::string variance(int n, int frac_digits, Rounding mode) {
  return to_decimal(variance_exact(n), frac_digits, mode);
}

Convergent assess_nearest(const Rational& v) {
  if (v <= 0) throw std::invalid_argument("assess_nearest: value must be positive");
  // Distances of later convergents are bounded below by |v - Phi| - e_n,
  // where e_n is the (strictly decreasing) variance of convergent n.
  const QuadExt offset = abs(QuadExt(v) - QuadExt::phi());

  Convergent best;
  Rational best_dist = -1;
  BigInt fn_1 = 1;  // F_1
  BigInt fn = 1;    // F_2
  for (int n = 2;; ++n) {
    Rational ratio(fn, fn_1);
    Rational dist = ratio > v ? Rational(ratio - v) : Rational(v - ratio);
    if (best_dist < 0 || dist < best_dist) {
      best = Convergent{n, fn, fn_1, ratio};
      best_dist = dist;
    }
    const QuadExt e_n = abs(QuadExt(ratio) - QuadExt::phi());
    if (sign(offset - e_n - QuadExt(best_dist)) >= 0) return best;

    BigInt next = fn + fn_1;
    fn_1 = std::move(fn);
    fn = std::move(next);
  }
}

Convergent assess_nearest(std::string_view value) { return assess_nearest(parse_decimal(value)); }

}  // namespace phihex
