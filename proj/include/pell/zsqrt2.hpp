#pragma once

#include "pell/sequences.hpp"

namespace pell {

// a + b*sqrt(2), exact
struct Zsqrt2 {
  Int a = 0;
  Int b = 0;

  Zsqrt2() = default;
  Zsqrt2(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

  friend Zsqrt2 operator+(const Zsqrt2& x, const Zsqrt2& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend Zsqrt2 operator-(const Zsqrt2& x, const Zsqrt2& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend Zsqrt2 operator-(const Zsqrt2& x) { return {-x.a, -x.b}; }
  friend Zsqrt2 operator*(const Zsqrt2& x, const Zsqrt2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Zsqrt2 operator*(const Int& c, const Zsqrt2& x) {
    return {c * x.a, c * x.b};
  }
  friend bool operator==(const Zsqrt2& x, const Zsqrt2& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Zsqrt2& x, const Zsqrt2& y) { return !(x == y); }
};

Zsqrt2 conj(const Zsqrt2& x);
Int norm(const Zsqrt2& x);  // a^2 - 2*b^2, multiplicative

Zsqrt2 pow(const Zsqrt2& x, long n);  // n >= 0

// (1+sqrt2)^n == Q(n-1) + E(n)*sqrt(2); defined for n >= 1
bool binet_check(long n);

}  // namespace pell
