#include "pell/zsqrt2.hpp"

#include <stdexcept>

namespace pell {

Zsqrt2 conj(const Zsqrt2& x) { return {x.a, -x.b}; }

Int norm(const Zsqrt2& x) { return x.a * x.a - 2 * x.b * x.b; }

Zsqrt2 pow(const Zsqrt2& x, long n) {
  if (n < 0) throw std::domain_error("pow needs n >= 0");
  Zsqrt2 acc{1, 0};
  Zsqrt2 base = x;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

bool binet_check(long n) {
  if (n < 1) throw std::domain_error("binet_check needs n >= 1");
  Zsqrt2 lhs = pow({1, 1}, n);
  return lhs.a == term(SequenceId::Q, n - 1) && lhs.b == term(SequenceId::E, n);
}

}  // namespace pell
