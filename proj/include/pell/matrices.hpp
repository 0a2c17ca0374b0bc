#pragma once

#include <array>
#include <vector>

#include "pell/sequences.hpp"
#include "pell/zsqrt2.hpp"

namespace pell {

struct Mat3 {
  std::array<Int, 9> e{};  // row-major

  Int& at(int r, int c) { return e[static_cast<size_t>(3 * r + c)]; }
  const Int& at(int r, int c) const { return e[static_cast<size_t>(3 * r + c)]; }

  static Mat3 identity();

  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  friend bool operator==(const Mat3& x, const Mat3& y) { return x.e == y.e; }
  friend bool operator!=(const Mat3& x, const Mat3& y) { return !(x == y); }
};

struct Mat2 {
  std::array<Int, 4> e{};

  Int& at(int r, int c) { return e[static_cast<size_t>(2 * r + c)]; }
  const Int& at(int r, int c) const { return e[static_cast<size_t>(2 * r + c)]; }

  static Mat2 identity();

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.e == y.e; }
};

enum class Generator { u1, u1t, u2, u3 };

const Mat3& generator(Generator g);
inline const Mat3& u1() { return generator(Generator::u1); }
inline const Mat3& u1t() { return generator(Generator::u1t); }
inline const Mat3& u2() { return generator(Generator::u2); }
inline const Mat3& u3() { return generator(Generator::u3); }

Mat3 mat_pow(const Mat3& m, long n);  // n >= 0
Mat2 mat_pow(const Mat2& m, long n);

Int trace(const Mat3& m);
Int det(const Mat3& m);
Mat3 transpose(const Mat3& m);
Mat3 adjugate(const Mat3& m);  // m * adjugate(m) == det(m) * I

// closed forms for generator powers; all need n >= 1
Mat3 closed_form_u1(long n);
Mat3 closed_form_u1T(long n);
Mat3 closed_form_u2(long n);
Mat3 closed_form_u2_inv(long n);  // inverse of u2^n
Mat3 closed_form_u3(long n);
Mat3 closed_form_u3_inv(long n);  // inverse of u3^n

// det(xI - M) = x^3 + c2*x^2 + c1*x + c0
struct CharPoly {
  Int c2, c1, c0;

  friend bool operator==(const CharPoly& x, const CharPoly& y) {
    return x.c2 == y.c2 && x.c1 == y.c1 && x.c0 == y.c0;
  }
  friend bool operator<(const CharPoly& x, const CharPoly& y) {
    if (x.c2 != y.c2) return x.c2 < y.c2;
    if (x.c1 != y.c1) return x.c1 < y.c1;
    return x.c0 < y.c0;
  }
};

CharPoly char_poly(const Mat3& m);
Int cubic_discriminant(const CharPoly& p);  // zero iff a repeated root exists
std::string char_poly_string(const CharPoly& p);

enum class Similarity { similar, not_similar, indeterminate };

// equal char polys + squarefree => similar over Q; unequal => not similar;
// equal but with a repeated root => indeterminate (no canonical form computed)
Similarity similar_over_rationals(const Mat3& x, const Mat3& y);

struct EigenTriple {
  Zsqrt2 lam;
  std::array<Zsqrt2, 3> vec;  // denominator-cleared eigenvector
};

// M*vec == lam*vec, exactly
bool eigen_residual(const Mat3& m, const EigenTriple& t);

// the shipped exact eigen system of a generator
std::array<EigenTriple, 3> eigen_system(Generator g);

// mat_pow([[2,1],[1,0]], n) == [[E(n+1),E(n)],[E(n),E(n-1)]]; n >= 1
bool intro_mat2_check(long n);

}  // namespace pell
