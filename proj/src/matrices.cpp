#include "pell/matrices.hpp"

#include <stdexcept>
#include <string>

namespace pell {

namespace {

template <typename M>
M pow_impl(M base, long n) {
  if (n < 0) throw std::domain_error("mat_pow needs n >= 0");
  M acc = M::identity();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

void check_positive(long n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + " needs n >= 1");
}

// E with the backward extension E(-1) = 1, forced by E(n-2) = E(n) - 2E(n-1)
Int e_ext(long k) {
  if (k == -1) return 1;
  return term(SequenceId::E, k);
}

int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

Mat3 Mat3::identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int sum = 0;
      for (int k = 0; k < 3; ++k) sum += x.at(i, k) * y.at(k, j);
      out.at(i, j) = std::move(sum);
    }
  return out;
}

Mat2 Mat2::identity() { return Mat2{{1, 0, 0, 1}}; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Int sum = 0;
      for (int k = 0; k < 2; ++k) sum += x.at(i, k) * y.at(k, j);
      out.at(i, j) = std::move(sum);
    }
  return out;
}

const Mat3& generator(Generator g) {
  static const Mat3 m1{{0, 0, 1, 1, 1, 1, 1, 1, 1}};
  static const Mat3 m1t{{0, 1, 1, 0, 1, 1, 1, 1, 1}};
  static const Mat3 m2{{0, 1, 1, 1, 0, 1, 1, 1, 1}};
  static const Mat3 m3{{1, 0, 1, 0, 1, 1, 1, 1, 1}};
  switch (g) {
    case Generator::u1: return m1;
    case Generator::u1t: return m1t;
    case Generator::u2: return m2;
    case Generator::u3: return m3;
  }
  throw std::invalid_argument("unknown generator");
}

Mat3 mat_pow(const Mat3& m, long n) { return pow_impl(m, n); }
Mat2 mat_pow(const Mat2& m, long n) { return pow_impl(m, n); }

Int trace(const Mat3& m) { return m.at(0, 0) + m.at(1, 1) + m.at(2, 2); }

Int det(const Mat3& m) {
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

Mat3 transpose(const Mat3& m) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.at(i, j) = m.at(j, i);
  return out;
}

Mat3 adjugate(const Mat3& m) {
  Mat3 a;
  a.at(0, 0) = m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
  a.at(0, 1) = m.at(0, 2) * m.at(2, 1) - m.at(0, 1) * m.at(2, 2);
  a.at(0, 2) = m.at(0, 1) * m.at(1, 2) - m.at(0, 2) * m.at(1, 1);
  a.at(1, 0) = m.at(1, 2) * m.at(2, 0) - m.at(1, 0) * m.at(2, 2);
  a.at(1, 1) = m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0);
  a.at(1, 2) = m.at(0, 2) * m.at(1, 0) - m.at(0, 0) * m.at(1, 2);
  a.at(2, 0) = m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0);
  a.at(2, 1) = m.at(0, 1) * m.at(2, 0) - m.at(0, 0) * m.at(2, 1);
  a.at(2, 2) = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  return a;
}

Mat3 closed_form_u1(long n) {
  check_positive(n, "closed_form_u1");
  Int em2 = e_ext(n - 2), em1 = e_ext(n - 1), en = e_ext(n);
  Mat3 out;
  out.at(0, 0) = em1;
  out.at(0, 1) = em1;
  out.at(0, 2) = em1 + em2;
  for (int i = 1; i < 3; ++i) {
    out.at(i, 0) = en;
    out.at(i, 1) = en;
    out.at(i, 2) = en + em1;
  }
  return out;
}

Mat3 closed_form_u1T(long n) {
  check_positive(n, "closed_form_u1T");
  return transpose(closed_form_u1(n));
}

Mat3 closed_form_u2(long n) {
  check_positive(n, "closed_form_u2");
  Int em1 = e_ext(n - 1), en = term(SequenceId::E, n);
  Int bn = term(SequenceId::B, n);
  Mat3 out;
  out.at(0, 0) = en + em1 - bn;
  out.at(0, 1) = bn;
  out.at(0, 2) = en;
  out.at(1, 0) = bn;
  out.at(1, 1) = en + em1 - bn;
  out.at(1, 2) = en;
  out.at(2, 0) = en;
  out.at(2, 1) = en;
  out.at(2, 2) = en + em1;
  return out;
}

Mat3 closed_form_u2_inv(long n) {
  check_positive(n, "closed_form_u2_inv");
  Int qm1 = term(SequenceId::Q, n - 1);
  Int rn = term(SequenceId::R, n);
  Int en = term(SequenceId::E, n);
  int s = sign_pow(n);
  Mat3 out;
  out.at(0, 0) = s * (qm1 - rn);
  out.at(0, 1) = s * rn;
  out.at(0, 2) = -s * en;
  out.at(1, 0) = s * rn;
  out.at(1, 1) = s * (qm1 - rn);
  out.at(1, 2) = -s * en;
  out.at(2, 0) = -s * en;
  out.at(2, 1) = -s * en;
  out.at(2, 2) = s * qm1;
  return out;
}

Mat3 closed_form_u3(long n) {
  check_positive(n, "closed_form_u3");
  Int an = term(SequenceId::A, n);
  Int rn = term(SequenceId::R, n);
  Int en = term(SequenceId::E, n);
  Mat3 out;
  out.at(0, 0) = an;
  out.at(0, 1) = rn;
  out.at(0, 2) = en;
  out.at(1, 0) = rn;
  out.at(1, 1) = an;
  out.at(1, 2) = en;
  out.at(2, 0) = en;
  out.at(2, 1) = en;
  out.at(2, 2) = rn + an;
  return out;
}

Mat3 closed_form_u3_inv(long n) {
  check_positive(n, "closed_form_u3_inv");
  Int qm1 = term(SequenceId::Q, n - 1);
  Int bn = term(SequenceId::B, n);
  Int en = term(SequenceId::E, n);
  int s = sign_pow(n);
  Mat3 out;
  out.at(0, 0) = 1 + s * bn;
  out.at(0, 1) = s * bn;
  out.at(0, 2) = -s * en;
  out.at(1, 0) = s * bn;
  out.at(1, 1) = 1 + s * bn;
  out.at(1, 2) = -s * en;
  out.at(2, 0) = -s * en;
  out.at(2, 1) = -s * en;
  out.at(2, 2) = s * qm1;
  return out;
}

CharPoly char_poly(const Mat3& m) {
  Int minors = m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1) +
               m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0) +
               m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  return CharPoly{-trace(m), std::move(minors), -det(m)};
}

Int cubic_discriminant(const CharPoly& p) {
  const Int &b = p.c2, &c = p.c1, &d = p.c0;
  return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c -
         27 * d * d;
}

std::string char_poly_string(const CharPoly& p) {
  std::string out = "x^3";
  auto append = [&out](const Int& c, const char* var) {
    if (c == 0) return;
    Int a = abs(c);
    out += (c < 0) ? " - " : " + ";
    bool unit = (a == 1);
    if (!unit || var[0] == '\0') out += a.get_str();
    if (var[0] != '\0') {
      if (!unit) out += "*";
      out += var;
    }
  };
  append(p.c2, "x^2");
  append(p.c1, "x");
  append(p.c0, "");
  return out;
}

Similarity similar_over_rationals(const Mat3& x, const Mat3& y) {
  CharPoly px = char_poly(x);
  CharPoly py = char_poly(y);
  if (!(px == py)) return Similarity::not_similar;
  if (cubic_discriminant(px) == 0) return Similarity::indeterminate;
  return Similarity::similar;
}

bool eigen_residual(const Mat3& m, const EigenTriple& t) {
  for (int i = 0; i < 3; ++i) {
    Zsqrt2 sum;
    for (int j = 0; j < 3; ++j)
      sum = sum + m.at(i, j) * t.vec[static_cast<size_t>(j)];
    if (sum != t.lam * t.vec[static_cast<size_t>(i)]) return false;
  }
  return true;
}

std::array<EigenTriple, 3> eigen_system(Generator g) {
  const Zsqrt2 lam_minus{1, -1};  // 1 - sqrt2
  const Zsqrt2 lam_plus{1, 1};    // 1 + sqrt2
  // shared cleared eigenvectors (+-sqrt2, +-sqrt2, 2) of the symmetric generators
  const std::array<Zsqrt2, 3> v_minus{Zsqrt2{0, -1}, Zsqrt2{0, -1}, Zsqrt2{2, 0}};
  const std::array<Zsqrt2, 3> v_plus{Zsqrt2{0, 1}, Zsqrt2{0, 1}, Zsqrt2{2, 0}};
  switch (g) {
    case Generator::u1:
      return {EigenTriple{Zsqrt2{0, 0}, {Zsqrt2{-1, 0}, Zsqrt2{1, 0}, Zsqrt2{0, 0}}},
              EigenTriple{lam_minus, {Zsqrt2{-1, -1}, Zsqrt2{1, 0}, Zsqrt2{1, 0}}},
              EigenTriple{lam_plus, {Zsqrt2{-1, 1}, Zsqrt2{1, 0}, Zsqrt2{1, 0}}}};
    case Generator::u1t:
      return {EigenTriple{Zsqrt2{0, 0}, {Zsqrt2{0, 0}, Zsqrt2{-1, 0}, Zsqrt2{1, 0}}},
              EigenTriple{lam_minus, v_minus},
              EigenTriple{lam_plus, v_plus}};
    case Generator::u2:
      return {EigenTriple{Zsqrt2{-1, 0}, {Zsqrt2{-1, 0}, Zsqrt2{1, 0}, Zsqrt2{0, 0}}},
              EigenTriple{lam_minus, v_minus},
              EigenTriple{lam_plus, v_plus}};
    case Generator::u3:
      return {EigenTriple{Zsqrt2{1, 0}, {Zsqrt2{-1, 0}, Zsqrt2{1, 0}, Zsqrt2{0, 0}}},
              EigenTriple{lam_minus, v_minus},
              EigenTriple{lam_plus, v_plus}};
  }
  throw std::invalid_argument("unknown generator");
}

bool intro_mat2_check(long n) {
  check_positive(n, "intro_mat2_check");
  Mat2 m{{2, 1, 1, 0}};
  Mat2 want;
  want.at(0, 0) = term(SequenceId::E, n + 1);
  want.at(0, 1) = term(SequenceId::E, n);
  want.at(1, 0) = want.at(0, 1);
  want.at(1, 1) = term(SequenceId::E, n - 1);
  return mat_pow(m, n) == want;
}

}  // namespace pell
