#pragma once

#include <array>
#include <vector>

#include "pell/matrices.hpp"

namespace pell {

// 9-bit big-endian row-major encoding: M[i][j] = (index >> (8-(3i+j))) & 1
Mat3 binary_matrix(int index);           // 0 <= index < 512
int binary_index(const Mat3& m);         // entries must be 0/1
std::vector<Mat3> enumerate_binary3();   // all 512, by index

// x^2 - 2x - 1 divides char_poly(M) over the integers
bool is_pell_generating(const Mat3& m);

// partition under M ~ P*M*P^-1 for the six permutation matrices
std::vector<std::vector<Mat3>> permutation_orbits(const std::vector<Mat3>& set);

// trace(M^j) - lam1^j == 2*Q(j-1) for 1 <= j <= n_max, where lam1 = trace - 2
// is the third root; M must be Pell-generating
bool trace_identity_check(const Mat3& m, long n_max);

struct Bucket {
  CharPoly poly;
  std::vector<int> indices;             // members, ascending enumeration index
  std::vector<std::vector<int>> orbits; // permutation orbits, by index
};

struct ClassificationReport {
  int total = 0;       // 512
  int pell_count = 0;
  std::vector<Bucket> buckets;  // ordered by char-poly key
  int u1_index = -1, u2_index = -1, u3_index = -1;
  int u1_bucket = -1, u2_bucket = -1, u3_bucket = -1;  // positions in `buckets`
};

ClassificationReport classify();

// total == 512, exactly three buckets, representatives in distinct buckets
bool classification_invariants_ok(const ClassificationReport& rep);

}  // namespace pell
