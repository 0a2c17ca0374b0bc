#pragma once

#include <optional>
#include <vector>

#include "pell/sequences.hpp"

namespace pell {

struct GcdRow {
  long n = 0;
  long k = 0;
  Int lhs_first;   // r(n-k+1) - r(k-2)
  Int lhs_second;  // r(n-k) + r(k-1) + 1
  Int gcd_reduced;
  Int gcd_direct;  // gcd(r(n), r(n-1))
};

struct SidonCollision {
  long i = 0, j = 0;  // first pair
  long p = 0, q = 0;  // second pair with the same sum
};

struct SidonReport {
  long n_max = 0;
  long pair_count = 0;
  bool distinct = false;
  std::optional<SidonCollision> first_collision;
};

// r(2m+1) == r(2m) mod 4 for even m, r(2m)+2 mod 4 for odd m; m >= 1
bool congruence_mod4(long m);

// r(2n) == 4*r(n)*(r(n)+1) for even n (r(2n)-1 for odd n), plus the
// divisibility consequences by 4, r(n) and r(n)+1; n >= 1
bool double_index_check(long n);

// gcd(r(n), r(n-1)); n >= 2. Equals J((n-1)/2) for odd n and 1 for even n.
Int gcd_consecutive(long n);

// one row per k: gcd(r(n-k+1)-r(k-2), r(n-k)+r(k-1)+1) next to the direct
// gcd(r(n), r(n-1)); n and every k must be even, 2 <= k <= n
std::vector<GcdRow> gcd_reduction_rows(long n, const std::vector<long>& ks);

// s(n) < r(n+1) for all 1 <= n <= n_max
bool partial_sum_bound(long n_max);

// pairwise sums r(i)+r(j), 1 <= i <= j <= n_max, all distinct?
SidonReport sidon_check(long n_max);

}  // namespace pell
