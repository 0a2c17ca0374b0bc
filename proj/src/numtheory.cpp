#include "pell/numtheory.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace pell {

namespace {

Int gcd_abs(const Int& x, const Int& y) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

bool divides(const Int& d, const Int& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

bool congruence_mod4(long m) {
  if (m < 1) throw std::domain_error("congruence_mod4 needs m >= 1");
  std::vector<Int> r = terms(SequenceId::R, 2 * m, 2 * m + 1);
  Int diff = r[1] - r[0];
  if (m % 2 != 0) diff -= 2;
  return divides(4, diff);
}

bool double_index_check(long n) {
  if (n < 1) throw std::domain_error("double_index_check needs n >= 1");
  Int rn = term(SequenceId::R, n);
  Int r2n = term(SequenceId::R, 2 * n);
  Int prod = 4 * rn * (rn + 1);
  Int target = (n % 2 == 0) ? r2n : Int(r2n - 1);
  if (target != prod) return false;
  return divides(4, target) && divides(rn, target) && divides(rn + 1, target);
}

Int gcd_consecutive(long n) {
  if (n < 2) throw std::domain_error("gcd_consecutive needs n >= 2");
  std::vector<Int> r = terms(SequenceId::R, n - 1, n);
  return gcd_abs(r[1], r[0]);
}

std::vector<GcdRow> gcd_reduction_rows(long n, const std::vector<long>& ks) {
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("gcd_reduction_rows needs an even n >= 2");
  for (long k : ks)
    if (k < 2 || k > n || k % 2 != 0)
      throw std::domain_error("k = " + std::to_string(k) +
                              " must be even and in [2, " + std::to_string(n) +
                              "]");
  std::vector<Int> r = terms(SequenceId::R, 0, n);
  Int direct = gcd_abs(r[static_cast<size_t>(n)], r[static_cast<size_t>(n - 1)]);
  std::vector<GcdRow> rows;
  rows.reserve(ks.size());
  for (long k : ks) {
    GcdRow row;
    row.n = n;
    row.k = k;
    row.lhs_first = r[static_cast<size_t>(n - k + 1)] - r[static_cast<size_t>(k - 2)];
    row.lhs_second = r[static_cast<size_t>(n - k)] + r[static_cast<size_t>(k - 1)] + 1;
    row.gcd_reduced = gcd_abs(row.lhs_first, row.lhs_second);
    row.gcd_direct = direct;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool partial_sum_bound(long n_max) {
  if (n_max < 1) throw std::domain_error("partial_sum_bound needs n_max >= 1");
  std::vector<Int> r = terms(SequenceId::R, 0, n_max + 1);
  Int sum = r[0];
  for (long n = 1; n <= n_max; ++n) {
    sum += r[static_cast<size_t>(n)];
    if (sum >= r[static_cast<size_t>(n + 1)]) return false;
  }
  return true;
}

SidonReport sidon_check(long n_max) {
  if (n_max < 1) throw std::domain_error("sidon_check needs n_max >= 1");
  std::vector<Int> r = terms(SequenceId::R, 0, n_max);
  SidonReport rep;
  rep.n_max = n_max;
  std::map<Int, std::pair<long, long>> seen;
  for (long i = 1; i <= n_max; ++i)
    for (long j = i; j <= n_max; ++j) {
      Int sum = r[static_cast<size_t>(i)] + r[static_cast<size_t>(j)];
      ++rep.pair_count;
      auto [it, fresh] = seen.emplace(std::move(sum), std::make_pair(i, j));
      if (!fresh) {
        rep.distinct = false;
        rep.first_collision =
            SidonCollision{it->second.first, it->second.second, i, j};
        return rep;
      }
    }
  rep.distinct = true;
  return rep;
}

}  // namespace pell
