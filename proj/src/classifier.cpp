#include "pell/classifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pell {

namespace {

const std::array<std::array<int, 3>, 6>& perms3() {
  static const std::array<std::array<int, 3>, 6> p = {{{0, 1, 2},
                                                       {0, 2, 1},
                                                       {1, 0, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {2, 1, 0}}};
  return p;
}

// P*M*P^-1 where P maps basis vector j to p[j]
Mat3 conjugate(const Mat3& m, const std::array<int, 3>& p) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.at(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]) = m.at(i, j);
  return out;
}

}  // namespace

Mat3 binary_matrix(int index) {
  if (index < 0 || index >= 512)
    throw std::domain_error("binary matrix index must be in [0, 512)");
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m.at(i, j) = (index >> (8 - (3 * i + j))) & 1;
  return m;
}

int binary_index(const Mat3& m) {
  int idx = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Int& v = m.at(i, j);
      if (v != 0 && v != 1)
        throw std::domain_error("matrix entries must be 0 or 1");
      if (v == 1) idx |= 1 << (8 - (3 * i + j));
    }
  return idx;
}

std::vector<Mat3> enumerate_binary3() {
  std::vector<Mat3> out;
  out.reserve(512);
  for (int i = 0; i < 512; ++i) out.push_back(binary_matrix(i));
  return out;
}

bool is_pell_generating(const Mat3& m) {
  CharPoly p = char_poly(m);
  // remainder of (x^3 + c2 x^2 + c1 x + c0) / (x^2 - 2x - 1)
  Int rem_x = p.c1 + 2 * p.c2 + 5;
  Int rem_c = p.c0 + p.c2 + 2;
  return rem_x == 0 && rem_c == 0;
}

std::vector<std::vector<Mat3>> permutation_orbits(const std::vector<Mat3>& set) {
  std::map<std::array<Int, 9>, size_t> pos;
  for (size_t i = 0; i < set.size(); ++i) pos.emplace(set[i].e, i);

  std::vector<bool> done(set.size(), false);
  std::vector<std::vector<Mat3>> parts;
  for (size_t i = 0; i < set.size(); ++i) {
    if (done[i]) continue;
    std::vector<size_t> members{i};
    done[i] = true;
    for (size_t cursor = 0; cursor < members.size(); ++cursor) {
      const Mat3& cur = set[members[cursor]];
      for (const auto& p : perms3()) {
        Mat3 c = conjugate(cur, p);
        auto it = pos.find(c.e);
        if (it != pos.end() && !done[it->second]) {
          done[it->second] = true;
          members.push_back(it->second);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Mat3> part;
    part.reserve(members.size());
    for (size_t idx : members) part.push_back(set[idx]);
    parts.push_back(std::move(part));
  }
  return parts;
}

bool trace_identity_check(const Mat3& m, long n_max) {
  if (!is_pell_generating(m)) return false;
  Int lam1 = trace(m) - 2;
  std::vector<Int> q = terms(SequenceId::Q, 0, n_max);
  Mat3 power = m;
  Int lam_pow = lam1;
  for (long j = 1; j <= n_max; ++j) {
    if (trace(power) - lam_pow != 2 * q[static_cast<size_t>(j - 1)]) return false;
    if (j < n_max) {
      power = power * m;
      lam_pow *= lam1;
    }
  }
  return true;
}

ClassificationReport classify() {
  ClassificationReport rep;
  std::vector<Mat3> all = enumerate_binary3();
  rep.total = static_cast<int>(all.size());

  std::map<CharPoly, std::vector<int>> by_poly;
  for (int i = 0; i < rep.total; ++i)
    if (is_pell_generating(all[static_cast<size_t>(i)])) {
      ++rep.pell_count;
      by_poly[char_poly(all[static_cast<size_t>(i)])].push_back(i);
    }

  for (auto& [poly, indices] : by_poly) {
    Bucket b;
    b.poly = poly;
    b.indices = indices;
    std::vector<Mat3> members;
    members.reserve(indices.size());
    for (int i : indices) members.push_back(all[static_cast<size_t>(i)]);
    for (const auto& orbit : permutation_orbits(members)) {
      std::vector<int> orbit_indices;
      orbit_indices.reserve(orbit.size());
      for (const Mat3& m : orbit) orbit_indices.push_back(binary_index(m));
      std::sort(orbit_indices.begin(), orbit_indices.end());
      b.orbits.push_back(std::move(orbit_indices));
    }
    rep.buckets.push_back(std::move(b));
  }

  rep.u1_index = binary_index(u1());
  rep.u2_index = binary_index(u2());
  rep.u3_index = binary_index(u3());
  auto locate = [&rep](int target) {
    for (size_t b = 0; b < rep.buckets.size(); ++b)
      for (int i : rep.buckets[b].indices)
        if (i == target) return static_cast<int>(b);
    return -1;
  };
  rep.u1_bucket = locate(rep.u1_index);
  rep.u2_bucket = locate(rep.u2_index);
  rep.u3_bucket = locate(rep.u3_index);
  return rep;
}

bool classification_invariants_ok(const ClassificationReport& rep) {
  if (rep.total != 512) return false;
  if (rep.buckets.size() != 3) return false;
  int counted = 0;
  for (const Bucket& b : rep.buckets) counted += static_cast<int>(b.indices.size());
  if (counted != rep.pell_count) return false;
  if (rep.u1_bucket < 0 || rep.u2_bucket < 0 || rep.u3_bucket < 0) return false;
  if (rep.u1_bucket == rep.u2_bucket || rep.u1_bucket == rep.u3_bucket ||
      rep.u2_bucket == rep.u3_bucket)
    return false;
  return true;
}

}  // namespace pell
