#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pell/sequences.hpp"

namespace pell {

struct IdentityInfo {
  std::string_view code;
  int arity = 1;             // number of free indices: 1 (n), 2 (n,m), 3 (n,a,b)
  long n_min = 0;
  long m_min = 0;            // lower bound of the extra indices (arity >= 2)
  std::string_view formula;  // display form
  std::string_view family;   // addition | bridge | cassini | binet | recurrence
  bool alternating = false;  // has a (-1)^n factor the flip test can negate
};

struct IdentityCase {
  std::string code;
  long n = 0;
  std::optional<long> m;
  std::optional<long> k;
  Int lhs;
  Int rhs;
  bool pass = false;
};

struct IdentityReport {
  std::string code;
  long n_max = 0;
  std::optional<long> m_max;
  long checked = 0;
  std::vector<IdentityCase> failures;
};

// catalog codes, deterministic order
std::vector<std::string_view> catalog();

const IdentityInfo& identity_info(std::string_view code);

IdentityCase check(std::string_view code, long n,
                   std::optional<long> m = std::nullopt,
                   std::optional<long> k = std::nullopt);

// exhaustive sweep of all valid index tuples with n <= n_max and
// extra indices <= m_max (default n_max); the three-index entry caps
// its offsets at 20
IdentityReport check_range(std::string_view code, long n_max,
                           std::optional<long> m_max = std::nullopt);

// same evaluation with the alternating factor negated; only valid for
// alternating entries — guards against vacuous predicates
IdentityCase check_flipped(std::string_view code, long n,
                           std::optional<long> m = std::nullopt,
                           std::optional<long> k = std::nullopt);

// true iff the negated form fails for at least one n <= n_limit
bool flip_guard(std::string_view code, long n_limit = 10);

}  // namespace pell
