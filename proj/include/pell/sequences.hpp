#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <vector>

namespace pell {

using Int = mpz_class;

enum class SequenceId { E, Q, QHat, B, R, A, S, J };

// x(n) = coeffs[0]*x(n-1) + ... + coeffs[order-1]*x(n-order) + constant,
// valid for n >= base_index, seeded with `initials`.
struct RecurrenceSpec {
  int order = 0;
  std::vector<Int> coeffs;    // most recent lag first
  Int constant = 0;
  std::vector<Int> initials;  // values at base_index .. base_index+order-1
  long base_index = 0;
};

const RecurrenceSpec& builtin_spec(SequenceId id);

std::optional<SequenceId> parse_sequence_tag(std::string_view tag);
std::string_view sequence_tag(SequenceId id);

Int term(const RecurrenceSpec& spec, long n);
Int term(SequenceId id, long n);

// inclusive range [lo, hi]
std::vector<Int> terms(const RecurrenceSpec& spec, long lo, long hi);
std::vector<Int> terms(SequenceId id, long lo, long hi);

// r(0) + ... + r(n); equals term(S, n)
Int partial_sum(long n);

}  // namespace pell
