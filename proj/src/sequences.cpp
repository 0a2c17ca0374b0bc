#include "pell/sequences.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace pell {

namespace {

RecurrenceSpec make(int order, std::vector<Int> coeffs, Int constant,
                    std::vector<Int> initials) {
  RecurrenceSpec s;
  s.order = order;
  s.coeffs = std::move(coeffs);
  s.constant = std::move(constant);
  s.initials = std::move(initials);
  s.base_index = 0;
  return s;
}

void check_lower(const RecurrenceSpec& spec, long n) {
  if (n < spec.base_index)
    throw std::domain_error("index " + std::to_string(n) +
                            " is below the base index " +
                            std::to_string(spec.base_index));
}

}  // namespace

const RecurrenceSpec& builtin_spec(SequenceId id) {
  static const RecurrenceSpec e = make(2, {2, 1}, 0, {0, 1});
  static const RecurrenceSpec q = make(2, {2, 1}, 0, {1, 3});
  static const RecurrenceSpec qhat = make(2, {2, 1}, 0, {2, 2});
  static const RecurrenceSpec b = make(3, {1, 3, 1}, 0, {0, 1, 1});
  static const RecurrenceSpec r = make(2, {2, 1}, 1, {0, 0});
  static const RecurrenceSpec a = make(3, {3, -1, -1}, 0, {1, 1, 2});
  static const RecurrenceSpec s = make(3, {3, -1, -1}, 1, {0, 0, 1});
  static const RecurrenceSpec j = make(4, {0, 6, 0, -1}, 0, {0, 1, 4, 7});
  switch (id) {
    case SequenceId::E: return e;
    case SequenceId::Q: return q;
    case SequenceId::QHat: return qhat;
    case SequenceId::B: return b;
    case SequenceId::R: return r;
    case SequenceId::A: return a;
    case SequenceId::S: return s;
    case SequenceId::J: return j;
  }
  throw std::invalid_argument("unknown sequence id");
}

std::optional<SequenceId> parse_sequence_tag(std::string_view tag) {
  std::string up;
  up.reserve(tag.size());
  for (char c : tag) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "E") return SequenceId::E;
  if (up == "Q") return SequenceId::Q;
  if (up == "QHAT") return SequenceId::QHat;
  if (up == "B") return SequenceId::B;
  if (up == "R") return SequenceId::R;
  if (up == "A") return SequenceId::A;
  if (up == "S") return SequenceId::S;
  if (up == "J") return SequenceId::J;
  return std::nullopt;
}

std::string_view sequence_tag(SequenceId id) {
  switch (id) {
    case SequenceId::E: return "E";
    case SequenceId::Q: return "Q";
    case SequenceId::QHat: return "QHAT";
    case SequenceId::B: return "B";
    case SequenceId::R: return "R";
    case SequenceId::A: return "A";
    case SequenceId::S: return "S";
    case SequenceId::J: return "J";
  }
  return "?";
}

std::vector<Int> terms(const RecurrenceSpec& spec, long lo, long hi) {
  if (lo > hi)
    throw std::invalid_argument("empty range: lo " + std::to_string(lo) +
                                " > hi " + std::to_string(hi));
  check_lower(spec, lo);
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(hi - lo + 1));
  std::vector<Int> window;  // last `order` values, oldest first
  window.reserve(static_cast<size_t>(spec.order) + 1);
  long idx = spec.base_index;
  for (const Int& v : spec.initials) {
    if (idx > hi) return out;
    if (idx >= lo) out.push_back(v);
    window.push_back(v);
    ++idx;
  }
  for (; idx <= hi; ++idx) {
    Int next = spec.constant;
    for (int i = 0; i < spec.order; ++i)
      next += spec.coeffs[static_cast<size_t>(i)] *
              window[static_cast<size_t>(spec.order - 1 - i)];
    window.erase(window.begin());
    window.push_back(std::move(next));
    if (idx >= lo) out.push_back(window.back());
  }
  return out;
}

std::vector<Int> terms(SequenceId id, long lo, long hi) {
  return terms(builtin_spec(id), lo, hi);
}

Int term(const RecurrenceSpec& spec, long n) {
  check_lower(spec, n);
  return terms(spec, n, n).front();
}

Int term(SequenceId id, long n) { return term(builtin_spec(id), n); }

Int partial_sum(long n) {
  if (n < 0) throw std::domain_error("partial_sum needs n >= 0");
  Int sum = 0;
  for (const Int& v : terms(SequenceId::R, 0, n)) sum += v;
  return sum;
}

}  // namespace pell
