#include "pell/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pell {

namespace {

using LR = std::pair<Int, Int>;

struct SeqTab {
  std::vector<Int> e, q, qh, b, r, a;

  explicit SeqTab(long cap) {
    e = terms(SequenceId::E, 0, cap);
    q = terms(SequenceId::Q, 0, cap);
    qh = terms(SequenceId::QHat, 0, cap);
    b = terms(SequenceId::B, 0, cap);
    r = terms(SequenceId::R, 0, cap);
    a = terms(SequenceId::A, 0, cap);
  }

  const Int& E(long i) const { return e[static_cast<size_t>(i)]; }
  const Int& Q(long i) const { return q[static_cast<size_t>(i)]; }
  const Int& QH(long i) const { return qh[static_cast<size_t>(i)]; }
  const Int& B(long i) const { return b[static_cast<size_t>(i)]; }
  const Int& R(long i) const { return r[static_cast<size_t>(i)]; }
  const Int& A(long i) const { return a[static_cast<size_t>(i)]; }
};

int neg_pow(long j) { return (j % 2 == 0) ? 1 : -1; }

using EvalFn = LR (*)(const SeqTab&, long n, long m, long k, int sign);
using PairOk = bool (*)(long n, long m);

struct Entry {
  IdentityInfo info;
  EvalFn eval;
  PairOk pair_ok = nullptr;
};

std::vector<Entry> build_table() {
  std::vector<Entry> t;
  auto add1 = [&t](std::string_view code, long n_min, std::string_view formula,
                   std::string_view family, bool alternating, EvalFn f) {
    t.push_back({IdentityInfo{code, 1, n_min, 0, formula, family, alternating}, f});
  };
  auto add2 = [&t](std::string_view code, long n_min, long m_min,
                   std::string_view formula, std::string_view family, EvalFn f,
                   PairOk ok = nullptr) {
    t.push_back({IdentityInfo{code, 2, n_min, m_min, formula, family, false}, f, ok});
  };

  t.push_back({IdentityInfo{"I-01", 3, 0, 0,
                            "E(n+a)*E(n+b) - E(n)*E(n+a+b) = E(a)*E(b)*(-1)^n",
                            "cassini", false},
               +[](const SeqTab& s, long n, long a, long b, int) -> LR {
                 return {s.E(n + a) * s.E(n + b) - s.E(n) * s.E(n + a + b),
                         s.E(a) * s.E(b) * neg_pow(n)};
               }});
  add2("I-02", 0, 0, "E(m)*E(n+1) - E(m+1)*E(n) = (-1)^n*E(m-n)  [m >= n]",
       "cassini",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m) * s.E(n + 1) - s.E(m + 1) * s.E(n),
                 neg_pow(n) * s.E(m - n)};
       },
       +[](long n, long m) { return m >= n; });
  add1("I-03", 0, "E(n)^2 + E(n+1)^2 = E(2n+1)", "addition", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n) * s.E(n) + s.E(n + 1) * s.E(n + 1), s.E(2 * n + 1)};
       });

  add2("C1-1", 1, 2,
       "E(m+n-1) = E(m-1)*(E(n)+E(n-1)) + E(n)*(E(m-1)+E(m-2))", "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n - 1),
                 s.E(m - 1) * (s.E(n) + s.E(n - 1)) +
                     s.E(n) * (s.E(m - 1) + s.E(m - 2))};
       });
  add2("C1-2", 1, 2,
       "E(m+n-1) + E(m+n-2) = 2*E(m-1)*E(n) + (E(m-1)+E(m-2))*(E(n)+E(n-1))",
       "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n - 1) + s.E(m + n - 2),
                 2 * s.E(m - 1) * s.E(n) +
                     (s.E(m - 1) + s.E(m - 2)) * (s.E(n) + s.E(n - 1))};
       });
  add2("C1-3", 1, 1, "E(m+n) = E(m)*(E(n)+E(n-1)) + E(n)*(E(m)+E(m-1))",
       "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n), s.E(m) * (s.E(n) + s.E(n - 1)) +
                                 s.E(n) * (s.E(m) + s.E(m - 1))};
       });
  add2("C1-4", 1, 1,
       "E(m+n) + E(m+n-1) = 2*E(m)*E(n) + (E(m)+E(m-1))*(E(n)+E(n-1))",
       "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n) + s.E(m + n - 1),
                 2 * s.E(m) * s.E(n) +
                     (s.E(m) + s.E(m - 1)) * (s.E(n) + s.E(n - 1))};
       });

  add1("I4", 1, "Q(n-1) = E(n) + E(n-1)", "binet", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.Q(n - 1), s.E(n) + s.E(n - 1)};
       });
  add1("I3", 2, "E(n-1) + E(n-2) = 2*E(n) - Q(n-1)", "binet", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n - 1) + s.E(n - 2), 2 * s.E(n) - s.Q(n - 1)};
       });

  add1("L4", 1, "E(n) = b(n) + b(n-1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n), s.B(n) + s.B(n - 1)};
       });
  add1("L6", 2, "3*E(n-1) + E(n) = E(n+1) - E(n-2)", "recurrence", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {3 * s.E(n - 1) + s.E(n), s.E(n + 1) - s.E(n - 2)};
       });
  add1("SIMP", 2, "E(n)*E(n-2) - E(n-1)^2 = (-1)^(n-1)", "cassini", true,
       +[](const SeqTab& s, long n, long, long, int sign) -> LR {
         return {s.E(n) * s.E(n - 2) - s.E(n - 1) * s.E(n - 1),
                 sign * neg_pow(n - 1)};
       });
  add1("L7", 1, "E(n)^2 - E(n-1)^2 - 2*E(n)*E(n-1) = (-1)^(n-1)", "cassini",
       true,
       +[](const SeqTab& s, long n, long, long, int sign) -> LR {
         return {s.E(n) * s.E(n) - s.E(n - 1) * s.E(n - 1) -
                     2 * s.E(n) * s.E(n - 1),
                 sign * neg_pow(n - 1)};
       });
  add1("L13", 1, "Q(n) = E(n) + E(n+1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.Q(n), s.E(n) + s.E(n + 1)};
       });
  add1("DET2", 1, "(Q(n-1) - 2*b(n))*(-1)^n = 1", "cassini", true,
       +[](const SeqTab& s, long n, long, long, int sign) -> LR {
         return {(s.Q(n - 1) - 2 * s.B(n)) * (sign * neg_pow(n)), Int(1)};
       });

  add2("ID7", 1, 1,
       "E(m+n) + E(m+n-1) - b(m+n) = (E(m)+E(m-1)-b(m))*(E(n)+E(n-1)-b(n)) + "
       "b(m)*b(n) + E(m)*E(n)",
       "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n) + s.E(m + n - 1) - s.B(m + n),
                 (s.E(m) + s.E(m - 1) - s.B(m)) *
                         (s.E(n) + s.E(n - 1) - s.B(n)) +
                     s.B(m) * s.B(n) + s.E(m) * s.E(n)};
       });
  add2("ID8", 1, 1,
       "b(m+n) = b(n)*(E(m)+E(m-1)-b(m)) + b(m)*(E(n)+E(n-1)-b(n)) + E(m)*E(n)",
       "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.B(m + n), s.B(n) * (s.E(m) + s.E(m - 1) - s.B(m)) +
                                 s.B(m) * (s.E(n) + s.E(n - 1) - s.B(n)) +
                                 s.E(m) * s.E(n)};
       });
  add2("ID9", 1, 1, "E(m+n) = E(n)*(E(m)+E(m-1)) + E(m)*(E(n)+E(n-1))",
       "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n), s.E(n) * (s.E(m) + s.E(m - 1)) +
                                 s.E(m) * (s.E(n) + s.E(n - 1))};
       });
  add2("ID10", 1, 1,
       "E(m+n) + E(m+n-1) = (E(m)+E(m-1))*(E(n)+E(n-1)) + 2*E(m)*E(n)",
       "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n) + s.E(m + n - 1),
                 (s.E(m) + s.E(m - 1)) * (s.E(n) + s.E(n - 1)) +
                     2 * s.E(m) * s.E(n)};
       });
  add2("ID11", 1, 1, "Q(m+n-1) = Q(n-1)*Q(m-1) + 2*E(n)*E(m)", "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.Q(m + n - 1), s.Q(n - 1) * s.Q(m - 1) + 2 * s.E(n) * s.E(m)};
       });
  add2("ID12", 1, 1, "E(m+n) = E(m)*Q(n-1) + E(n)*Q(m-1)", "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n), s.E(m) * s.Q(n - 1) + s.E(n) * s.Q(m - 1)};
       });
  add2("ID13", 1, 1,
       "b(m+n) = b(n)*Q(m-1) + b(m)*Q(n-1) - 2*b(n)*b(m) + E(n)*E(m)",
       "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.B(m + n), s.B(n) * s.Q(m - 1) + s.B(m) * s.Q(n - 1) -
                                 2 * s.B(n) * s.B(m) + s.E(n) * s.E(m)};
       });

  add1("L11", 1, "b(n) = r(n) + (n odd ? 1 : 0)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.B(n), s.R(n) + (n % 2 != 0 ? 1 : 0)};
       });
  add1("L12", 1, "Qhat(n) = E(n+1) + E(n-1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.QH(n), s.E(n + 1) + s.E(n - 1)};
       });
  add1("C13", 0, "Qhat(n) = 4*r(n) + 2", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.QH(n), 4 * s.R(n) + 2};
       });
  add1("C16", 0, "Q(n) = 2*r(n+1) + 1", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.Q(n), 2 * s.R(n + 1) + 1};
       });
  add1("QHATQ", 1, "Qhat(n) = 2*Q(n-1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.QH(n), 2 * s.Q(n - 1)};
       });
  add1("L13A", 2, "E(n) = r(n) + r(n-1) + 1", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n), s.R(n) + s.R(n - 1) + 1};
       });

  add1("ID3", 1, "r(n) + E(n) = r(n+1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.R(n) + s.E(n), s.R(n + 1)};
       });
  add1("ID4", 1, "E(n) + Q(n-1) = E(n+1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n) + s.Q(n - 1), s.E(n + 1)};
       });
  add1("ID5", 1, "2*E(n) + Q(n-1) = Q(n)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {2 * s.E(n) + s.Q(n - 1), s.Q(n)};
       });
  add1("ID6", 1, "E(n) + Q(n-1) - r(n) = Q(n) - r(n+1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n) + s.Q(n - 1) - s.R(n), s.Q(n) - s.R(n + 1)};
       });
  add1("L22", 1, "Q(n-1) = b(n+1) - b(n-1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.Q(n - 1), s.B(n + 1) - s.B(n - 1)};
       });

  add1("C23-15", 1,
       "Q(n-1)^2 - (b(n)+r(n))*Q(n-1) + 2*b(n)*r(n) - E(n)^2 = (-1)^n",
       "cassini", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.Q(n - 1) * s.Q(n - 1) - (s.B(n) + s.R(n)) * s.Q(n - 1) +
                     2 * s.B(n) * s.R(n) - s.E(n) * s.E(n),
                 Int(neg_pow(n))};
       });
  add1("C23-16", 1, "E(n)^2 - (b(n)+r(n))*Q(n-1) + 2*b(n)*r(n) = 0", "cassini",
       false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n) * s.E(n) - (s.B(n) + s.R(n)) * s.Q(n - 1) +
                     2 * s.B(n) * s.R(n),
                 Int(0)};
       });
  add1("C23-17", 1, "2*E(n)^2 - Q(n-1)^2 = (-1)^(n-1)", "cassini", true,
       +[](const SeqTab& s, long n, long, long, int sign) -> LR {
         return {2 * s.E(n) * s.E(n) - s.Q(n - 1) * s.Q(n - 1),
                 sign * neg_pow(n - 1)};
       });
  add1("BINB", 1, "2*b(n) = (-1)^(n+1) + Q(n-1)", "binet", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {2 * s.B(n), neg_pow(n + 1) + s.Q(n - 1)};
       });

  add1("L24", 0, "a(n) = r(n) + 1", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.A(n), s.R(n) + 1};
       });
  add1("L25", 0, "a(n+1) = a(n) + E(n)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.A(n + 1), s.A(n) + s.E(n)};
       });
  add1("C26", 0, "E(n+1) = E(n) + r(n) + a(n)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n + 1), s.E(n) + s.R(n) + s.A(n)};
       });
  add1("C28", 1, "(a(n)+r(n))^2 - 2*E(n)^2 = (-1)^n", "cassini", true,
       +[](const SeqTab& s, long n, long, long, int sign) -> LR {
         Int t = s.A(n) + s.R(n);
         return {t * t - 2 * s.E(n) * s.E(n), sign * neg_pow(n)};
       });

  add2("I20", 1, 1, "a(m+n) = a(m)*a(n) + r(m)*r(n) + E(m)*E(n)", "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.A(m + n), s.A(m) * s.A(n) + s.R(m) * s.R(n) +
                                 s.E(m) * s.E(n)};
       });
  add2("I21", 1, 1, "r(m+n) = r(m)*a(n) + a(m)*r(n) + E(m)*E(n)", "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.R(m + n), s.R(m) * s.A(n) + s.A(m) * s.R(n) +
                                 s.E(m) * s.E(n)};
       });
  add2("I22", 1, 1, "E(m+n) = E(n)*(r(m)+a(m)) + E(m)*(r(n)+a(n))", "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.E(m + n), s.E(n) * (s.R(m) + s.A(m)) +
                                 s.E(m) * (s.R(n) + s.A(n))};
       });
  add2("I23", 1, 1,
       "r(m+n) + a(m+n) = 2*E(m)*E(n) + (r(m)+a(m))*(r(n)+a(n))", "addition",
       +[](const SeqTab& s, long n, long m, long, int) -> LR {
         return {s.R(m + n) + s.A(m + n),
                 2 * s.E(m) * s.E(n) +
                     (s.R(m) + s.A(m)) * (s.R(n) + s.A(n))};
       });

  add1("I24", 1, "a(n) + r(n) = Q(n-1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.A(n) + s.R(n), s.Q(n - 1)};
       });
  add1("I25", 1, "E(n+1) = E(n) + Q(n-1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.E(n + 1), s.E(n) + s.Q(n - 1)};
       });
  add1("I26", 0, "a(n+1) = a(n) + E(n)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.A(n + 1), s.A(n) + s.E(n)};
       });

  add1("L29-9", 1, "b(n) + E(n) = (-1)^(n+1) + b(n+1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {s.B(n) + s.E(n), neg_pow(n + 1) + s.B(n + 1)};
       });
  add1("L29-10", 1, "2*b(n) + E(n) = (-1)^(n+1) + E(n+1)", "bridge", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {2 * s.B(n) + s.E(n), neg_pow(n + 1) + s.E(n + 1)};
       });
  add1("I27", 1, "E(n)^2 = (-1)^n*r(n) + b(n)*Q(n-1)", "cassini", true,
       +[](const SeqTab& s, long n, long, long, int sign) -> LR {
         return {s.E(n) * s.E(n),
                 (sign * neg_pow(n)) * s.R(n) + s.B(n) * s.Q(n - 1)};
       });
  add1("I28", 1, "Q(n-1) = (-1)^n + 2*b(n)", "cassini", true,
       +[](const SeqTab& s, long n, long, long, int sign) -> LR {
         return {s.Q(n - 1), sign * neg_pow(n) + 2 * s.B(n)};
       });

  add1("BINA", 1, "2*a(n) = 1 + Q(n-1)", "binet", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {2 * s.A(n), 1 + s.Q(n - 1)};
       });
  add1("BINR", 1, "2*r(n) = Q(n-1) - 1", "binet", false,
       +[](const SeqTab& s, long n, long, long, int) -> LR {
         return {2 * s.R(n), s.Q(n - 1) - 1};
       });

  return t;
}

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = build_table();
  return t;
}

const Entry& find_entry(std::string_view code) {
  for (const Entry& e : table())
    if (e.info.code == code) return e;
  throw std::invalid_argument("unknown identity code: " + std::string(code));
}

void check_bounds(const Entry& e, long n, std::optional<long> m,
                  std::optional<long> k) {
  const IdentityInfo& info = e.info;
  std::string code(info.code);
  if (info.arity == 1) {
    if (m || k)
      throw std::invalid_argument("identity " + code + " takes one index");
  } else if (info.arity == 2) {
    if (!m)
      throw std::invalid_argument("identity " + code + " needs an index m");
    if (k)
      throw std::invalid_argument("identity " + code + " takes two indices");
  } else {
    if (!m || !k)
      throw std::invalid_argument("identity " + code + " needs indices a, b");
  }
  if (n < info.n_min)
    throw std::domain_error("identity " + code + " requires n >= " +
                            std::to_string(info.n_min));
  if (info.arity >= 2 && *m < info.m_min)
    throw std::domain_error("identity " + code + " requires m >= " +
                            std::to_string(info.m_min));
  if (info.arity == 3 && *k < info.m_min)
    throw std::domain_error("identity " + code + " requires b >= " +
                            std::to_string(info.m_min));
  if (e.pair_ok && !e.pair_ok(n, *m))
    throw std::domain_error("identity " + code + " requires m >= n");
}

IdentityCase eval_case(const Entry& e, const SeqTab& s, long n, long m, long k,
                       int sign) {
  LR lr = e.eval(s, n, m, k, sign);
  IdentityCase c;
  c.code = std::string(e.info.code);
  c.n = n;
  if (e.info.arity >= 2) c.m = m;
  if (e.info.arity == 3) c.k = k;
  c.lhs = std::move(lr.first);
  c.rhs = std::move(lr.second);
  c.pass = (c.lhs == c.rhs);
  return c;
}

IdentityCase check_signed(std::string_view code, long n, std::optional<long> m,
                          std::optional<long> k, int sign) {
  const Entry& e = find_entry(code);
  check_bounds(e, n, m, k);
  long mm = m.value_or(0), kk = k.value_or(0);
  SeqTab s(2 * n + mm + kk + 2);
  return eval_case(e, s, n, mm, kk, sign);
}

}  // namespace

std::vector<std::string_view> catalog() {
  std::vector<std::string_view> out;
  out.reserve(table().size());
  for (const Entry& e : table()) out.push_back(e.info.code);
  return out;
}

const IdentityInfo& identity_info(std::string_view code) {
  return find_entry(code).info;
}

IdentityCase check(std::string_view code, long n, std::optional<long> m,
                   std::optional<long> k) {
  return check_signed(code, n, m, k, +1);
}

IdentityCase check_flipped(std::string_view code, long n, std::optional<long> m,
                           std::optional<long> k) {
  const Entry& e = find_entry(code);
  if (!e.info.alternating)
    throw std::invalid_argument("identity " + std::string(code) +
                                " has no alternating factor to flip");
  return check_signed(code, n, m, k, -1);
}

IdentityReport check_range(std::string_view code, long n_max,
                           std::optional<long> m_max) {
  const Entry& e = find_entry(code);
  if (n_max < e.info.n_min)
    throw std::domain_error("identity " + std::string(code) +
                            " requires n_max >= " +
                            std::to_string(e.info.n_min));
  long m_cap = m_max.value_or(n_max);
  IdentityReport rep;
  rep.code = std::string(code);
  rep.n_max = n_max;
  if (e.info.arity >= 2) rep.m_max = m_cap;

  long off_cap = (e.info.arity == 3) ? std::min<long>(20, m_cap) : m_cap;
  SeqTab s(2 * n_max + (e.info.arity >= 2 ? off_cap : 0) +
           (e.info.arity == 3 ? off_cap : 0) + 2);

  auto run = [&](long n, long m, long k) {
    IdentityCase c = eval_case(e, s, n, m, k, +1);
    ++rep.checked;
    if (!c.pass) rep.failures.push_back(std::move(c));
  };

  switch (e.info.arity) {
    case 1:
      for (long n = e.info.n_min; n <= n_max; ++n) run(n, 0, 0);
      break;
    case 2:
      for (long n = e.info.n_min; n <= n_max; ++n)
        for (long m = e.info.m_min; m <= m_cap; ++m) {
          if (e.pair_ok && !e.pair_ok(n, m)) continue;
          run(n, m, 0);
        }
      break;
    default:
      for (long n = e.info.n_min; n <= n_max; ++n)
        for (long a = e.info.m_min; a <= off_cap; ++a)
          for (long b = e.info.m_min; b <= off_cap; ++b) run(n, a, b);
      break;
  }
  return rep;
}

bool flip_guard(std::string_view code, long n_limit) {
  const Entry& e = find_entry(code);
  if (!e.info.alternating)
    throw std::invalid_argument("identity " + std::string(code) +
                                " has no alternating factor to flip");
  for (long n = e.info.n_min; n <= n_limit; ++n)
    if (!check_flipped(code, n).pass) return true;
  return false;
}

}  // namespace pell
