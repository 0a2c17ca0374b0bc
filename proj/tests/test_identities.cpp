#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "pell/identities.hpp"
#include "pell/sequences.hpp"

using pell::Int;
using pell::SequenceId;

TEST_CASE("catalog shape") {
  auto codes = pell::catalog();
  CHECK(codes.size() == 54);
  std::set<std::string_view> seen(codes.begin(), codes.end());
  CHECK(seen.size() == codes.size());
  for (const char* must :
       {"I-01", "I-02", "I-03", "C1-1", "C1-3", "SIMP", "DET2", "ID9", "QHATQ",
        "BINA", "BINR", "BINB", "I27", "I28", "L29-10"})
    CHECK(seen.count(must) == 1);
}

TEST_CASE("catalog metadata") {
  const pell::IdentityInfo& tri = pell::identity_info("I-01");
  CHECK(tri.arity == 3);
  CHECK(tri.n_min == 0);

  const pell::IdentityInfo& two = pell::identity_info("I-02");
  CHECK(two.arity == 2);

  const pell::IdentityInfo& simp = pell::identity_info("SIMP");
  CHECK(simp.arity == 1);
  CHECK(simp.n_min == 2);
  CHECK(simp.alternating);

  CHECK_FALSE(pell::identity_info("I4").alternating);
  CHECK(pell::identity_info("C1-1").arity == 2);
  CHECK(pell::identity_info("C1-1").m_min == 2);
  CHECK_THROWS_AS(pell::identity_info("NOPE"), std::invalid_argument);
}

TEST_CASE("single cases carry exact values") {
  // E(3+4) = 169 through the two-index addition law
  pell::IdentityCase c = pell::check("ID9", 3, 4);
  CHECK(c.pass);
  CHECK(c.lhs == 169);
  CHECK(c.rhs == 169);
  CHECK(c.m.has_value());
  CHECK(*c.m == 4);
  CHECK_FALSE(c.k.has_value());

  // Simpson at n=6: E(6)*E(4) - E(5)^2 = (-1)^5
  pell::IdentityCase s = pell::check("SIMP", 6);
  CHECK(s.pass);
  CHECK(s.lhs == 70 * 12 - 29 * 29);
  CHECK(s.lhs == -1);

  // three-index case
  pell::IdentityCase t = pell::check("I-01", 2, 3, 4);
  CHECK(t.pass);
  CHECK(t.k.has_value());
}

TEST_CASE("every cataloged identity sweeps clean") {
  for (std::string_view code : pell::catalog()) {
    const pell::IdentityInfo& info = pell::identity_info(code);
    pell::IdentityReport rep = (info.arity == 1)
                                   ? pell::check_range(code, 60)
                                   : pell::check_range(code, 25, 25);
    INFO("identity ", std::string(code));
    CHECK(rep.failures.empty());
    CHECK(rep.checked > 0);
  }
}

TEST_CASE("report counts match the swept grid") {
  // one-parameter: n_min=1 means n in [1, 30]
  pell::IdentityReport one = pell::check_range("I4", 30);
  CHECK(one.checked == 30);
  CHECK(one.n_max == 30);

  // I-03 allows n = 0
  CHECK(pell::check_range("I-03", 30).checked == 31);

  // two-parameter full grid: n,m in [1,10]
  pell::IdentityReport grid = pell::check_range("ID9", 10, 10);
  CHECK(grid.checked == 100);

  // the ordered pair entry only sweeps m >= n
  pell::IdentityReport half = pell::check_range("I-02", 10, 10);
  CHECK(half.checked == 11 * 12 / 2);  // pairs with 0 <= n <= m <= 10
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(pell::check("NOPE", 3), std::invalid_argument);
  CHECK_THROWS_AS(pell::check("I4", 0), std::domain_error);
  CHECK_THROWS_AS(pell::check("SIMP", 1), std::domain_error);
  CHECK_THROWS_AS(pell::check("I4", 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(pell::check("ID9", 3), std::invalid_argument);
  CHECK_THROWS_AS(pell::check("ID9", 0, 3), std::domain_error);
  CHECK_THROWS_AS(pell::check("C1-1", 1, 1), std::domain_error);
  CHECK_THROWS_AS(pell::check("I-01", 1, 2), std::invalid_argument);
  // ordered-pair rule: m must dominate n
  CHECK_THROWS_AS(pell::check("I-02", 5, 2), std::domain_error);
  CHECK(pell::check("I-02", 2, 5).pass);
  CHECK(pell::check("I-02", 5, 5).pass);
  CHECK_THROWS_AS(pell::check_range("SIMP", 1), std::domain_error);
}

TEST_CASE("alternating entries flip to a failing form") {
  int alternating = 0;
  for (std::string_view code : pell::catalog()) {
    if (!pell::identity_info(code).alternating) continue;
    ++alternating;
    INFO("identity ", std::string(code));
    CHECK(pell::flip_guard(code));
  }
  CHECK(alternating == 7);
  // the flipped evaluation itself: Simpson with the sign negated fails at n=2
  pell::IdentityCase f = pell::check_flipped("SIMP", 2);
  CHECK_FALSE(f.pass);
  CHECK_THROWS_AS(pell::check_flipped("I4", 2), std::invalid_argument);
  CHECK_THROWS_AS(pell::flip_guard("I4"), std::invalid_argument);
}

TEST_CASE("equivalent addition laws agree case by case") {
  for (long n = 1; n <= 30; ++n)
    for (long m = 1; m <= 30; ++m) {
      pell::IdentityCase a = pell::check("ID9", n, m);
      pell::IdentityCase b = pell::check("C1-3", n, m);
      CHECK(a.pass);
      CHECK(b.pass);
      CHECK(a.lhs == b.lhs);
      CHECK(a.rhs == b.rhs);
    }
}

TEST_CASE("two-index addition laws against direct sums") {
  std::vector<Int> e = pell::terms(SequenceId::E, 0, 62);
  for (long n = 1; n <= 30; ++n)
    for (long m = 1; m <= 30; ++m) {
      CHECK(pell::check("ID9", n, m).lhs == e[static_cast<size_t>(m + n)]);
      CHECK(pell::check("ID12", n, m).lhs == e[static_cast<size_t>(m + n)]);
    }
}

TEST_CASE("formula strings are present and distinct") {
  std::set<std::string_view> formulas;
  for (std::string_view code : pell::catalog()) {
    const pell::IdentityInfo& info = pell::identity_info(code);
    CHECK_FALSE(info.formula.empty());
    CHECK_FALSE(info.family.empty());
    formulas.insert(info.formula);
  }
  // L25 and I26 state the same fact in two sections; everything else is unique
  CHECK(formulas.size() >= pell::catalog().size() - 1);
}
