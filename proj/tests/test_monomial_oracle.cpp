// Monomial-ideal membership oracle: dense max-power tables, nu-invariants
// without Groebner bases, and agreement with the general pipeline.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "oracle_helpers.hpp"

namespace {

using namespace fpinv;
using fpinv_test::make_ideal;

using I64s = std::vector<std::int64_t>;
using Exps = std::vector<std::vector<std::uint32_t>>;

MonomialIdeal mono23(std::uint32_t p) {
  return MonomialIdeal(Exps{{2, 0}, {0, 3}}, 2, PrimeModulus(p));
}

TEST(MaxPower, TableExamples) {
  MonomialIdeal a = mono23(3);
  EXPECT_EQ(max_power_membership({4, 0}, a, 10), 2);  // x^4 = (x^2)^2
  EXPECT_EQ(max_power_membership({2, 3}, a, 10), 2);  // x^2 * y^3
  EXPECT_EQ(max_power_membership({1, 2}, a, 10), 0);  // not even in a
  EXPECT_EQ(max_power_membership({0, 0}, a, 10), 0);
  EXPECT_EQ(max_power_membership({6, 6}, a, 10), 5);  // (x^2)^3 (y^3)^2
  EXPECT_EQ(max_power_membership({100, 0}, a, 10), 10);  // capped
}

TEST(MaxPower, Preconditions) {
  MonomialIdeal a = mono23(3);
  EXPECT_THROW(max_power_membership({1, 2, 3}, a, 5), PreconditionError);
  try {
    MonomialIdeal(Exps{}, 2, PrimeModulus(3));
    FAIL() << "expected generator rejection";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "monomial ideal needs at least one generator");
  }
  try {
    MonomialIdeal(Exps{{1, 2}}, 9, PrimeModulus(3));
    FAIL() << "expected variable-count rejection";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "monomial ideal needs 1..8 variables");
  }
  try {
    MonomialIdeal(Exps{{1}}, 2, PrimeModulus(3));
    FAIL() << "expected length rejection";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "exponent vector of wrong length");
  }
  try {
    MonomialIdeal(Exps{{0, 0}}, 2, PrimeModulus(3));
    FAIL() << "expected trivial rejection";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "invariants undefined for trivial ideal");
  }
}

TEST(MaxPower, MinimalizesGenerators) {
  MonomialIdeal a(Exps{{2, 0}, {0, 3}, {2, 1}, {4, 3}}, 2, PrimeModulus(3));
  ASSERT_EQ(a.gens.size(), 2u);  // x^2*y and x^4*y^3 are redundant
  EXPECT_EQ(a.gens[0], Monomial({2, 0}));
  EXPECT_EQ(a.gens[1], Monomial({0, 3}));
}

TEST(MonomialNu, KnownWindows) {
  EXPECT_EQ(monomial_nu_invariants(mono23(3), 1).members, (I64s{1, 2, 3, 4, 5}));
  EXPECT_EQ(monomial_nu_invariants(mono23(2), 2).members,
            (I64s{2, 3, 4, 5, 6, 7}));
}

TEST(MonomialNu, ClosedFormulaForPlaneMonomialPair) {
  // For a = (x^2, y^3) the nu-set at level e is
  //   { floor((a*p^e - 1)/2) + floor((b*p^e - 1)/3) : a, b >= 1 }
  // intersected with the window [0, 2*p^e).
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t e = 1; e <= 3; ++e) {
      std::int64_t pe = 1;
      for (std::uint32_t k = 0; k < e; ++k) pe *= p;
      std::vector<std::int64_t> expected;
      for (std::int64_t a = 1; a * pe <= 6 * pe; ++a) {
        for (std::int64_t b = 1; b * pe <= 6 * pe; ++b) {
          std::int64_t v = (a * pe - 1) / 2 + (b * pe - 1) / 3;
          if (v < 2 * pe) expected.push_back(v);
        }
      }
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()),
                     expected.end());
      EXPECT_EQ(monomial_nu_invariants(mono23(p), e).members, expected)
          << "p=" << p << " e=" << e;
    }
  }
}

TEST(MonomialNu, AgreesWithGroebnerPipeline) {
  struct Case {
    Exps exps;
    std::size_t n;
    std::vector<std::string> gens;
    std::uint32_t p;
    std::uint32_t e_top;
  };
  const std::vector<Case> cases = {
      {Exps{{2, 0}, {0, 3}}, 2, {"x^2", "y^3"}, 2, 3},
      {Exps{{2, 0}, {0, 3}}, 2, {"x^2", "y^3"}, 3, 3},
      {Exps{{2, 0}, {0, 3}}, 2, {"x^2", "y^3"}, 5, 2},
      {Exps{{1}}, 1, {"x"}, 2, 2},
      {Exps{{1}}, 1, {"x"}, 3, 2},
      {Exps{{1}}, 1, {"x"}, 5, 2},
      {Exps{{1}}, 1, {"x"}, 7, 2},
      {Exps{{1, 1}}, 2, {"x*y"}, 3, 2},
      {Exps{{2, 1}, {1, 2}}, 2, {"x^2*y", "x*y^2"}, 2, 2},
      {Exps{{2, 1}, {1, 2}}, 2, {"x^2*y", "x*y^2"}, 3, 2},
      {Exps{{1, 0, 0}, {0, 1, 1}}, 3, {"x", "y*z"}, 2, 2},
      {Exps{{2, 0, 0}, {0, 1, 1}}, 3, {"x^2", "y*z"}, 3, 1},
  };
  for (const Case& c : cases) {
    MonomialIdeal oracle(c.exps, c.n, PrimeModulus(c.p));
    Ideal pipeline =
        make_ideal(fpinv_test::ctx_for(static_cast<int>(c.n), c.p), c.gens);
    for (std::uint32_t e = 1; e <= c.e_top; ++e) {
      NuSet fast = monomial_nu_invariants(oracle, e);
      NuSet slow = nu_invariants(pipeline, e);
      EXPECT_EQ(fast.members, slow.members)
          << "p=" << c.p << " e=" << e << " gens " << c.gens[0];
      EXPECT_EQ(fast.r, slow.r);
      EXPECT_EQ(fast.pe, slow.pe);
    }
  }
}

TEST(MaxPower, TableSizeGuard) {
  MonomialIdeal a(Exps{{1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}}, 6,
                  PrimeModulus(2));
  std::vector<std::int64_t> huge(6, 127);
  EXPECT_THROW(max_power_membership(huge, a, 1000000), ResourceCapError);
}

}  // namespace
