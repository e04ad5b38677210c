// Reduced Groebner bases, ideal membership, sums/products/powers, and
// bracket powers.

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "oracle_helpers.hpp"

namespace {

using namespace fpinv;
using fpinv_test::basis_strings;
using fpinv_test::make_ideal;

TEST(Groebner, ReducedBasisExamples) {
  ContextPtr c3 = make_context({"x", "y"}, 3);
  EXPECT_EQ(basis_strings(make_ideal(c3, {"x^2 + y^2", "x*y"})),
            (std::vector<std::string>{"y^3", "x^2 + y^2", "x*y"}));
  EXPECT_EQ(basis_strings(make_ideal(c3, {"x + y", "x - y"})),
            (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(basis_strings(make_ideal(c3, {"x^2", "x"})),
            (std::vector<std::string>{"x"}));

  ContextPtr c5 = make_context({"x", "y"}, 5);
  EXPECT_EQ(basis_strings(make_ideal(c5, {"2*x^2 + 2*y^3"})),
            (std::vector<std::string>{"y^3 + x^2"}));
}

TEST(Groebner, MonomialMinimalization) {
  ContextPtr c3 = make_context({"x", "y"}, 3);
  Ideal I = make_ideal(c3, {"x^2*y", "x*y^3", "y^5", "x^2*y^2", "x^3*y"});
  EXPECT_EQ(basis_strings(I),
            (std::vector<std::string>{"y^5", "x*y^3", "x^2*y"}));
}

TEST(Groebner, DeterministicBasis) {
  ContextPtr c3 = make_context({"x", "y"}, 3);
  Ideal I = make_ideal(c3, {"x^2 + y^2", "x*y"});
  Ideal J = make_ideal(c3, {"x*y", "x^2 + y^2"});  // same ideal, swapped gens
  EXPECT_EQ(basis_strings(I), basis_strings(I));
  EXPECT_EQ(basis_strings(I), basis_strings(J));
  EXPECT_TRUE(ideal_equals(I, J));
}

TEST(Ideal, MembershipAndNormalForm) {
  ContextPtr c3 = make_context({"x", "y"}, 3);
  Ideal I = make_ideal(c3, {"x^2", "y^3"});
  EXPECT_FALSE(ideal_contains(I, parse_poly(c3, "x*y")));
  EXPECT_TRUE(ideal_contains(I, parse_poly(c3, "x^3 + x*y^3")));
  EXPECT_TRUE(ideal_contains(I, parse_poly(c3, "0")));

  Ideal J = make_ideal(c3, {"x^2 + y^2", "x*y"});
  EXPECT_EQ(normal_form(parse_poly(c3, "x^3"), J.reduced_basis()).str(), "0");
  EXPECT_EQ(normal_form(parse_poly(c3, "x + 1"), J.reduced_basis()).str(),
            "x + 1");
}

TEST(Ideal, EqualityAndTriviality) {
  ContextPtr c3 = make_context({"x", "y"}, 3);
  EXPECT_TRUE(ideal_equals(make_ideal(c3, {"1"}), make_ideal(c3, {"x", "x + 1"})));
  EXPECT_TRUE(make_ideal(c3, {"x", "x + 1"}).is_unit());
  EXPECT_TRUE(make_ideal(c3, {"2"}).is_unit());
  EXPECT_FALSE(make_ideal(c3, {"x"}).is_unit());
  EXPECT_TRUE(Ideal::unit(c3).is_unit());
  EXPECT_TRUE(Ideal::zero(c3).is_zero());
  EXPECT_TRUE(Ideal(c3, std::vector<Polynomial>{}).is_zero());
}

TEST(Ideal, SumsProductsPowers) {
  ContextPtr c3 = make_context({"x", "y"}, 3);
  Ideal I = make_ideal(c3, {"x^2", "y^3"});
  EXPECT_TRUE(ideal_equals(ideal_sum(I, make_ideal(c3, {"x*y"})),
                           make_ideal(c3, {"x^2", "y^3", "x*y"})));
  EXPECT_TRUE(ideal_equals(ideal_power(I, 2),
                           make_ideal(c3, {"x^4", "x^2*y^3", "y^6"})));
  EXPECT_TRUE(ideal_equals(ideal_power(I, 0), Ideal::unit(c3)));
  EXPECT_TRUE(ideal_equals(ideal_power(I, 2), ideal_mul(I, I)));
  IdealPowerCache cache;
  EXPECT_TRUE(ideal_equals(ideal_power(I, 3, cache), ideal_power(I, 3)));
  EXPECT_TRUE(
      ideal_equals(ideal_power(I, 3), ideal_mul(ideal_power(I, 2), I)));
}

TEST(Ideal, BracketPowers) {
  ContextPtr c2 = make_context({"x", "y"}, 2);
  Ideal I = make_ideal(c2, {"x + y"});
  EXPECT_EQ(basis_strings(bracket_power(I, 1)),
            (std::vector<std::string>{"x^2 + y^2"}));
  EXPECT_EQ(basis_strings(bracket_power(I, 2)),
            (std::vector<std::string>{"x^4 + y^4"}));

  ContextPtr c3 = make_context({"x", "y"}, 3);
  Ideal J = make_ideal(c3, {"x^2", "x*y + y^2"});
  // Bracket power of a two-generator ideal is generated by the generator
  // Frobenius powers.
  EXPECT_TRUE(ideal_equals(bracket_power(J, 1),
                           make_ideal(c3, {"x^6", "x^3*y^3 + y^6"})));
}

TEST(Ideal, ContextGuards) {
  EXPECT_THROW(make_context({"x", "x"}, 3), PreconditionError);
  EXPECT_THROW(
      make_context({"a", "b", "c", "d", "e", "f", "g", "h", "i"}, 3),
      PreconditionError);
  ContextPtr c3 = make_context({"x"}, 3);
  ContextPtr c5 = make_context({"x"}, 5);
  EXPECT_THROW(parse_poly(c3, "x") + parse_poly(c5, "x"), PreconditionError);
}

}  // namespace
