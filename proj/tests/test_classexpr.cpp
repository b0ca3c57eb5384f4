#include <doctest.h>

#include "clonoid/classexpr.hpp"

using namespace clonoid;

TEST_CASE("range2 signatures") {
  CHECK(range2_signature(xor3_fn()).to_string() == "F^{01}_{01}");
  CHECK(range2_signature(eqv_fn()).to_string() == "F^{0,1}_{11}");
  CHECK(range2_signature(const_fn(2, 0)).to_string() == "F^{0}_{00}");
  CHECK(range2_signature(maj_fn()).to_string() == "F^{01}_{01}");
}

TEST_CASE("primitive predicates") {
  CHECK(is_selfdual(maj_fn()));
  CHECK(is_selfdual(discr_fn()));
  CHECK_FALSE(is_selfdual(and_fn()));
  CHECK(is_monotone(th_fn(2, 4)));
  CHECK(is_reflexive(eqv_fn()));
  CHECK(is_linear(xor3_fn()));
  CHECK_FALSE(is_linear(maj_fn()));
  CHECK(is_conjunction(and_fn()));
  CHECK(is_conjunction(proj(1, 2)));
  CHECK_FALSE(is_conjunction(or_fn()));
  CHECK(is_disjunction(or_fn()));
  CHECK(is_projection(proj(2, 3)));
  CHECK(is_neg_projection(not_fn()));
}

TEST_CASE("separating ranks") {
  // Threshold 2-of-3 fails 0-separation only at rank 3.
  CHECK(is_separating(maj_fn(), 0, 2));
  CHECK_FALSE(is_separating(maj_fn(), 0, 3));
  // Threshold 2-of-4 is 0-separating of rank 3 but not of rank 4.
  CHECK(is_separating(th_fn(2, 4), 0, 3));
  CHECK_FALSE(is_separating(th_fn(2, 4), 0, -1));
  // Implication is 0-separating of every rank.
  CHECK(is_separating(imp_fn(), 0, -1));
  CHECK(is_separating(const_fn(2, 1), 0, -1));
}

TEST_CASE("class expression parsing") {
  auto e = parse_class_expr("Ale2_11");
  CHECK(satisfies(lambda_fn("101"), e));
  CHECK(satisfies(const_fn(3, 1), e));
  CHECK_FALSE(satisfies(lambda_fn("10101"), e));
  CHECK_FALSE(satisfies(xor3_fn(), e));

  CHECK(satisfies(or_fn(), parse_class_expr("Smaj01")));
  CHECK(satisfies(const_fn(2, 1), parse_class_expr("Smaj11")));
  CHECK_FALSE(satisfies(and_fn(), parse_class_expr("Smaj")));

  auto mixed = parse_class_expr("Om01+C");
  CHECK(satisfies(and_fn(), mixed));
  CHECK(satisfies(const_fn(2, 0), mixed));
  CHECK_FALSE(satisfies(not_fn(), mixed));

  CHECK_FALSE(satisfies(and_fn(), parse_class_expr("Empty")));
  CHECK(satisfies(and_fn(), parse_class_expr("Om")));
  CHECK_THROWS(parse_class_expr("Nonsense"));
}

TEST_CASE("clone atoms inside expressions") {
  auto mc = ClassExpr::named_clone("SM");
  CHECK(satisfies(maj_fn(), mc));
  CHECK_FALSE(satisfies(and_fn(), mc));
  auto d = ClassExpr::dual_of(parse_class_expr("Smaj01"));
  CHECK(satisfies(and_fn(), d));  // dual(and) = or, a member of Smaj01
}
