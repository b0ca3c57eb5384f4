#include <doctest.h>

#include "clonoid/boolfn.hpp"

using namespace clonoid;

TEST_CASE("serialization") {
  CHECK(fn_to_string(or_fn()) == "2:E");
  CHECK(fn_to_string(xor3_fn()) == "3:96");
  CHECK(fn_to_string(maj_fn()) == "3:E8");
  CHECK(fn_to_string(orand_fn()) == "3:F8");
  CHECK(fn_to_string(id_fn()) == "1:2");
  for (auto f : {and_fn(), imp_fn(), discr_fn(), th_fn(2, 4)})
    CHECK(parse_fn(fn_to_string(f)) == f);
  CHECK_THROWS(parse_fn("7:0"));
  CHECK_THROWS(parse_fn("2:"));
}

TEST_CASE("eval and index convention") {
  // index = a1*2^(n-1) + ... + an, x1 most significant
  CHECK(eval(imp_fn(), {1, 0}) == 0);
  CHECK(eval(imp_fn(), {0, 1}) == 1);
  CHECK(eval(discr_fn(), {0, 1, 1}) == 0);  // x != y -> x
  CHECK(eval(discr_fn(), {1, 1, 0}) == 0);  // x == y -> z
  CHECK(eval(th_fn(2, 4), {1, 0, 1, 0}) == 1);
  CHECK(eval(th_fn(3, 4), {1, 0, 1, 0}) == 0);
}

TEST_CASE("lambda functions") {
  CHECK(lambda_fn("101") == eqv_fn());
  CHECK(lambda_fn("0101") == xor3_fn());
  CHECK(lambda_fn("0") == const_fn(1, 0));
  CHECK(lambda_fn("01") == id_fn());
  CHECK(lambda_fn("10") == not_fn());
  CHECK(alt(lambda_fn("10101")) == 4);
}

TEST_CASE("minor and compose") {
  // or(x,x) = id
  CHECK(minor(or_fn(), ArgMap(2, 1, {1, 1})) == id_fn());
  // maj(x,x,y) = x
  CHECK(minor(maj_fn(), ArgMap(3, 2, {1, 1, 2})) == proj(1, 2));
  CHECK(compose(or_fn(), {lambda_fn("01000"), lambda_fn("00010")}) ==
        lambda_fn("01010"));
  CHECK(compose(and_fn(), {lambda_fn("11101"), lambda_fn("10111")}) ==
        lambda_fn("10101"));
}

TEST_CASE("star composition") {
  CHECK(star(lambda_fn("101"), xor3_fn()) == lambda_fn("10101"));
  // Substituting a unary constant fixes the first argument; the result keeps
  // a fictitious first variable and matches the shorter pattern on the rest.
  auto s1 = star(lambda_fn("0101"), const_fn(1, 0));
  CHECK(s1.arity == 3);
  CHECK(minor(s1, ArgMap(3, 2, {1, 1, 2})) == lambda_fn("010"));
  auto s2 = star(lambda_fn("10101"), const_fn(1, 0));
  CHECK(s2.arity == 4);
  CHECK(minor(s2, ArgMap(4, 3, {1, 1, 2, 3})) == lambda_fn("1010"));
  CHECK(star(id_fn(), const_fn(1, 0)) == const_fn(1, 0));
  CHECK(star(proj(1, 2), or_fn()).arity == 3);
}

TEST_CASE("alternation") {
  CHECK(alt(const_fn(3, 1)) == 0);
  CHECK(alt(maj_fn()) == 1);
  CHECK(alt(xor_fn()) == 2);
  CHECK(alt(xor3_fn()) == 3);
  CHECK(alt(not_fn()) == 1);
  CHECK(is_constant(const_fn(2, 0)));
  CHECK_FALSE(is_constant(and_fn()));
}

TEST_CASE("dual and negation") {
  CHECK(dual(and_fn()) == or_fn());
  CHECK(dual(th_fn(2, 4)) == th_fn(3, 4));
  CHECK(dual(xor3_fn()) == xor3_fn());
  CHECK(dual(imp_fn()) == nimp_fn());
  CHECK(negate_fn(negate_fn(maj_fn())) == maj_fn());
}

TEST_CASE("essential arity") {
  CHECK(essential_arity(proj(2, 3)) == 1);
  CHECK(essential_arity(const_fn(3, 1)) == 0);
  CHECK(essential_arity(maj_fn()) == 3);
}
