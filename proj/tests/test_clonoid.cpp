#include <doctest.h>

#include <algorithm>

#include "clonoid/clonoid_engine.hpp"
#include "clonoid/postlattice.hpp"

using namespace clonoid;

TEST_CASE("function set basics") {
  FnSet s(3);
  CHECK(s.size() == 0);
  CHECK(s.insert(and_fn()));
  CHECK_FALSE(s.insert(and_fn()));
  CHECK(s.contains(and_fn()));
  CHECK(s.size() == 1);
  auto e = FnSet::from_expr(parse_class_expr("C0"), 3);
  CHECK(e.size() == 3);  // one constant-zero function per arity
  CHECK(FnSet::from_expr(parse_class_expr("Om"), 2).size() == 20);
}

TEST_CASE("closure oracles") {
  auto refl = clonoid_closure({eqv_fn()}, clone_index("Sc"), clone_index("Ic"), 3);
  CHECK(refl == FnSet::from_expr(parse_class_expr("Refl11"), 3));

  auto ale = clonoid_closure({lambda_fn("101")}, clone_index("Mc"),
                             clone_index("Vc"), 3);
  CHECK(ale == FnSet::from_expr(parse_class_expr("Ale2_11"), 3));

  // The empty generating set closes to the empty clonoid.
  CHECK(clonoid_closure({}, clone_index("Omega"), clone_index("Omega"), 3)
            .size() == 0);
}

TEST_CASE("class composition") {
  auto I = FnSet::from_functions({or_fn()}, 4);
  auto J = FnSet::from_functions({lambda_fn("01000"), lambda_fn("00010")}, 4);
  auto IJ = class_compose(I, J);
  CHECK(IJ.contains(lambda_fn("01010")));
}

TEST_CASE("stability checks and refutation witnesses") {
  auto ale2 = parse_class_expr("Ale2_11");
  CHECK(check_right_stable(ale2, clone_index("Mc"), 5).stable);
  CHECK(check_left_stable(ale2, clone_index("Vc"), 4).stable);

  auto r = check_right_stable(ale2, clone_index("Lc"), 5);
  CHECK_FALSE(r.stable);
  REQUIRE(r.result.has_value());
  CHECK(*r.result == lambda_fn("10101"));

  auto l = check_left_stable(ale2, clone_index("Lambdac"), 4);
  CHECK_FALSE(l.stable);
  REQUIRE(l.outer.has_value());
  CHECK(*l.outer == and_fn());
  REQUIRE(l.result.has_value());
  CHECK(*l.result == lambda_fn("10101"));
}

TEST_CASE("largest stabilizing clones") {
  auto eq = largest_stabilizing(parse_class_expr("Eq"));
  CHECK(eq.first == "Tc");
  CHECK(eq.second == "Omega");
  auto om0x = largest_stabilizing(parse_class_expr("Om0X"));
  CHECK(om0x.first == "T0");
  CHECK(om0x.second == "T0");
}

TEST_CASE("enumeration of classified pairs") {
  auto om_ic = enumerate_clonoids("Omega", "Ic");
  CHECK(om_ic.covered);
  std::vector<std::string> names;
  for (const auto& d : om_ic.items) names.push_back(d.name);
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"C", "C0", "C1", "Empty", "Om"});

  CHECK(enumerate_clonoids("Mc", "Vc").items.size() == 56);
  CHECK(enumerate_clonoids("Sc", "Vc").items.size() == 123);
  CHECK(enumerate_clonoids("Mc", "Lambdac").items.size() == 56);
  CHECK(enumerate_clonoids("Sc", "Ic").items.size() == 1296);
  CHECK(enumerate_clonoids("S", "Ic").items.size() == 19);
  CHECK(enumerate_clonoids("Tc", "Ic").items.size() == 36);

  CHECK(enumerate_clonoids("Sc", "I0").items.size() == 1081);
  CHECK(enumerate_clonoids("Sc", "I").items.size() == 901);
  CHECK(enumerate_clonoids("Sc", "Istar").items.size() == 36);
  CHECK(enumerate_clonoids("Sc", "Omega1").items.size() == 31);
  CHECK(enumerate_clonoids("S", "I1").items.size() == 15);
  CHECK(enumerate_clonoids("Omega", "I").items.size() == 3);
  CHECK(enumerate_clonoids("T0", "Istar").items.size() == 3);

  auto un = enumerate_clonoids("L", "L");
  CHECK_FALSE(un.covered);
  CHECK_FALSE(un.note.empty());
}

TEST_CASE("enumerated descriptors are stable") {
  for (auto [c1, c2] : {std::pair<const char*, const char*>{"Omega", "Ic"},
                        {"T0", "Ic"}, {"Tc", "I"}}) {
    auto r = enumerate_clonoids(c1, c2);
    REQUIRE(r.covered);
    for (const auto& d : r.items) {
      CHECK_MESSAGE(check_right_stable(d.expr, clone_index(c1), 3).stable,
                    c1, ",", c2, " ", d.name);
      CHECK_MESSAGE(check_left_stable(d.expr, clone_index(c2), 3).stable,
                    c1, ",", c2, " ", d.name);
    }
  }
}

TEST_CASE("constant adjunction") {
  auto r = constant_adjunction_check("Sc", "Ic", {0, 1});
  CHECK(r.ok);
  CHECK(r.matching == 901);
  CHECK(constant_adjunction_check("Omega", "Ic", {0}).ok);
  CHECK(constant_adjunction_check("Tc", "Ic", {}).ok);
}
