#include <doctest.h>

#include "clonoid/minorder.hpp"
#include "clonoid/postlattice.hpp"

using namespace clonoid;

namespace {

int id(const char* n) { return clone_index(n); }

std::vector<BoolFn> all_fns_upto(int cap) {
  std::vector<BoolFn> out;
  for (int n = 1; n <= cap; ++n)
    for (uint64_t t = 0; t < (uint64_t{1} << (1 << n)); ++t)
      out.emplace_back(n, t);
  return out;
}

}  // namespace

TEST_CASE("class labels") {
  CHECK(class_label(xor3_fn(), id("Sc")).text == "F^{01}_{01}");
  CHECK(class_label(eqv_fn(), id("Sc")).text == "F^{0,1}_{11}");
  CHECK(class_label(eqv_fn(), id("S")).text == "F^{0,1}");
  CHECK(class_label(xor3_fn(), id("Mc")).text == "A3_01");
  CHECK(class_label(const_fn(2, 0), id("Tc")).text == "C0");
  CHECK(class_label(and_fn(), id("Tc")).text == "Om01");
  CHECK(class_label(eqv_fn(), id("T1")).text == "OmX1-nonconst");
  CHECK(class_label(not_fn(), id("Omega")).text == "Om-nonconst");
}

TEST_CASE("brute-force minor order examples") {
  CHECK(leq_minor_bruteforce(lambda_fn("010"), lambda_fn("0101"), id("M")));
  CHECK(leq_minor_bruteforce(not_fn(), and_fn(), id("Omega")));
  CHECK_FALSE(
      leq_minor_bruteforce(lambda_fn("0101"), lambda_fn("010"), id("M")));
  CHECK(leq_minor_bruteforce(and_fn(), and_fn(), id("Ic")));
  CHECK_FALSE(leq_minor_bruteforce(not_fn(), and_fn(), id("Tc")));
  CHECK_THROWS(leq_minor_bruteforce(BoolFn(4, 1), and_fn(), id("Omega")));
}

TEST_CASE("closed-form labels agree with brute force at arity <= 2") {
  auto fns = all_fns_upto(2);
  for (const char* cn :
       {"M", "M0", "M1", "Mc", "Sc", "S", "Tc", "T0", "T1", "Omega"}) {
    int c = id(cn);
    for (const auto& f : fns)
      for (const auto& g : fns) {
        bool brute = leq_minor_bruteforce(f, g, c);
        bool closed = label_leq(class_label(f, c), class_label(g, c));
        CHECK_MESSAGE(brute == closed, cn, " f=", fn_to_string(f),
                      " g=", fn_to_string(g));
      }
  }
}

TEST_CASE("minor posets") {
  CHECK(minor_poset(id("Omega")).n == 3);
  CHECK(minor_poset(id("Sc")).n == 16);
  CHECK(minor_poset(id("S")).n == 7);
  CHECK(minor_poset(id("Tc")).n == 6);
  CHECK(minor_poset(id("T0")).n == 4);
  CHECK(minor_poset(id("T1")).n == 4);
  auto mc0 = minor_poset(id("Mc"), 0);
  CHECK(mc0.n == 4);
  CHECK(mc0.covers.empty());  // four incomparable component bottoms
  CHECK(minor_poset(id("M"), 2).n == 6);
  CHECK_THROWS(minor_poset(id("M")));
  CHECK_THROWS(minor_poset(id("Lc")));
}

TEST_CASE("downset counts match the classified lattices") {
  CHECK(downsets(minor_poset(id("Sc"))).size() == 1296);
  CHECK(downsets(minor_poset(id("S"))).size() == 19);
  CHECK(downsets(minor_poset(id("Tc"))).size() == 36);
  CHECK(downsets(minor_poset(id("T0"))).size() == 9);
  CHECK(downsets(minor_poset(id("T1"))).size() == 9);
  CHECK(downsets(minor_poset(id("Omega"))).size() == 5);
}

TEST_CASE("downsets of an antichain") {
  LabeledPoset p(2, {}, {0, 1});
  CHECK(downsets(p).size() == 4);
}
