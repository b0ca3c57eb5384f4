#include <doctest.h>

#include <algorithm>

#include "clonoid/kposet.hpp"

using namespace clonoid;

namespace {

bool chain_hom(int k, int a, int l, int b, HomMode mode) {
  return hom_exists(chain_poset(k, a), chain_poset(l, b), mode).exists;
}

}  // namespace

TEST_CASE("chain poset shape") {
  auto c = chain_poset(3, 0);
  CHECK(c.n == 4);
  CHECK(c.labels == std::vector<int>{0, 1, 0, 1});
  CHECK(c.leq(0, 3));
  CHECK_FALSE(c.leq(3, 0));
}

TEST_CASE("chain homomorphisms match the closed forms") {
  for (int k = 0; k <= 5; ++k)
    for (int a = 0; a < 2; ++a)
      for (int l = 0; l <= 5; ++l)
        for (int b = 0; b < 2; ++b) {
          int atop = a ^ (k & 1), btop = b ^ (l & 1);
          CHECK(chain_hom(k, a, l, b, HomMode::Free) ==
                (k < l || (k == l && a == b)));
          CHECK(chain_hom(k, a, l, b, HomMode::BotPreserving) ==
                (k <= l && a == b));
          CHECK(chain_hom(k, a, l, b, HomMode::TopPreserving) ==
                (k <= l && atop == btop));
          // A length-0 chain has bottom = top, so it only maps into another
          // length-0 chain when both endpoints must be preserved.
          CHECK(chain_hom(k, a, l, b, HomMode::BotTopPreserving) ==
                (k <= l && a == b && (l - k) % 2 == 0 && (k > 0 || l == 0)));
        }
}

TEST_CASE("function posets and alternation depth") {
  auto p = fn_poset(xor3_fn());
  CHECK(p.n == 8);
  CHECK(p.bottom == 0);
  CHECK(p.top == 7);
  auto d = alt_depth(p);
  CHECK(*std::max_element(d.begin(), d.end()) == 3);
  auto chain = longest_alternating_chain(p);
  CHECK(chain.size() == 4);
  CHECK(chain.front() == 0);
  for (size_t i = 1; i < chain.size(); ++i) {
    CHECK(p.leq(chain[i - 1], chain[i]));
    CHECK(p.labels[chain[i - 1]] != p.labels[chain[i]]);
  }
}

TEST_CASE("collapse to chain is a homomorphism") {
  auto p = fn_poset(maj_fn());
  auto c = collapse_to_chain(p);
  CHECK(c.chain.n == 2);
  for (int x = 0; x < p.n; ++x) {
    CHECK(c.chain.labels[c.hom[x]] == p.labels[x]);
    for (int y = 0; y < p.n; ++y)
      if (p.leq(x, y)) CHECK(c.chain.leq(c.hom[x], c.hom[y]));
  }
}

TEST_CASE("poset validation") {
  CHECK_THROWS(LabeledPoset(2, {{0, 1}, {1, 0}}, {0, 1}));
  CHECK_THROWS(LabeledPoset(2, {}, {0, 1}, 0, 1));  // bottom not a minimum
}

TEST_CASE("export formats") {
  auto p = chain_poset(1, 0);
  CHECK(p.to_dot().find("digraph") != std::string::npos);
  CHECK(p.to_json().find("\"covers\"") != std::string::npos);
}
