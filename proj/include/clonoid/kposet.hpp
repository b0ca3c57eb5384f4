#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clonoid/boolfn.hpp"

namespace clonoid {

// Finite poset (at most 64 elements) with labels in [0, k-1] and optional
// distinguished bottom/top.
struct LabeledPoset {
  int n = 0;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
  std::vector<uint64_t> up;                 // up[i] = bitmask of {j : i <= j}
  std::vector<int> labels;
  int bottom = -1;  // -1 if not designated
  int top = -1;
  std::vector<std::string> names;  // optional element names

  LabeledPoset() = default;
  LabeledPoset(int n, std::vector<std::pair<int, int>> covers,
               std::vector<int> labels, int bottom = -1, int top = -1,
               std::vector<std::string> names = {});

  bool leq(int a, int b) const { return (up[a] >> b) & 1; }
  std::string to_json() const;
  std::string to_dot() const;
};

enum class HomMode { Free, BotPreserving, TopPreserving, BotTopPreserving };

// The n-cube ordered componentwise, labeled by f, bottom/top designated.
LabeledPoset fn_poset(const BoolFn& f);

// Alternating 2-chain C^k_a: k+1 elements, labels a, 1-a, a, ...
LabeledPoset chain_poset(int k, int a);

struct HomResult {
  bool exists = false;
  std::vector<int> witness;  // image of each element of P, when exists
};
HomResult hom_exists(const LabeledPoset& P, const LabeledPoset& Q, HomMode mode);

// Longest chain from bottom with consecutive labels distinct; lexicographically
// smallest element sequence among the longest.
std::vector<int> longest_alternating_chain(const LabeledPoset& P);

// Alternation depth of every element (longest alternating chain from bottom).
std::vector<int> alt_depth(const LabeledPoset& P);

struct Collapse {
  LabeledPoset chain;
  std::vector<int> hom;  // element -> chain position
};
// Homomorphic collapse of a binary-labeled poset with bottom onto its longest
// alternating chain, via x -> position d(x).
Collapse collapse_to_chain(const LabeledPoset& P);

}  // namespace clonoid
