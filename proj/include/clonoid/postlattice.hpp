#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clonoid/boolfn.hpp"

namespace clonoid {

// Registry of the 54 encoded clones: membership predicate, generating set,
// order (computed from membership at arities 1..4 and cached), duality.
struct CloneInfo {
  std::string name;
  std::string description;
};

int clone_count();
int clone_index(std::string_view name);        // -1 when unknown
CloneInfo clone_info(int id);
std::vector<std::string> clone_names();

bool clone_contains(int id, const BoolFn& f);
bool clone_contains_by_name(const std::string& name, const BoolFn& f);

// All n-ary members, n <= 4.
std::vector<BoolFn> clone_members(int id, int arity);
// Bitset over arity-n truth tables (bit t set iff BoolFn(n,t) is a member).
const std::vector<uint64_t>& clone_member_bits(int id, int arity);

std::vector<BoolFn> clone_generators(int id);

bool clone_leq(int c, int d);
// Cover edges of the clone lattice (transitive reduction of the order).
std::vector<std::pair<int, int>> clone_covers();

int dual_clone(int id);

// Least arity-capped closure of F under projections, minors, and composition.
std::vector<BoolFn> clone_closure_upto(const std::vector<BoolFn>& F, int cap);

}  // namespace clonoid
