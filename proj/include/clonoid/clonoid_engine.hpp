#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clonoid/boolfn.hpp"
#include "clonoid/classexpr.hpp"

namespace clonoid {

// Per-arity membership bitsets for arities 1..cap (cap <= 4).
struct FnSet {
  int cap = 3;
  std::array<std::vector<uint64_t>, 5> bits;

  explicit FnSet(int cap = 3);
  static FnSet from_functions(const std::vector<BoolFn>& fs, int cap);
  static FnSet from_expr(const ClassExpr& e, int cap);

  bool contains(const BoolFn& f) const;
  bool insert(const BoolFn& f);  // true if newly added
  uint64_t size() const;
  std::vector<BoolFn> to_functions() const;

  FnSet united(const FnSet& o) const;
  FnSet intersected(const FnSet& o) const;
  bool operator==(const FnSet& o) const = default;
};

// All compositions with outer function from I and inner tuple from J at a
// common arity <= J.cap.
FnSet class_compose(const FnSet& I, const FnSet& J);

// Arity-capped fixpoint closure of F under minors, right composition with
// generators of c1, and left composition with generators of c2.
FnSet clonoid_closure(const std::vector<BoolFn>& F, int c1, int c2, int cap);

struct StabilityResult {
  bool stable = true;
  std::string detail;          // human-readable witness description
  std::vector<BoolFn> inputs;  // offending f (and tuple, for left checks)
  std::optional<BoolFn> outer;
  std::optional<BoolFn> result;
};

// Right stability: K closed under minors and f * g for generators g of c.
// Exhaustive over members of arity <= 3; at arities 4..cap only the
// weight-determined (lambda) members are scanned.
StabilityResult check_right_stable(const ClassExpr& K, int c, int cap);
StabilityResult check_right_stable(const FnSet& K, int c, int cap);
// Same, but additionally scans every arity-4 member exhaustively.
StabilityResult check_right_stable_deep(const ClassExpr& K, int c);

// Left stability: g(f_1,...,f_n) in K for generators g of c and same-arity
// tuples from K; tuples exhaustive at arity <= 3, lambda-only at arity 4.
StabilityResult check_left_stable(const ClassExpr& K, int c, int cap);
StabilityResult check_left_stable(const FnSet& K, int c, int cap);

struct ClonoidDescriptor {
  std::string name;
  ClassExpr expr;
  std::string stab_c1, stab_c2;  // largest stabilizing clones, when tabled
};

struct EnumerationResult {
  bool covered = false;
  std::string note;  // for uncovered pairs: pointer to a covered refinement
  std::vector<ClonoidDescriptor> items;
};

// Symbolic enumeration of the (c1,c2)-clonoid lattice for the classified
// pairs; `cutoff` bounds the infinite families over M-family sources.
EnumerationResult enumerate_clonoids(const std::string& c1,
                                     const std::string& c2, int cutoff = 2);

// The unique maximal encoded clones c1, c2 leaving K right- resp. left-stable
// at the given cap.  Throws when the passing set has no unique maximum.
std::pair<std::string, std::string> largest_stabilizing(const ClassExpr& K,
                                                        int cap = 3);

// Checks over an enumerated lattice that the nonempty (c1, c2 + constants
// of S)-stable descriptors are exactly those containing those constants.
struct AdjunctionReport {
  bool ok = false;
  int matching = 0;  // descriptors stable for the extended target
  std::string detail;
};
AdjunctionReport constant_adjunction_check(const std::string& c1,
                                           const std::string& c2,
                                           const std::vector<int>& consts,
                                           int cap = 3, int cutoff = 2);

}  // namespace clonoid
