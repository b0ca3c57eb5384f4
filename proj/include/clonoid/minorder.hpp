#pragma once

#include <string>
#include <vector>

#include "clonoid/boolfn.hpp"
#include "clonoid/classexpr.hpp"
#include "clonoid/kposet.hpp"

namespace clonoid {

// f <=_C g when f = g(h_1,...,h_m) for members h_i of C with arity f.arity.
// Decided by exhaustive search (fast paths for the six discriminator source
// clones, selector backtracking with per-column member pruning otherwise).
bool leq_minor_bruteforce(const BoolFn& f, const BoolFn& g, int clone_id);

// Equivalence-class label of f under <=_C for the ten classified source
// clones: M family -> (Alt, endpoint values); Sc -> F^R_{ab}; S -> F^R;
// Tc/T0/T1/Omega -> constant/value-block labels.
struct MinorClassLabel {
  std::string source;  // clone name
  int k = -1;          // M family: Alt value
  int a = -1, b = -1;  // endpoint values f(0...0), f(1...1) where relevant
  Range2Sig sig{};     // Sc/S payload
  std::string text;    // serialized label, e.g. "A3_01", "F^{0,01}_{01}"
};

MinorClassLabel class_label(const BoolFn& f, int clone_id);

// Closed-form comparability of two labels from the same source clone.
bool label_leq(const MinorClassLabel& x, const MinorClassLabel& y);

// The minor poset of a classified source clone.  The M-family posets are
// infinite; `cutoff` bounds them: for Mc it is the per-component chain index
// (cutoff 0 keeps each component's least class), for M/M0/M1 it bounds Alt.
LabeledPoset minor_poset(int clone_id, int cutoff = -1);

// All downsets of P as element bitmasks, ascending.  Guarded to |P| <= 24.
std::vector<uint64_t> downsets(const LabeledPoset& P);

}  // namespace clonoid
