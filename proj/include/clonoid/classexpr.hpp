#pragma once

#include <memory>
#include <string>
#include <vector>

#include "clonoid/boolfn.hpp"

namespace clonoid {

// Symbolic descriptor of a function class with decidable membership.
struct ClassExpr {
  enum class Kind {
    All,
    Empty,
    ConstVal,     // constant function with value a
    ValueAt0,     // f(0...0) = a
    ValueAt1,     // f(1...1) = a
    AltExactly,   // Alt(f) = k
    AltAtMost,    // Alt(f) <= k
    Monotone,
    Antitone,     // negate(f) monotone, i.e. member of {~}M
    SelfDual,
    Reflexive,
    Smin,
    Smaj,
    Linear,
    Separating,   // a-separating of rank k (k = -1 means infinity)
    Range2,       // range^2 signature: R set = rset, f(0)=a, f(1)=b
    Range2R,      // range^2 R set only (no endpoint constraint)
    NamedClone,
    Union,
    Intersect,
    NegCompose,   // {~}K
    Dual,         // K^d
  };

  Kind kind = Kind::Empty;
  int a = 0, b = 0, k = 0;
  // Bitmask over range^2 pair kinds: 1 = {0}, 2 = {1}, 4 = {0,1}.
  unsigned rset = 0;
  std::string clone_name;
  std::vector<ClassExpr> kids;

  static ClassExpr all() { return {Kind::All}; }
  static ClassExpr empty() { return {Kind::Empty}; }
  static ClassExpr unite(std::vector<ClassExpr> xs);
  static ClassExpr intersect(std::vector<ClassExpr> xs);
  static ClassExpr dual_of(ClassExpr e);
  static ClassExpr neg_compose(ClassExpr e);
  static ClassExpr named_clone(std::string name);
};

bool satisfies(const BoolFn& f, const ClassExpr& e);

// Primitive predicates shared with the clone registry.
bool is_monotone(const BoolFn& f);
bool is_selfdual(const BoolFn& f);
bool is_reflexive(const BoolFn& f);
bool is_smin(const BoolFn& f);
bool is_smaj(const BoolFn& f);
bool is_linear(const BoolFn& f);
// Every subset of f^-1(a) of size <= rank shares a coordinate constantly a;
// rank -1 means the whole preimage must.
bool is_separating(const BoolFn& f, int a, int rank);
bool is_projection(const BoolFn& f);
bool is_neg_projection(const BoolFn& f);
bool is_conjunction(const BoolFn& f);  // AND of a nonempty variable subset
bool is_disjunction(const BoolFn& f);
bool preserves0(const BoolFn& f);
bool preserves1(const BoolFn& f);

struct Range2Sig {
  unsigned rset = 0;  // bitmask as in ClassExpr::rset
  int a = 0, b = 0;
  std::string to_string() const;  // e.g. "F^{0,01}_{01}"
  std::string r_string() const;   // e.g. "F^{0,01}"
};
Range2Sig range2_signature(const BoolFn& f);

// Block-union mini-language: "Atom+Atom+..." or "Empty".  Atoms include
// Om, Om00..OmX1, Eq, Neq, C, C0, C1, Eiio, Eioi, Eiii, Eioo, M-family and
// their bars, Sd/Sd01/Sd10, Smin*/Smaj*/Refl*, and A/Ale alternation blocks
// like "A2_11", "Ale3", "Ale2_0X".
ClassExpr parse_class_expr(const std::string& text);
std::string class_expr_to_string(const ClassExpr& e);

}  // namespace clonoid
