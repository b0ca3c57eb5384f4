#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clonoid {

inline constexpr int kMaxArity = 6;

// A Boolean function of arity 1..6, stored as a truth table in a uint64.
// Input tuples (a1,...,an) index the table big-endian with x1 most
// significant: index = a1*2^(n-1) + ... + an.  Bit i of `table` is the value
// on the tuple with index i.
struct BoolFn {
  int arity = 1;
  uint64_t table = 0;

  BoolFn() = default;
  BoolFn(int n, uint64_t t);

  bool operator==(const BoolFn&) const = default;
  bool operator<(const BoolFn& o) const {
    return arity != o.arity ? arity < o.arity : table < o.table;
  }

  int rows() const { return 1 << arity; }
  uint64_t row_mask() const {
    return rows() == 64 ? ~uint64_t{0} : (uint64_t{1} << rows()) - 1;
  }
  int value_at_index(int idx) const { return int((table >> idx) & 1); }
};

int eval(const BoolFn& f, const std::vector<int>& input);

// An argument substitution sigma: [1,n] -> [1,m] taking n-ary functions to
// m-ary minors.
struct ArgMap {
  int source_arity;  // n
  int target_arity;  // m
  std::vector<int> map;  // size n, entries in [1,m]

  ArgMap(int n, int m, std::vector<int> sigma);
};

BoolFn minor(const BoolFn& g, const ArgMap& sigma);
BoolFn compose(const BoolFn& f, const std::vector<BoolFn>& gs);
// (f*g)(a1,...,a_{m+n-1}) = f(g(a1,...,an), a_{n+1}, ..., a_{m+n-1}).
BoolFn star(const BoolFn& f, const BoolFn& g);

BoolFn dual(const BoolFn& f);
BoolFn negate_fn(const BoolFn& f);

int essential_arity(const BoolFn& f);

struct Alternation {
  int alt = 0;                 // number of label changes on the best chain
  std::vector<int> depth;      // depth[idx] per tuple index
};
Alternation alternation(const BoolFn& f);
int alt(const BoolFn& f);

bool is_constant(const BoolFn& f);

// f(a) = c[w(a)] where w is Hamming weight; arity = c.size()-1 (>= 1), or a
// unary constant when c has a single entry.
BoolFn lambda_fn(const std::vector<int>& c);
BoolFn lambda_fn(const std::string& bits);

// Named functions.
BoolFn proj(int i, int n);             // pr_i^(n), 1-based
BoolFn const_fn(int n, int v);
BoolFn not_fn();                       // unary negation
BoolFn id_fn();
BoolFn and_fn();
BoolFn or_fn();
BoolFn xor_fn();
BoolFn imp_fn();                       // x1 -> x2
BoolFn nimp_fn();                      // ~x1 & x2 (dual of ->)
BoolFn eqv_fn();                       // x1 <-> x2
BoolFn maj_fn();                       // ternary majority
BoolFn xor3_fn();                      // x1 + x2 + x3
BoolFn orand_fn();                     // x1 | (x2 & x3)
BoolFn andor_fn();                     // x1 & (x2 | x3)
BoolFn discr_fn();                     // t(x,y,z) = z if x == y else x
BoolFn th_fn(int k, int n);            // 1 iff at least k inputs are 1

// Serialization: "n:HEX" with tuple-index 0 at the least significant bit.
std::string fn_to_string(const BoolFn& f);
BoolFn parse_fn(const std::string& s);

}  // namespace clonoid
