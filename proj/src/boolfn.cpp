#include "clonoid/boolfn.hpp"

#include <algorithm>
#include <bit>

namespace clonoid {

BoolFn::BoolFn(int n, uint64_t t) : arity(n), table(t) {
  if (n < 1 || n > kMaxArity) throw std::invalid_argument("arity out of range");
  if (t & ~row_mask()) throw std::invalid_argument("table bits beyond 2^arity");
}

int eval(const BoolFn& f, const std::vector<int>& input) {
  if (int(input.size()) != f.arity)
    throw std::invalid_argument("input length does not match arity");
  int idx = 0;
  for (int v : input) idx = (idx << 1) | (v & 1);
  return f.value_at_index(idx);
}

ArgMap::ArgMap(int n, int m, std::vector<int> sigma)
    : source_arity(n), target_arity(m), map(std::move(sigma)) {
  if (int(map.size()) != n) throw std::invalid_argument("sigma size != source arity");
  for (int v : map)
    if (v < 1 || v > m) throw std::invalid_argument("sigma value out of range");
}

BoolFn minor(const BoolFn& g, const ArgMap& sigma) {
  if (sigma.source_arity != g.arity)
    throw std::invalid_argument("sigma source arity mismatch");
  int m = sigma.target_arity, n = g.arity;
  uint64_t t = 0;
  for (int a = 0; a < (1 << m); ++a) {
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      int bit = (a >> (m - sigma.map[i])) & 1;
      idx = (idx << 1) | bit;
    }
    t |= uint64_t(g.value_at_index(idx)) << a;
  }
  return BoolFn(m, t);
}

BoolFn compose(const BoolFn& f, const std::vector<BoolFn>& gs) {
  if (int(gs.size()) != f.arity)
    throw std::invalid_argument("inner count != outer arity");
  int m = gs.front().arity;
  for (const auto& g : gs)
    if (g.arity != m) throw std::invalid_argument("inner arities differ");
  uint64_t t = 0;
  for (int a = 0; a < (1 << m); ++a) {
    int idx = 0;
    for (const auto& g : gs) idx = (idx << 1) | g.value_at_index(a);
    t |= uint64_t(f.value_at_index(idx)) << a;
  }
  return BoolFn(m, t);
}

BoolFn star(const BoolFn& f, const BoolFn& g) {
  int m = f.arity, n = g.arity;
  int r = m + n - 1;
  if (r > kMaxArity) throw std::invalid_argument("star product exceeds max arity");
  uint64_t t = 0;
  for (int a = 0; a < (1 << r); ++a) {
    // a = (a1..an, a_{n+1}..a_{m+n-1}) big-endian.
    int head = a >> (r - n);            // a1..an
    int tail = a & ((1 << (r - n)) - 1);  // remaining m-1 args
    int idx = (g.value_at_index(head) << (m - 1)) | tail;
    t |= uint64_t(f.value_at_index(idx)) << a;
  }
  return BoolFn(r, t);
}

BoolFn dual(const BoolFn& f) {
  uint64_t t = 0;
  int r = f.rows();
  for (int a = 0; a < r; ++a)
    t |= uint64_t(1 - f.value_at_index(r - 1 - a)) << a;
  return BoolFn(f.arity, t);
}

BoolFn negate_fn(const BoolFn& f) {
  return BoolFn(f.arity, ~f.table & f.row_mask());
}

int essential_arity(const BoolFn& f) {
  int count = 0;
  for (int i = 1; i <= f.arity; ++i) {
    int bit = 1 << (f.arity - i);
    bool essential = false;
    for (int a = 0; a < f.rows() && !essential; ++a)
      if (!(a & bit) && f.value_at_index(a) != f.value_at_index(a | bit))
        essential = true;
    if (essential) ++count;
  }
  return count;
}

Alternation alternation(const BoolFn& f) {
  Alternation out;
  out.depth.assign(f.rows(), 0);
  // Longest alternating chain from the bottom tuple to a; covers suffice
  // because refining a chain never lowers its number of label changes.
  for (int a = 1; a < f.rows(); ++a) {
    int best = 0;
    for (int i = 0; i < f.arity; ++i) {
      if (!(a & (1 << i))) continue;
      int b = a & ~(1 << i);
      int cand = out.depth[b] + (f.value_at_index(b) != f.value_at_index(a));
      best = std::max(best, cand);
    }
    out.depth[a] = best;
  }
  out.alt = out.depth[f.rows() - 1];
  return out;
}

int alt(const BoolFn& f) { return alternation(f).alt; }

bool is_constant(const BoolFn& f) {
  return f.table == 0 || f.table == f.row_mask();
}

BoolFn lambda_fn(const std::vector<int>& c) {
  if (c.empty()) throw std::invalid_argument("empty lambda vector");
  if (c.size() == 1) return const_fn(1, c[0]);
  int n = int(c.size()) - 1;
  if (n > kMaxArity) throw std::invalid_argument("lambda vector too long");
  uint64_t t = 0;
  for (int a = 0; a < (1 << n); ++a)
    t |= uint64_t(c[std::popcount(unsigned(a))] & 1) << a;
  return BoolFn(n, t);
}

BoolFn lambda_fn(const std::string& bits) {
  std::vector<int> c;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bad lambda bits");
    c.push_back(ch - '0');
  }
  return lambda_fn(c);
}

BoolFn proj(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("projection index out of range");
  uint64_t t = 0;
  for (int a = 0; a < (1 << n); ++a)
    t |= uint64_t((a >> (n - i)) & 1) << a;
  return BoolFn(n, t);
}

BoolFn const_fn(int n, int v) {
  BoolFn f(n, 0);
  if (v) f.table = f.row_mask();
  return f;
}

BoolFn not_fn() { return BoolFn(1, 0b01); }
BoolFn id_fn() { return BoolFn(1, 0b10); }
BoolFn and_fn() { return BoolFn(2, 0b1000); }
BoolFn or_fn() { return BoolFn(2, 0b1110); }
BoolFn xor_fn() { return BoolFn(2, 0b0110); }
BoolFn imp_fn() { return BoolFn(2, 0b1011); }
BoolFn nimp_fn() { return BoolFn(2, 0b0010); }
BoolFn eqv_fn() { return BoolFn(2, 0b1001); }

BoolFn maj_fn() {
  uint64_t t = 0;
  for (int a = 0; a < 8; ++a)
    t |= uint64_t(std::popcount(unsigned(a)) >= 2) << a;
  return BoolFn(3, t);
}

BoolFn xor3_fn() {
  uint64_t t = 0;
  for (int a = 0; a < 8; ++a)
    t |= uint64_t(std::popcount(unsigned(a)) & 1) << a;
  return BoolFn(3, t);
}

BoolFn orand_fn() {
  uint64_t t = 0;
  for (int a = 0; a < 8; ++a) {
    int x1 = (a >> 2) & 1, x2 = (a >> 1) & 1, x3 = a & 1;
    t |= uint64_t(x1 | (x2 & x3)) << a;
  }
  return BoolFn(3, t);
}

BoolFn andor_fn() {
  uint64_t t = 0;
  for (int a = 0; a < 8; ++a) {
    int x1 = (a >> 2) & 1, x2 = (a >> 1) & 1, x3 = a & 1;
    t |= uint64_t(x1 & (x2 | x3)) << a;
  }
  return BoolFn(3, t);
}

BoolFn discr_fn() {
  uint64_t t = 0;
  for (int a = 0; a < 8; ++a) {
    int x = (a >> 2) & 1, y = (a >> 1) & 1, z = a & 1;
    t |= uint64_t(x == y ? z : x) << a;
  }
  return BoolFn(3, t);
}

BoolFn th_fn(int k, int n) {
  uint64_t t = 0;
  for (int a = 0; a < (1 << n); ++a)
    t |= uint64_t(std::popcount(unsigned(a)) >= k) << a;
  return BoolFn(n, t);
}

std::string fn_to_string(const BoolFn& f) {
  int digits = std::max(1, f.rows() / 4);
  std::string hex;
  for (int d = digits - 1; d >= 0; --d) {
    int nibble = int((f.table >> (4 * d)) & 0xF);
    if (f.rows() < 4) nibble = int(f.table & f.row_mask());
    hex += "0123456789ABCDEF"[nibble];
  }
  return std::to_string(f.arity) + ":" + hex;
}

BoolFn parse_fn(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected n:HEX");
  int n = std::stoi(s.substr(0, colon));
  uint64_t t = 0;
  std::string hex = s.substr(colon + 1);
  if (hex.empty()) throw std::invalid_argument("empty hex table");
  for (char ch : hex) {
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else throw std::invalid_argument("bad hex digit");
    t = (t << 4) | unsigned(v);
  }
  return BoolFn(n, t);
}

}  // namespace clonoid
