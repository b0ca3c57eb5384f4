#include "clonoid/classexpr.hpp"

#include <bit>
#include <stdexcept>

namespace clonoid {

// Defined in postlattice.cpp; declared here to keep headers acyclic.
bool clone_contains_by_name(const std::string& name, const BoolFn& f);

ClassExpr ClassExpr::unite(std::vector<ClassExpr> xs) {
  ClassExpr e;
  e.kind = Kind::Union;
  e.kids = std::move(xs);
  return e;
}

ClassExpr ClassExpr::intersect(std::vector<ClassExpr> xs) {
  ClassExpr e;
  e.kind = Kind::Intersect;
  e.kids = std::move(xs);
  return e;
}

ClassExpr ClassExpr::dual_of(ClassExpr x) {
  ClassExpr e;
  e.kind = Kind::Dual;
  e.kids.push_back(std::move(x));
  return e;
}

ClassExpr ClassExpr::neg_compose(ClassExpr x) {
  ClassExpr e;
  e.kind = Kind::NegCompose;
  e.kids.push_back(std::move(x));
  return e;
}

ClassExpr ClassExpr::named_clone(std::string name) {
  ClassExpr e;
  e.kind = Kind::NamedClone;
  e.clone_name = std::move(name);
  return e;
}

bool is_monotone(const BoolFn& f) {
  for (int a = 0; a < f.rows(); ++a)
    for (int i = 0; i < f.arity; ++i)
      if (!(a & (1 << i)) &&
          f.value_at_index(a) > f.value_at_index(a | (1 << i)))
        return false;
  return true;
}

bool is_selfdual(const BoolFn& f) {
  int top = f.rows() - 1;
  for (int a = 0; a < f.rows(); ++a)
    if (f.value_at_index(a) == f.value_at_index(top - a)) return false;
  return true;
}

bool is_reflexive(const BoolFn& f) {
  int top = f.rows() - 1;
  for (int a = 0; a < f.rows(); ++a)
    if (f.value_at_index(a) != f.value_at_index(top - a)) return false;
  return true;
}

bool is_smin(const BoolFn& f) {
  int top = f.rows() - 1;
  for (int a = 0; a < f.rows(); ++a)
    if (f.value_at_index(a) && f.value_at_index(top - a)) return false;
  return true;
}

bool is_smaj(const BoolFn& f) {
  int top = f.rows() - 1;
  for (int a = 0; a < f.rows(); ++a)
    if (!f.value_at_index(a) && !f.value_at_index(top - a)) return false;
  return true;
}

bool is_linear(const BoolFn& f) {
  int c0 = f.value_at_index(0);
  int coeff = 0;  // bitmask over index bits
  for (int j = 0; j < f.arity; ++j)
    if (f.value_at_index(1 << j) != c0) coeff |= 1 << j;
  for (int a = 0; a < f.rows(); ++a) {
    int v = c0 ^ (std::popcount(unsigned(a & coeff)) & 1);
    if (v != f.value_at_index(a)) return false;
  }
  return true;
}

bool is_separating(const BoolFn& f, int val, int rank) {
  std::vector<int> pre;
  for (int a = 0; a < f.rows(); ++a)
    if (f.value_at_index(a) == val) pre.push_back(a);
  int full = f.rows() - 1;
  // A family shares a coordinate constantly `val` iff (for val = 0) the OR
  // of its tuples misses a bit, or (for val = 1) the AND keeps one.
  auto separated = [&](int acc) {
    return val == 0 ? acc != full : acc != 0;
  };
  auto combine = [&](int acc, int t) { return val == 0 ? acc | t : acc & t; };
  if (pre.empty()) return true;
  int m = int(pre.size());
  int s = (rank < 0 || rank >= m) ? m : rank;
  // It suffices to check subsets of size exactly s: supersets of a failing
  // family fail as well.
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    int acc = val == 0 ? 0 : full;
    for (int i = 0; i < s; ++i) acc = combine(acc, pre[idx[i]]);
    if (!separated(acc)) return false;
    int i = s - 1;
    while (i >= 0 && idx[i] == m - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

bool is_projection(const BoolFn& f) {
  for (int i = 1; i <= f.arity; ++i)
    if (f == proj(i, f.arity)) return true;
  return false;
}

bool is_neg_projection(const BoolFn& f) {
  return is_projection(negate_fn(f));
}

bool is_conjunction(const BoolFn& f) {
  if (f.table == 0) return false;
  int m = f.rows() - 1;
  for (int a = 0; a < f.rows(); ++a)
    if (f.value_at_index(a)) m &= a;
  if (m == 0) return false;
  for (int a = 0; a < f.rows(); ++a)
    if (f.value_at_index(a) != ((a & m) == m)) return false;
  return true;
}

bool is_disjunction(const BoolFn& f) {
  if (f.table == f.row_mask()) return false;
  int u = 0;
  for (int a = 0; a < f.rows(); ++a)
    if (!f.value_at_index(a)) u |= a;
  int t = ~u & (f.rows() - 1);
  if (t == 0) return false;
  for (int a = 0; a < f.rows(); ++a)
    if (f.value_at_index(a) != ((a & t) != 0)) return false;
  return true;
}

bool preserves0(const BoolFn& f) { return f.value_at_index(0) == 0; }
bool preserves1(const BoolFn& f) { return f.value_at_index(f.rows() - 1) == 1; }

Range2Sig range2_signature(const BoolFn& f) {
  Range2Sig sig;
  int top = f.rows() - 1;
  for (int a = 0; a < f.rows(); ++a) {
    int u = f.value_at_index(a), v = f.value_at_index(top - a);
    if (u == 0 && v == 0) sig.rset |= 1;
    else if (u == 1 && v == 1) sig.rset |= 2;
    else sig.rset |= 4;
  }
  sig.a = f.value_at_index(0);
  sig.b = f.value_at_index(top);
  return sig;
}

std::string Range2Sig::r_string() const {
  std::string r;
  if (rset & 1) r += "0,";
  if (rset & 2) r += "1,";
  if (rset & 4) r += "01,";
  if (!r.empty()) r.pop_back();
  return "F^{" + r + "}";
}

std::string Range2Sig::to_string() const {
  return r_string() + "_{" + std::to_string(a) + std::to_string(b) + "}";
}

bool satisfies(const BoolFn& f, const ClassExpr& e) {
  using K = ClassExpr::Kind;
  switch (e.kind) {
    case K::All: return true;
    case K::Empty: return false;
    case K::ConstVal:
      return is_constant(f) && f.value_at_index(0) == e.a;
    case K::ValueAt0: return f.value_at_index(0) == e.a;
    case K::ValueAt1: return f.value_at_index(f.rows() - 1) == e.a;
    case K::AltExactly: return alt(f) == e.k;
    case K::AltAtMost: return alt(f) <= e.k;
    case K::Monotone: return is_monotone(f);
    case K::Antitone: return is_monotone(negate_fn(f));
    case K::SelfDual: return is_selfdual(f);
    case K::Reflexive: return is_reflexive(f);
    case K::Smin: return is_smin(f);
    case K::Smaj: return is_smaj(f);
    case K::Linear: return is_linear(f);
    case K::Separating: return is_separating(f, e.a, e.k);
    case K::Range2: {
      auto sig = range2_signature(f);
      return sig.rset == e.rset && sig.a == e.a && sig.b == e.b;
    }
    case K::Range2R: return range2_signature(f).rset == e.rset;
    case K::NamedClone: return clone_contains_by_name(e.clone_name, f);
    case K::Union:
      for (const auto& kid : e.kids)
        if (satisfies(f, kid)) return true;
      return false;
    case K::Intersect:
      for (const auto& kid : e.kids)
        if (!satisfies(f, kid)) return false;
      return true;
    case K::NegCompose: return satisfies(negate_fn(f), e.kids.front());
    case K::Dual: return satisfies(dual(f), e.kids.front());
  }
  return false;
}

namespace {

ClassExpr atom(ClassExpr::Kind k, int a = 0, int b = 0, int kk = 0) {
  ClassExpr e;
  e.kind = k;
  e.a = a;
  e.b = b;
  e.k = kk;
  return e;
}

ClassExpr om_block(int a, int b) {
  // a or b may be -1 for "don't care".
  std::vector<ClassExpr> parts;
  if (a >= 0) parts.push_back(atom(ClassExpr::Kind::ValueAt0, a));
  if (b >= 0) parts.push_back(atom(ClassExpr::Kind::ValueAt1, b));
  if (parts.empty()) return ClassExpr::all();
  if (parts.size() == 1) return parts.front();
  return ClassExpr::intersect(std::move(parts));
}

// Parse endpoint suffix "ab" with 'X' wildcards; returns {a, b} with -1 for X.
bool parse_endpoints(const std::string& s, int& a, int& b) {
  if (s.size() != 2) return false;
  auto one = [](char c, int& out) {
    if (c == '0') out = 0;
    else if (c == '1') out = 1;
    else if (c == 'X') out = -1;
    else return false;
    return true;
  };
  return one(s[0], a) && one(s[1], b);
}

ClassExpr parse_atom(const std::string& t) {
  using K = ClassExpr::Kind;
  int a, b;
  if (t == "Empty") return ClassExpr::empty();
  if (t == "Om") return ClassExpr::all();
  if (t.rfind("Om", 0) == 0 && parse_endpoints(t.substr(2), a, b))
    return om_block(a, b);
  if (t == "C") return ClassExpr::unite({atom(K::ConstVal, 0), atom(K::ConstVal, 1)});
  if (t == "C0") return atom(K::ConstVal, 0);
  if (t == "C1") return atom(K::ConstVal, 1);
  if (t == "Eq") return ClassExpr::unite({om_block(0, 0), om_block(1, 1)});
  if (t == "Neq") return ClassExpr::unite({om_block(0, 1), om_block(1, 0)});
  if (t == "Eiio") return ClassExpr::unite({om_block(0, 0), om_block(0, 1), om_block(1, 1)});
  if (t == "Eioi") return ClassExpr::unite({om_block(0, 0), om_block(1, 0), om_block(1, 1)});
  if (t == "Eiii") return ClassExpr::unite({om_block(0, 0), om_block(0, 1), om_block(1, 0)});
  if (t == "Eioo") return ClassExpr::unite({om_block(0, 1), om_block(1, 0), om_block(1, 1)});
  if (t == "M") return atom(K::Monotone);
  if (t == "M0") return ClassExpr::intersect({atom(K::Monotone), om_block(0, -1)});
  if (t == "M1") return ClassExpr::intersect({atom(K::Monotone), om_block(-1, 1)});
  if (t == "Mc") return ClassExpr::intersect({atom(K::Monotone), om_block(0, 1)});
  if (t == "Mbar") return atom(K::Antitone);
  if (t == "Mbar0") return ClassExpr::intersect({atom(K::Antitone), om_block(1, -1)});
  if (t == "Mbar1") return ClassExpr::intersect({atom(K::Antitone), om_block(-1, 0)});
  if (t == "Mbarc") return ClassExpr::intersect({atom(K::Antitone), om_block(1, 0)});
  if (t == "Sd") return atom(K::SelfDual);
  if (t == "Sd01") return ClassExpr::intersect({atom(K::SelfDual), om_block(0, 1)});
  if (t == "Sd10") return ClassExpr::intersect({atom(K::SelfDual), om_block(1, 0)});
  if (t == "Refl") return atom(K::Reflexive);
  if (t == "Refl00") return ClassExpr::intersect({atom(K::Reflexive), om_block(0, 0)});
  if (t == "Refl11") return ClassExpr::intersect({atom(K::Reflexive), om_block(1, 1)});
  if (t == "Smin" || t == "Smaj") {
    return atom(t == "Smin" ? K::Smin : K::Smaj);
  }
  if ((t.rfind("Smin", 0) == 0 || t.rfind("Smaj", 0) == 0) && t.size() > 4) {
    ClassExpr base = atom(t.rfind("Smin", 0) == 0 ? K::Smin : K::Smaj);
    std::string suf = t.substr(4);
    if (suf == "Neq")
      return ClassExpr::intersect(
          {base, ClassExpr::unite({om_block(0, 1), om_block(1, 0)})});
    if (parse_endpoints(suf, a, b))
      return ClassExpr::intersect({base, om_block(a, b)});
    throw std::invalid_argument("bad Smin/Smaj suffix: " + t);
  }
  if (t.rfind("Ale", 0) == 0 || (t[0] == 'A' && t.size() > 1 && isdigit(t[1]))) {
    bool atmost = t.rfind("Ale", 0) == 0;
    size_t pos = atmost ? 3 : 1;
    size_t us = t.find('_', pos);
    int k = std::stoi(t.substr(pos, us == std::string::npos ? std::string::npos
                                                            : us - pos));
    ClassExpr base = atom(atmost ? K::AltAtMost : K::AltExactly, 0, 0, k);
    if (us == std::string::npos) return base;
    if (!parse_endpoints(t.substr(us + 1), a, b))
      throw std::invalid_argument("bad alternation block endpoints: " + t);
    return ClassExpr::intersect({base, om_block(a, b)});
  }
  throw std::invalid_argument("unknown class atom: " + t);
}

}  // namespace

ClassExpr parse_class_expr(const std::string& text) {
  std::vector<ClassExpr> parts;
  size_t start = 0;
  while (start <= text.size()) {
    size_t plus = text.find('+', start);
    std::string tok = text.substr(
        start, plus == std::string::npos ? std::string::npos : plus - start);
    if (tok.empty()) throw std::invalid_argument("empty atom in class expr");
    ClassExpr e = parse_atom(tok);
    e.clone_name = tok;
    parts.push_back(std::move(e));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (parts.size() == 1) return parts.front();
  ClassExpr u = ClassExpr::unite(std::move(parts));
  u.clone_name = text;
  return u;
}

std::string class_expr_to_string(const ClassExpr& e) {
  using K = ClassExpr::Kind;
  if (!e.clone_name.empty()) return e.clone_name;
  switch (e.kind) {
    case K::All: return "Om";
    case K::Empty: return "Empty";
    case K::Union: {
      std::string s;
      for (const auto& kid : e.kids) {
        if (!s.empty()) s += "+";
        s += class_expr_to_string(kid);
      }
      return s;
    }
    case K::Intersect: {
      std::string s;
      for (const auto& kid : e.kids) {
        if (!s.empty()) s += "&";
        s += class_expr_to_string(kid);
      }
      return "(" + s + ")";
    }
    case K::Dual: return "dual(" + class_expr_to_string(e.kids.front()) + ")";
    case K::NegCompose:
      return "bar(" + class_expr_to_string(e.kids.front()) + ")";
    default: return "<expr>";
  }
}

}  // namespace clonoid
