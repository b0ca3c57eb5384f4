#include "clonoid/postlattice.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "clonoid/classexpr.hpp"

namespace clonoid {

namespace {

constexpr int kMemberCap = 4;

struct CloneDef {
  std::string name;
  std::string desc;
  // Conjunction of enabled requirements; the "unary kind" clones are special.
  enum class Special { None, Proj, ProjNeg, ProjC0, ProjC1, ProjC, EssUnary };
  Special special = Special::None;
  bool linear = false, selfdual = false, monotone = false;
  bool conj = false, disj = false;
  bool p0 = false, p1 = false;
  int sep0 = 0, sep1 = 0;  // 0 = off, otherwise rank (-1 = infinity)
  std::vector<std::string> gens;  // "n:HEX" strings; empty + fallback => members
  bool member_fallback = false;
  std::string dual_name;
};

std::vector<CloneDef> make_defs() {
  std::vector<CloneDef> v;
  auto add = [&](CloneDef d) { v.push_back(std::move(d)); };
  using S = CloneDef::Special;
  auto fn = [](const BoolFn& f) { return fn_to_string(f); };
  std::string NOT = fn(not_fn()), AND = fn(and_fn()), OR = fn(or_fn()),
              XOR = fn(xor_fn()), EQV = fn(eqv_fn()), IMP = fn(imp_fn()),
              NIMP = fn(nimp_fn()), MAJ = fn(maj_fn()), XOR3 = fn(xor3_fn()),
              ORAND = fn(orand_fn()), ANDOR = fn(andor_fn()),
              DISC = fn(discr_fn()), C0 = fn(const_fn(1, 0)),
              C1 = fn(const_fn(1, 1)), TH24 = fn(th_fn(2, 4)),
              TH34 = fn(th_fn(3, 4));

  add({.name = "Ic", .desc = "projections", .special = S::Proj, .gens = {},
       .dual_name = "Ic"});
  add({.name = "Istar", .desc = "projections and negated projections",
       .special = S::ProjNeg, .gens = {NOT}, .dual_name = "Istar"});
  add({.name = "I0", .desc = "projections and constant 0", .special = S::ProjC0,
       .gens = {C0}, .dual_name = "I1"});
  add({.name = "I1", .desc = "projections and constant 1", .special = S::ProjC1,
       .gens = {C1}, .dual_name = "I0"});
  add({.name = "I", .desc = "projections and constants", .special = S::ProjC,
       .gens = {C0, C1}, .dual_name = "I"});
  add({.name = "Omega1", .desc = "essentially at most unary functions",
       .special = S::EssUnary, .gens = {NOT, C0}, .dual_name = "Omega1"});

  add({.name = "Lc", .desc = "linear, 0- and 1-preserving", .linear = true,
       .p0 = true, .p1 = true, .gens = {XOR3}, .dual_name = "Lc"});
  add({.name = "L0", .desc = "linear, 0-preserving", .linear = true, .p0 = true,
       .gens = {XOR}, .dual_name = "L1"});
  add({.name = "L1", .desc = "linear, 1-preserving", .linear = true, .p1 = true,
       .gens = {EQV}, .dual_name = "L0"});
  add({.name = "LS", .desc = "linear self-dual", .linear = true,
       .selfdual = true, .gens = {XOR3, NOT}, .dual_name = "LS"});
  add({.name = "L", .desc = "linear functions", .linear = true,
       .gens = {XOR, NOT}, .dual_name = "L"});

  add({.name = "SM", .desc = "self-dual monotone", .selfdual = true,
       .monotone = true, .gens = {MAJ}, .dual_name = "SM"});
  add({.name = "Sc", .desc = "self-dual, 0- and 1-preserving",
       .selfdual = true, .p0 = true, .gens = {DISC}, .dual_name = "Sc"});
  add({.name = "S", .desc = "self-dual functions", .selfdual = true,
       .gens = {DISC, NOT}, .dual_name = "S"});

  add({.name = "Lambdac", .desc = "conjunctions of variables", .conj = true,
       .gens = {AND}, .dual_name = "Vc"});
  add({.name = "Lambda0", .desc = "conjunctions and constant 0", .conj = true,
       .p0 = true, .gens = {AND, C0}, .dual_name = "V1"});
  add({.name = "Lambda1", .desc = "conjunctions and constant 1", .conj = true,
       .p1 = true, .gens = {AND, C1}, .dual_name = "V0"});
  add({.name = "Lambda", .desc = "conjunctions and constants", .conj = true,
       .gens = {AND, C0, C1}, .dual_name = "V"});
  add({.name = "Vc", .desc = "disjunctions of variables", .disj = true,
       .gens = {OR}, .dual_name = "Lambdac"});
  add({.name = "V0", .desc = "disjunctions and constant 0", .disj = true,
       .p0 = true, .gens = {OR, C0}, .dual_name = "Lambda1"});
  add({.name = "V1", .desc = "disjunctions and constant 1", .disj = true,
       .p1 = true, .gens = {OR, C1}, .dual_name = "Lambda0"});
  add({.name = "V", .desc = "disjunctions and constants", .disj = true,
       .gens = {OR, C0, C1}, .dual_name = "Lambda"});

  add({.name = "Mc", .desc = "monotone, 0- and 1-preserving", .monotone = true,
       .p0 = true, .p1 = true, .gens = {AND, OR}, .dual_name = "Mc"});
  add({.name = "M0", .desc = "monotone, 0-preserving", .monotone = true,
       .p0 = true, .gens = {AND, OR, C0}, .dual_name = "M1"});
  add({.name = "M1", .desc = "monotone, 1-preserving", .monotone = true,
       .p1 = true, .gens = {AND, OR, C1}, .dual_name = "M0"});
  add({.name = "M", .desc = "monotone functions", .monotone = true,
       .gens = {AND, OR, C0, C1}, .dual_name = "M"});

  add({.name = "Tc", .desc = "0- and 1-preserving", .p0 = true, .p1 = true,
       .gens = {AND, OR, XOR3}, .dual_name = "Tc"});
  add({.name = "T0", .desc = "0-preserving", .p0 = true, .gens = {AND, XOR},
       .dual_name = "T1"});
  add({.name = "T1", .desc = "1-preserving", .p1 = true, .gens = {OR, EQV},
       .dual_name = "T0"});
  add({.name = "Omega", .desc = "all functions", .gens = {NOT, AND},
       .dual_name = "Omega"});

  struct Sep {
    std::string suffix;
    int rank;
  };
  std::vector<Sep> seps{{"2", 2}, {"3", 3}, {"inf", -1}};
  for (const auto& s : seps) {
    std::string rk = s.rank < 0 ? "infinity" : s.suffix;
    auto sep_add = [&](std::string prefix, bool mono, bool pres, int side) {
      CloneDef d;
      d.name = prefix + (side == 0 ? "W" : "U") + s.suffix;
      d.desc = (side == 0 ? "0-separating of rank " : "1-separating of rank ") +
               rk + (mono ? ", monotone" : "") +
               (pres ? (side == 0 ? ", 0-preserving" : ", 1-preserving") : "");
      d.monotone = mono;
      if (side == 0) {
        d.sep0 = s.rank;
        d.p0 = pres;
      } else {
        d.sep1 = s.rank;
        d.p1 = pres;
      }
      d.member_fallback = true;
      std::string dual_prefix = prefix;
      d.dual_name = dual_prefix + (side == 0 ? "U" : "W") + s.suffix;
      v.push_back(std::move(d));
    };
    sep_add("", false, false, 0);
    sep_add("Tc", false, true, 0);
    sep_add("M", true, false, 0);
    sep_add("Mc", true, true, 0);
    sep_add("", false, false, 1);
    sep_add("Tc", false, true, 1);
    sep_add("M", true, false, 1);
    sep_add("Mc", true, true, 1);
  }
  // Curated generating sets for the separating-family clones that have small
  // published bases.
  for (auto& d : v) {
    if (d.name == "W3") { d.gens = {IMP, TH24}; d.member_fallback = false; }
    if (d.name == "McW2") { d.gens = {MAJ, ORAND}; d.member_fallback = false; }
    if (d.name == "McWinf") { d.gens = {ORAND}; d.member_fallback = false; }
    if (d.name == "U3") { d.gens = {NIMP, TH34}; d.member_fallback = false; }
    if (d.name == "McU2") { d.gens = {MAJ, ANDOR}; d.member_fallback = false; }
    if (d.name == "McUinf") { d.gens = {ANDOR}; d.member_fallback = false; }
  }
  return v;
}

struct Registry {
  std::vector<CloneDef> defs = make_defs();
  std::map<std::string, int, std::less<>> index;
  // Cached member bitsets: bits[id][arity]; empty vector = not yet computed.
  std::vector<std::array<std::vector<uint64_t>, kMemberCap + 1>> bits;
  std::vector<std::vector<bool>> leq;  // computed lazily
  std::mutex mu;

  Registry() {
    for (int i = 0; i < int(defs.size()); ++i) index.emplace(defs[i].name, i);
    bits.resize(defs.size());
  }
};

Registry& reg() {
  static Registry r;
  return r;
}

bool contains_def(const CloneDef& d, const BoolFn& f) {
  using S = CloneDef::Special;
  switch (d.special) {
    case S::Proj: return is_projection(f);
    case S::ProjNeg: return is_projection(f) || is_neg_projection(f);
    case S::ProjC0:
      return is_projection(f) || (is_constant(f) && !f.value_at_index(0));
    case S::ProjC1:
      return is_projection(f) || (is_constant(f) && f.value_at_index(0));
    case S::ProjC: return is_projection(f) || is_constant(f);
    case S::EssUnary:
      return is_projection(f) || is_neg_projection(f) || is_constant(f);
    case S::None: break;
  }
  if (d.p0 && !preserves0(f)) return false;
  if (d.p1 && !preserves1(f)) return false;
  if (d.monotone && !is_monotone(f)) return false;
  if (d.selfdual && !is_selfdual(f)) return false;
  if (d.linear && !is_linear(f)) return false;
  if (d.conj) {
    bool ok = is_conjunction(f);
    // The Lambda-family variants also admit the adjoined constants.
    if (!ok && is_constant(f)) {
      int c = f.value_at_index(0);
      ok = (d.name == "Lambda") || (d.name == "Lambda0" && c == 0) ||
           (d.name == "Lambda1" && c == 1);
    }
    if (!ok) return false;
  }
  if (d.disj) {
    bool ok = is_disjunction(f);
    if (!ok && is_constant(f)) {
      int c = f.value_at_index(0);
      ok = (d.name == "V") || (d.name == "V0" && c == 0) ||
           (d.name == "V1" && c == 1);
    }
    if (!ok) return false;
  }
  if (d.sep0 && !is_separating(f, 0, d.sep0)) return false;
  if (d.sep1 && !is_separating(f, 1, d.sep1)) return false;
  return true;
}

}  // namespace

int clone_count() { return int(reg().defs.size()); }

int clone_index(std::string_view name) {
  auto& r = reg();
  auto it = r.index.find(name);
  return it == r.index.end() ? -1 : it->second;
}

CloneInfo clone_info(int id) {
  const auto& d = reg().defs.at(id);
  return {d.name, d.desc};
}

std::vector<std::string> clone_names() {
  std::vector<std::string> out;
  for (const auto& d : reg().defs) out.push_back(d.name);
  return out;
}

bool clone_contains(int id, const BoolFn& f) {
  return contains_def(reg().defs.at(id), f);
}

bool clone_contains_by_name(const std::string& name, const BoolFn& f) {
  int id = clone_index(name);
  if (id < 0) throw std::invalid_argument("unknown clone: " + name);
  return clone_contains(id, f);
}

const std::vector<uint64_t>& clone_member_bits(int id, int arity) {
  if (arity < 1 || arity > kMemberCap)
    throw std::invalid_argument("clone_member_bits arity out of range");
  auto& r = reg();
  std::lock_guard<std::mutex> lock(r.mu);
  auto& slot = r.bits.at(id)[arity];
  if (slot.empty()) {
    int rows = 1 << arity;
    uint64_t count = uint64_t{1} << rows;  // number of arity-n tables
    slot.assign(size_t((count + 63) / 64), 0);
    for (uint64_t t = 0; t < count; ++t)
      if (contains_def(r.defs[id], BoolFn(arity, t)))
        slot[size_t(t / 64)] |= uint64_t{1} << (t % 64);
  }
  return slot;
}

std::vector<BoolFn> clone_members(int id, int arity) {
  const auto& bitsv = clone_member_bits(id, arity);
  std::vector<BoolFn> out;
  for (size_t w = 0; w < bitsv.size(); ++w) {
    uint64_t m = bitsv[w];
    while (m) {
      int b = __builtin_ctzll(m);
      m &= m - 1;
      out.emplace_back(arity, uint64_t(w) * 64 + unsigned(b));
    }
  }
  return out;
}

std::vector<BoolFn> clone_generators(int id) {
  const auto& d = reg().defs.at(id);
  std::vector<BoolFn> out;
  if (!d.member_fallback) {
    for (const auto& s : d.gens) out.push_back(parse_fn(s));
    return out;
  }
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : clone_members(id, n)) out.push_back(f);
  return out;
}

namespace {

void ensure_order() {
  auto& r = reg();
  {
    std::lock_guard<std::mutex> lock(r.mu);
    if (!r.leq.empty()) return;
  }
  int n = clone_count();
  // The encoded inventory is separated pairwise by functions of arity <= 4
  // (separating ranks 2 and 3 need witnesses of arities 3 and 4), so the
  // membership-based order at arities 1..4 is the lattice order.
  std::vector<std::array<const std::vector<uint64_t>*, kMemberCap + 1>> b(n);
  for (int i = 0; i < n; ++i)
    for (int a = 1; a <= kMemberCap; ++a) b[i][a] = &clone_member_bits(i, a);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      bool ok = true;
      for (int a = 1; a <= kMemberCap && ok; ++a) {
        const auto& bc = *b[c][a];
        const auto& bd = *b[d][a];
        for (size_t w = 0; w < bc.size() && ok; ++w)
          if (bc[w] & ~bd[w]) ok = false;
      }
      leq[c][d] = ok;
    }
  std::lock_guard<std::mutex> lock(r.mu);
  if (r.leq.empty()) r.leq = std::move(leq);
}

}  // namespace

bool clone_leq(int c, int d) {
  ensure_order();
  return reg().leq.at(c).at(d);
}

std::vector<std::pair<int, int>> clone_covers() {
  ensure_order();
  const auto& leq = reg().leq;
  int n = clone_count();
  std::vector<std::pair<int, int>> covers;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      if (c == d || !leq[c][d]) continue;
      bool cover = true;
      for (int e = 0; e < n && cover; ++e)
        if (e != c && e != d && leq[c][e] && leq[e][d]) cover = false;
      if (cover) covers.emplace_back(c, d);
    }
  return covers;
}

int dual_clone(int id) {
  return clone_index(reg().defs.at(id).dual_name);
}

std::vector<BoolFn> clone_closure_upto(const std::vector<BoolFn>& F, int cap) {
  if (cap < 1 || cap > kMemberCap)
    throw std::invalid_argument("closure cap out of range");
  // Per-arity member lists plus presence bitsets.
  std::vector<std::vector<uint64_t>> elems(cap + 1);
  std::vector<std::vector<uint64_t>> present(cap + 1);
  for (int m = 1; m <= cap; ++m)
    present[m].assign(size_t(((uint64_t{1} << (1 << m)) + 63) / 64), 0);
  auto has = [&](int m, uint64_t t) {
    return (present[m][size_t(t / 64)] >> (t % 64)) & 1;
  };
  auto insert = [&](int m, uint64_t t) {
    if (has(m, t)) return false;
    present[m][size_t(t / 64)] |= uint64_t{1} << (t % 64);
    elems[m].push_back(t);
    return true;
  };
  for (int m = 1; m <= cap; ++m)
    for (int i = 1; i <= m; ++i) insert(m, proj(i, m).table);
  // All minors of the generators that fit under the cap.
  for (const auto& f : F) {
    for (int m = 1; m <= cap; ++m) {
      std::vector<int> sigma(f.arity, 1);
      while (true) {
        insert(m, minor(f, ArgMap(f.arity, m, sigma)).table);
        int i = f.arity - 1;
        while (i >= 0 && sigma[i] == m) --i;
        if (i < 0) break;
        ++sigma[i];
        for (int j = i + 1; j < f.arity; ++j) sigma[j] = 1;
      }
    }
  }
  std::vector<size_t> old_count(cap + 1, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<size_t> cur(cap + 1);
    for (int m = 1; m <= cap; ++m) cur[m] = elems[m].size();
    for (const auto& f : F) {
      int n = f.arity;
      for (int m = 1; m <= cap; ++m) {
        size_t sz = cur[m];
        if (sz == 0) continue;
        std::vector<size_t> idx(n, 0);
        while (true) {
          bool any_new = false;
          for (int i = 0; i < n; ++i)
            if (idx[i] >= old_count[m]) { any_new = true; break; }
          if (any_new || old_count[m] == 0) {
            uint64_t t = 0;
            for (int a = 0; a < (1 << m); ++a) {
              int fi = 0;
              for (int i = 0; i < n; ++i)
                fi = (fi << 1) | int((elems[m][idx[i]] >> a) & 1);
              t |= uint64_t(f.value_at_index(fi)) << a;
            }
            if (insert(m, t)) changed = true;
          }
          int i = n - 1;
          while (i >= 0 && idx[i] + 1 == sz) --i;
          if (i < 0) break;
          ++idx[i];
          for (int j = i + 1; j < n; ++j) idx[j] = 0;
        }
      }
    }
    for (int m = 1; m <= cap; ++m) old_count[m] = cur[m];
  }
  std::vector<BoolFn> out;
  for (int m = 1; m <= cap; ++m) {
    std::sort(elems[m].begin(), elems[m].end());
    for (uint64_t t : elems[m]) out.emplace_back(m, t);
  }
  return out;
}

}  // namespace clonoid
