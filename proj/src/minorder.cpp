#include "clonoid/minorder.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "clonoid/postlattice.hpp"

namespace clonoid {

namespace {

bool in_range_of(const BoolFn& g, int v) {
  uint64_t t = g.table & g.row_mask();
  return v ? t != 0 : t != g.row_mask();
}

// Does some index u satisfy g(u) = v0 and g(complement u) = v1?
bool has_antipodal_pair(const BoolFn& g, int v0, int v1) {
  int top = g.rows() - 1;
  for (int u = 0; u < g.rows(); ++u)
    if (g.value_at_index(u) == v0 && g.value_at_index(top - u) == v1)
      return true;
  return false;
}

// Backtracking over the selector u: rows(f) -> rows(g) with g(u(a)) = f(a);
// each of g's argument columns, read as an f.arity-ary function, must lie in
// the clone.  Columns are pruned against the memoized member list.
struct SelectorSearch {
  const BoolFn& f;
  const BoolFn& g;
  std::vector<BoolFn> members;
  // For each f-row and value, the mask of members with that bit value.
  std::vector<std::array<std::vector<uint64_t>, 2>> row_masks;
  size_t words = 0;

  SelectorSearch(const BoolFn& f_, const BoolFn& g_, int clone_id)
      : f(f_), g(g_), members(clone_members(clone_id, f_.arity)) {
    words = (members.size() + 63) / 64;
    row_masks.resize(f.rows());
    for (int a = 0; a < f.rows(); ++a)
      for (int v = 0; v < 2; ++v) {
        auto& m = row_masks[a][v];
        m.assign(words, 0);
        for (size_t i = 0; i < members.size(); ++i)
          if (members[i].value_at_index(a) == v)
            m[i / 64] |= uint64_t{1} << (i % 64);
      }
  }

  bool run() {
    if (members.empty()) return false;
    std::vector<std::vector<uint64_t>> cand(
        g.arity, std::vector<uint64_t>(words, ~uint64_t{0}));
    size_t extra = words * 64 - members.size();
    if (extra)
      for (int i = 0; i < g.arity; ++i)
        cand[i][words - 1] = (~uint64_t{0}) >> extra;
    return search(0, cand);
  }

  bool search(int row, std::vector<std::vector<uint64_t>>& cand) {
    if (row == f.rows()) return true;
    int want = f.value_at_index(row);
    for (int u = 0; u < g.rows(); ++u) {
      if (g.value_at_index(u) != want) continue;
      std::vector<std::vector<uint64_t>> next = cand;
      bool ok = true;
      for (int i = 0; i < g.arity && ok; ++i) {
        int bit = (u >> (g.arity - 1 - i)) & 1;
        uint64_t any = 0;
        for (size_t w = 0; w < words; ++w) {
          next[i][w] &= row_masks[row][bit][w];
          any |= next[i][w];
        }
        if (!any) ok = false;
      }
      if (ok && search(row + 1, next)) return true;
    }
    return false;
  }
};

std::string m_label_text(int k, int a, int b) {
  return "A" + std::to_string(k) + "_" + std::to_string(a) + std::to_string(b);
}

bool is_m_family(const std::string& n) {
  return n == "M" || n == "M0" || n == "M1" || n == "Mc";
}

void reduce_and_fill(LabeledPoset& out, const std::vector<MinorClassLabel>& ls) {
  int n = int(ls.size());
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !label_leq(ls[i], ls[j])) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && label_leq(ls[i], ls[k]) && label_leq(ls[k], ls[j]))
          cover = false;
      if (cover) covers.emplace_back(i, j);
    }
  std::vector<std::string> names;
  for (const auto& l : ls) names.push_back(l.text);
  out = LabeledPoset(n, std::move(covers), std::vector<int>(n, 0), -1, -1,
                     std::move(names));
}

}  // namespace

bool leq_minor_bruteforce(const BoolFn& f, const BoolFn& g, int clone_id) {
  if (f.arity > 3) throw std::runtime_error("minor search cap exceeded");
  const std::string name = clone_info(clone_id).name;
  int top_f = f.rows() - 1, top_g = g.rows() - 1;
  auto range_ok = [&](bool skip0, bool skip1) {
    for (int a = 0; a < f.rows(); ++a) {
      if (skip0 && a == 0) continue;
      if (skip1 && a == top_f) continue;
      if (!in_range_of(g, f.value_at_index(a))) return false;
    }
    return true;
  };
  if (name == "Omega") return range_ok(false, false);
  if (name == "T0")
    return g.value_at_index(0) == f.value_at_index(0) && range_ok(true, false);
  if (name == "T1")
    return g.value_at_index(top_g) == f.value_at_index(top_f) &&
           range_ok(false, true);
  if (name == "Tc")
    return g.value_at_index(0) == f.value_at_index(0) &&
           g.value_at_index(top_g) == f.value_at_index(top_f) &&
           range_ok(true, true);
  if (name == "S" || name == "Sc") {
    if (name == "Sc" && (g.value_at_index(0) != f.value_at_index(0) ||
                         g.value_at_index(top_g) != f.value_at_index(top_f)))
      return false;
    for (int a = 0; 2 * a < f.rows(); ++a)
      if (!has_antipodal_pair(g, f.value_at_index(a),
                              f.value_at_index(top_f - a)))
        return false;
    return true;
  }
  SelectorSearch s(f, g, clone_id);
  return s.run();
}

MinorClassLabel class_label(const BoolFn& f, int clone_id) {
  MinorClassLabel l;
  l.source = clone_info(clone_id).name;
  l.a = f.value_at_index(0);
  l.b = f.value_at_index(f.rows() - 1);
  const std::string& n = l.source;
  if (is_m_family(n)) {
    l.k = alt(f);
    l.text = m_label_text(l.k, l.a, l.b);
    return l;
  }
  if (n == "Sc" || n == "S") {
    l.sig = range2_signature(f);
    l.text = n == "Sc" ? l.sig.to_string() : l.sig.r_string();
    return l;
  }
  bool c = is_constant(f);
  if (n == "Tc") {
    if (c)
      l.text = l.a ? "C1" : "C0";
    else if (l.a == l.b)
      l.text = l.a ? "Om11-nonconst" : "Om00-nonconst";
    else
      l.text = l.a ? "Om10" : "Om01";
    return l;
  }
  if (n == "T0") {
    l.text = c ? (l.a ? "C1" : "C0")
               : (l.a ? "Om1X-nonconst" : "Om0X-nonconst");
    return l;
  }
  if (n == "T1") {
    l.text = c ? (l.a ? "C1" : "C0")
               : (l.b ? "OmX1-nonconst" : "OmX0-nonconst");
    return l;
  }
  if (n == "Omega") {
    l.text = c ? (l.a ? "C1" : "C0") : "Om-nonconst";
    return l;
  }
  throw std::invalid_argument("class_label: unclassified source clone " + n);
}

bool label_leq(const MinorClassLabel& x, const MinorClassLabel& y) {
  if (x.source != y.source)
    throw std::invalid_argument("label_leq: mixed source clones");
  const std::string& n = x.source;
  if (n == "M") return x.k < y.k || (x.k == y.k && x.a == y.a);
  if (n == "M0") return x.k <= y.k && x.a == y.a;
  if (n == "M1") return x.k <= y.k && x.b == y.b;
  if (n == "Mc")
    return x.k <= y.k && x.a == y.a && (y.k - x.k) % 2 == 0;
  if (n == "Sc")
    return x.a == y.a && x.b == y.b && (x.sig.rset & ~y.sig.rset) == 0;
  if (n == "S") return (x.sig.rset & ~y.sig.rset) == 0;
  if (x.text == y.text) return true;
  auto pair_ok = [&](const char* c0up, const char* c1up) {
    return (x.text == "C0" && y.text == c0up) ||
           (x.text == "C1" && y.text == c1up);
  };
  if (n == "Tc") return pair_ok("Om00-nonconst", "Om11-nonconst");
  if (n == "T0") return pair_ok("Om0X-nonconst", "Om1X-nonconst");
  if (n == "T1") return pair_ok("OmX0-nonconst", "OmX1-nonconst");
  if (n == "Omega") return pair_ok("Om-nonconst", "Om-nonconst");
  throw std::invalid_argument("label_leq: unclassified source clone " + n);
}

LabeledPoset minor_poset(int clone_id, int cutoff) {
  const std::string n = clone_info(clone_id).name;
  std::vector<MinorClassLabel> ls;
  auto push = [&](MinorClassLabel l) { ls.push_back(std::move(l)); };
  auto mk = [&](int k, int a, int b, unsigned rset = 0) {
    MinorClassLabel l;
    l.source = n;
    l.k = k;
    l.a = a;
    l.b = b;
    l.sig = {rset, a, b};
    return l;
  };
  if (is_m_family(n)) {
    if (cutoff < 0)
      throw std::invalid_argument("minor_poset: M-family needs a cutoff");
    if (n == "Mc") {
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int j = 0; j <= cutoff; ++j) {
            int k = (a != b ? 1 : 0) + 2 * j;
            auto l = mk(k, a, b);
            l.text = m_label_text(k, a, b);
            push(l);
          }
    } else {
      for (int k = 0; k <= cutoff; ++k)
        for (int a = 0; a < 2; ++a) {
          int b = a ^ (k & 1);
          auto l = mk(k, a, b);
          l.text = m_label_text(k, a, b);
          push(l);
        }
    }
  } else if (n == "Sc" || n == "S") {
    if (n == "Sc") {
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          unsigned forced = a == b ? (a ? 2u : 1u) : 4u;
          unsigned rest = 7u & ~forced;
          for (unsigned extra = 0; extra < 8; ++extra) {
            if (extra & ~rest) continue;
            auto l = mk(-1, a, b, forced | extra);
            l.text = l.sig.to_string();
            push(l);
          }
        }
    } else {
      for (unsigned r = 1; r < 8; ++r) {
        auto l = mk(-1, 0, 0, r);
        l.text = l.sig.r_string();
        push(l);
      }
    }
  } else {
    std::vector<std::string> texts;
    if (n == "Tc")
      texts = {"C0", "Om00-nonconst", "C1", "Om11-nonconst", "Om01", "Om10"};
    else if (n == "T0")
      texts = {"C0", "Om0X-nonconst", "C1", "Om1X-nonconst"};
    else if (n == "T1")
      texts = {"C0", "OmX0-nonconst", "C1", "OmX1-nonconst"};
    else if (n == "Omega")
      texts = {"C0", "C1", "Om-nonconst"};
    else
      throw std::invalid_argument("minor_poset: unclassified source clone " + n);
    for (const auto& t : texts) {
      auto l = mk(-1, 0, 0);
      l.text = t;
      push(l);
    }
  }
  LabeledPoset out;
  reduce_and_fill(out, ls);
  return out;
}

std::vector<uint64_t> downsets(const LabeledPoset& P) {
  if (P.n > 24) throw std::runtime_error("downsets: poset too large");
  std::vector<uint32_t> down(P.n, 0);
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (P.leq(j, i)) down[i] |= uint32_t{1} << j;
  std::vector<uint64_t> out;
  uint64_t limit = uint64_t{1} << P.n;
  for (uint64_t s = 0; s < limit; ++s) {
    uint32_t req = 0;
    uint32_t m = uint32_t(s);
    while (m) {
      int i = __builtin_ctz(m);
      m &= m - 1;
      req |= down[i];
      if (req & ~uint32_t(s)) break;
    }
    if (!(req & ~uint32_t(s))) out.push_back(s);
  }
  return out;
}

}  // namespace clonoid
