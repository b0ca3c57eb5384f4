#include "clonoid/kposet.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace clonoid {

LabeledPoset::LabeledPoset(int n_, std::vector<std::pair<int, int>> covers_,
                           std::vector<int> labels_, int bottom_, int top_,
                           std::vector<std::string> names_)
    : n(n_),
      covers(std::move(covers_)),
      labels(std::move(labels_)),
      bottom(bottom_),
      top(top_),
      names(std::move(names_)) {
  if (n < 0 || n > 64) throw std::invalid_argument("poset size out of range");
  if (int(labels.size()) != n) throw std::invalid_argument("labels size mismatch");
  up.assign(n, 0);
  for (int i = 0; i < n; ++i) up[i] |= uint64_t{1} << i;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("bad cover edge");
    up[a] |= uint64_t{1} << b;
  }
  // Transitive closure; also detects cycles (strict-order violation).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      uint64_t acc = up[i];
      uint64_t m = up[i];
      while (m) {
        int j = std::countr_zero(m);
        m &= m - 1;
        acc |= up[j];
      }
      if (acc != up[i]) {
        up[i] = acc;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(i, j) && leq(j, i))
        throw std::invalid_argument("order relation is not antisymmetric");
  if (bottom >= 0)
    for (int j = 0; j < n; ++j)
      if (!leq(bottom, j)) throw std::invalid_argument("bottom is not minimum");
  if (top >= 0)
    for (int j = 0; j < n; ++j)
      if (!leq(j, top)) throw std::invalid_argument("top is not maximum");
}

LabeledPoset fn_poset(const BoolFn& f) {
  int n = f.rows();
  std::vector<std::pair<int, int>> covers;
  std::vector<int> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = f.value_at_index(a);
    for (int i = 0; i < f.arity; ++i)
      if (!(a & (1 << i))) covers.emplace_back(a, a | (1 << i));
  }
  return LabeledPoset(n, std::move(covers), std::move(labels), 0, n - 1);
}

LabeledPoset chain_poset(int k, int a) {
  int n = k + 1;
  std::vector<std::pair<int, int>> covers;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = (i % 2 == 0) ? a : 1 - a;
    if (i + 1 < n) covers.emplace_back(i, i + 1);
  }
  return LabeledPoset(n, std::move(covers), std::move(labels), 0, n - 1);
}

namespace {

std::vector<int> linear_extension(const LabeledPoset& P) {
  std::vector<int> order(P.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = 0, db = 0;
    for (int j = 0; j < P.n; ++j) {
      da += P.leq(j, a);
      db += P.leq(j, b);
    }
    return da < db;
  });
  return order;
}

bool hom_search(const LabeledPoset& P, const LabeledPoset& Q,
                const std::vector<int>& order, size_t pos,
                std::vector<int>& img) {
  if (pos == order.size()) return true;
  int p = order[pos];
  if (img[p] >= 0) return hom_search(P, Q, order, pos + 1, img);
  for (int q = 0; q < Q.n; ++q) {
    if (Q.labels[q] != P.labels[p]) continue;
    bool ok = true;
    for (size_t i = 0; i < pos && ok; ++i) {
      int p2 = order[i];
      if (P.leq(p2, p) && !Q.leq(img[p2], q)) ok = false;
      if (P.leq(p, p2) && !Q.leq(q, img[p2])) ok = false;
    }
    if (!ok) continue;
    img[p] = q;
    if (hom_search(P, Q, order, pos + 1, img)) return true;
    img[p] = -1;
  }
  return false;
}

}  // namespace

HomResult hom_exists(const LabeledPoset& P, const LabeledPoset& Q, HomMode mode) {
  bool need_bot =
      mode == HomMode::BotPreserving || mode == HomMode::BotTopPreserving;
  bool need_top =
      mode == HomMode::TopPreserving || mode == HomMode::BotTopPreserving;
  if (need_bot && (P.bottom < 0 || Q.bottom < 0))
    throw std::invalid_argument("mode requires designated bottoms");
  if (need_top && (P.top < 0 || Q.top < 0))
    throw std::invalid_argument("mode requires designated tops");
  std::vector<int> img(P.n, -1);
  if (need_bot) {
    if (P.labels[P.bottom] != Q.labels[Q.bottom]) return {};
    img[P.bottom] = Q.bottom;
  }
  if (need_top) {
    if (P.labels[P.top] != Q.labels[Q.top]) return {};
    if (img[P.top] >= 0 && img[P.top] != Q.top) return {};
    img[P.top] = Q.top;
    if (need_bot && P.leq(P.bottom, P.top) && !Q.leq(img[P.bottom], Q.top))
      return {};
  }
  auto order = linear_extension(P);
  if (!hom_search(P, Q, order, 0, img)) return {};
  return {true, img};
}

std::vector<int> alt_depth(const LabeledPoset& P) {
  if (P.bottom < 0) throw std::invalid_argument("alt_depth needs a bottom");
  auto order = linear_extension(P);
  std::vector<int> d(P.n, 0);
  for (int x : order)
    for (int y = 0; y < P.n; ++y)
      if (y != x && P.leq(y, x))
        d[x] = std::max(d[x], d[y] + (P.labels[y] != P.labels[x]));
  return d;
}

std::vector<int> longest_alternating_chain(const LabeledPoset& P) {
  if (P.bottom < 0)
    throw std::invalid_argument("longest_alternating_chain needs a bottom");
  // u[x] = best number of label changes achievable on chains going up from x.
  std::vector<int> u(P.n, 0);
  auto order = linear_extension(P);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    for (int z = 0; z < P.n; ++z)
      if (z != x && P.leq(x, z))
        u[x] = std::max(u[x], u[z] + (P.labels[x] != P.labels[z]));
  }
  std::vector<int> chain{P.bottom};
  int cur = P.bottom;
  while (u[cur] > 0) {
    int pick = -1;
    for (int z = 0; z < P.n; ++z) {
      if (z == cur || !P.leq(cur, z)) continue;
      if (P.labels[z] == P.labels[cur]) continue;
      if (u[z] == u[cur] - 1) {
        pick = z;
        break;
      }
    }
    chain.push_back(pick);
    cur = pick;
  }
  return chain;
}

Collapse collapse_to_chain(const LabeledPoset& P) {
  for (int l : P.labels)
    if (l != 0 && l != 1)
      throw std::invalid_argument("collapse requires binary labels");
  auto d = alt_depth(P);
  int altval = *std::max_element(d.begin(), d.end());
  Collapse out;
  out.chain = chain_poset(altval, P.labels[P.bottom]);
  out.hom = std::move(d);
  return out;
}

std::string LabeledPoset::to_json() const {
  nlohmann::json j;
  j["elements"] = n;
  auto edges = nlohmann::json::array();
  for (auto [a, b] : covers) edges.push_back({a, b});
  j["covers"] = edges;
  j["labels"] = labels;
  if (bottom >= 0) j["bottom"] = bottom;
  if (top >= 0) j["top"] = top;
  if (!names.empty()) j["names"] = names;
  return j.dump();
}

std::string LabeledPoset::to_dot() const {
  std::string s = "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < n; ++i) {
    std::string label =
        names.empty() ? std::to_string(i) + ":" + std::to_string(labels[i])
                      : names[i];
    s += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (auto [a, b] : covers)
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace clonoid
