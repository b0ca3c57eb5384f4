#include "clonoid/tables.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "clonoid/clonoid_engine.hpp"
#include "clonoid/postlattice.hpp"

namespace clonoid {

namespace {

std::string data_path(const std::string& file) {
  return std::string(CLONOID_DATA_DIR) + "/" + file;
}

struct SuiteSpec {
  std::string source, target;
  bool quads = false;  // rows regenerable from the block-product rule
};

const std::map<std::string, SuiteSpec>& suites() {
  static const std::map<std::string, SuiteSpec> s = {
      {"mclc", {"Mc", "Lc", false}},  {"mcsm", {"Mc", "SM", false}},
      {"mcvc", {"Mc", "Vc", true}},   {"sclc", {"Sc", "Lc", false}},
      {"scsm", {"Sc", "SM", false}},  {"scvc", {"Sc", "Vc", true}}};
  return s;
}

// Extensional signature of a descriptor at arities 1..4.
std::vector<uint64_t> signature(const ClassExpr& e) {
  FnSet s = FnSet::from_expr(e, 4);
  std::vector<uint64_t> sig;
  for (int n = 1; n <= 4; ++n)
    sig.insert(sig.end(), s.bits[n].begin(), s.bits[n].end());
  return sig;
}

// Block-product generation rules for the mcvc and scvc tables.  Each quad
// lists the descriptor's intersection with Om00, Om01, Om10, Om11.
std::vector<std::string> generate_quads(const std::string& suite) {
  std::vector<std::string> names;
  auto emit = [&](const std::string& a, const std::string& b,
                  const std::string& c, const std::string& d) {
    std::vector<std::string> atoms;
    for (const auto& x : {a, b, c, d})
      if (x != "Empty") atoms.push_back(x);
    if (atoms.empty()) {
      names.push_back("Empty");
      return;
    }
    std::string s;
    for (size_t i = 0; i < atoms.size(); ++i) s += (i ? "+" : "") + atoms[i];
    names.push_back(s);
  };
  if (suite == "mcvc") {
    const std::vector<std::string> As{"Empty", "C0", "Om00"};
    const std::vector<std::string> Bs{"Empty", "C1", "Ale2_11", "Om11"};
    const std::vector<std::string> Cs{"Empty", "A1_01", "Om01"};
    const std::vector<std::string> Ds{"Empty", "A1_10", "Om10"};
    for (const auto& a : As)
      for (const auto& b : Bs)
        for (const auto& c : Cs)
          for (const auto& d : Ds) {
            if (c != "Empty" && d != "Empty" &&
                !(b == "Ale2_11" || b == "Om11"))
              continue;
            if (a == "Om00" &&
                !((b == "Empty" || b == "C1" || b == "Om11") &&
                  (c == "Empty" || c == "Om01") &&
                  (d == "Empty" || d == "Om10")))
              continue;
            if ((c == "Om01" || d == "Om10") &&
                !(b == "Empty" || b == "C1" || b == "Om11"))
              continue;
            if (((c == "Om01" && d != "Empty") ||
                 (c != "Empty" && d == "Om10")) &&
                b != "Om11")
              continue;
            emit(a, b, c, d);
          }
    return names;
  }
  if (suite == "scvc") {
    const std::vector<std::string> As{"Empty", "C0", "Refl00", "Om00"};
    const std::vector<std::string> Bs{"Empty", "Smaj01", "Om01"};
    const std::vector<std::string> Cs{"Empty", "Smaj10", "Om10"};
    const std::vector<std::string> Ds{"Empty",  "C1",
                                      "Smaj11", "Refl11",
                                      "Smaj11+Refl11", "Om11"};
    auto has_refl = [](const std::string& d) {
      return d == "Refl11" || d == "Smaj11+Refl11" || d == "Om11";
    };
    auto has_smaj = [](const std::string& d) {
      return d == "Smaj11" || d == "Smaj11+Refl11" || d == "Om11";
    };
    for (const auto& a : As)
      for (const auto& b : Bs)
        for (const auto& c : Cs)
          for (const auto& d : Ds) {
            bool smaj_b = b != "Empty";
            bool smaj_c = c != "Empty";
            if (b == "Om01" && c == "Om10" && d != "Om11") continue;
            if ((a == "Om00" || b == "Om01" || c == "Om10") && has_refl(d) &&
                d != "Om11")
              continue;
            if (smaj_b && smaj_c && !has_smaj(d)) continue;
            if ((smaj_b || smaj_c) && has_refl(d) && !has_smaj(d)) continue;
            emit(a, b, c, d);
          }
    return names;
  }
  throw std::invalid_argument("no generation rule for suite " + suite);
}

std::vector<int> strictly_above(int id) {
  std::vector<int> out;
  for (int d = 0; d < clone_count(); ++d)
    if (d != id && clone_leq(id, d)) out.push_back(d);
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : suites()) out.push_back(k);
  return out;
}

std::vector<GoldenRow> load_golden(const std::string& suite) {
  if (!suites().count(suite))
    throw std::invalid_argument("unknown suite: " + suite);
  std::ifstream in(data_path("clonoids_" + suite + ".json"));
  if (!in) throw std::runtime_error("cannot open golden file for " + suite);
  nlohmann::json j;
  in >> j;
  std::vector<GoldenRow> rows;
  for (const auto& r : j) {
    GoldenRow row;
    row.name = r.at("name").get<std::string>();
    if (r.contains("c1")) row.c1 = r["c1"].get<std::string>();
    if (r.contains("c2")) row.c2 = r["c2"].get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

SuiteReport verify_suite(const std::string& suite, int cap) {
  SuiteReport rep;
  const auto& spec = suites().at(suite);
  int src = clone_index(spec.source), tgt = clone_index(spec.target);
  auto rows = load_golden(suite);
  rep.total = int(rows.size());
  std::vector<ClassExpr> exprs;
  for (const auto& r : rows) exprs.push_back(parse_class_expr(r.name));
  for (size_t i = 0; i < rows.size(); ++i) {
    auto r1 = check_right_stable(exprs[i], src, cap);
    auto r2 = check_left_stable(exprs[i], tgt, cap);
    if (r1.stable && r2.stable) {
      ++rep.stable;
    } else {
      rep.failures.push_back(rows[i].name + ": " +
                             (r1.stable ? r2.detail : r1.detail));
    }
  }
  std::vector<std::vector<uint64_t>> sigs;
  for (const auto& e : exprs) sigs.push_back(signature(e));
  for (size_t i = 0; i < sigs.size(); ++i) {
    bool dup = false;
    for (size_t j = 0; j < sigs.size(); ++j)
      if (j != i && sigs[i] == sigs[j]) {
        dup = true;
        if (j > i)
          rep.failures.push_back("duplicate rows: " + rows[i].name + " = " +
                                 rows[j].name);
      }
    if (!dup) ++rep.distinct;
  }
  if (spec.quads) {
    auto gen = generate_quads(suite);
    if (gen.size() != rows.size())
      rep.failures.push_back("generation rule yields " +
                             std::to_string(gen.size()) + " rows, table has " +
                             std::to_string(rows.size()));
    std::multiset<std::vector<uint64_t>> a(sigs.begin(), sigs.end()), b;
    for (const auto& n : gen) b.insert(signature(parse_class_expr(n)));
    if (a != b)
      rep.failures.push_back("generation rule disagrees with stored rows");
  }
  rep.ok = rep.failures.empty() && rep.stable == rep.total &&
           rep.distinct == rep.total;
  return rep;
}

SuiteReport verify_stability_columns(const std::string& suite) {
  SuiteReport rep;
  auto rows = load_golden(suite);
  rep.total = int(rows.size());
  for (const auto& r : rows) {
    if (r.c1.empty() || r.c2.empty()) {
      rep.failures.push_back(r.name + ": missing stability columns");
      continue;
    }
    ClassExpr e = parse_class_expr(r.name);
    int c1 = clone_index(r.c1), c2 = clone_index(r.c2);
    if (c1 < 0 || c2 < 0) {
      rep.failures.push_back(r.name + ": unknown clone in columns");
      continue;
    }
    bool row_ok = true;
    if (!check_right_stable(e, c1, 5).stable) {
      rep.failures.push_back(r.name + ": not right-stable under " + r.c1);
      row_ok = false;
    }
    if (!check_left_stable(e, c2, 4).stable) {
      rep.failures.push_back(r.name + ": not left-stable under " + r.c2);
      row_ok = false;
    }
    for (int d : strictly_above(c1)) {
      if (check_right_stable(e, d, 5).stable &&
          check_right_stable_deep(e, d).stable) {
        rep.failures.push_back(r.name + ": also right-stable under " +
                               clone_info(d).name);
        row_ok = false;
      }
    }
    for (int d : strictly_above(c2)) {
      if (check_left_stable(e, d, 4).stable) {
        rep.failures.push_back(r.name + ": also left-stable under " +
                               clone_info(d).name);
        row_ok = false;
      }
    }
    if (row_ok) ++rep.stable;
  }
  rep.distinct = rep.total;
  rep.ok = rep.failures.empty();
  return rep;
}

bool verify_postlattice_golden(std::string* message) {
  auto fail = [&](const std::string& m) {
    if (message) *message = m;
    return false;
  };
  std::ifstream in(data_path("postlattice.json"));
  if (!in) return fail("cannot open postlattice.json");
  nlohmann::json j;
  in >> j;
  auto names = clone_names();
  if (j.at("clones").size() != names.size())
    return fail("clone count mismatch");
  for (size_t i = 0; i < names.size(); ++i) {
    const auto& c = j["clones"][i];
    if (c.at("name") != names[i])
      return fail("clone name mismatch at index " + std::to_string(i));
    std::vector<std::string> gens;
    for (const auto& f : clone_generators(int(i)))
      gens.push_back(fn_to_string(f));
    if (c.at("generators").get<std::vector<std::string>>() != gens)
      return fail("generator mismatch for " + names[i]);
    if (c.at("dual") != clone_info(dual_clone(int(i))).name)
      return fail("dual mismatch for " + names[i]);
  }
  std::set<std::pair<std::string, std::string>> want;
  for (auto [a, b] : clone_covers())
    want.insert({clone_info(a).name, clone_info(b).name});
  std::set<std::pair<std::string, std::string>> have;
  for (const auto& e : j.at("covers"))
    have.insert({e[0].get<std::string>(), e[1].get<std::string>()});
  if (want != have) return fail("cover edges mismatch");
  if (message) message->clear();
  return true;
}

}  // namespace clonoid
