#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clonoid/clonoid_engine.hpp"
#include "clonoid/minorder.hpp"
#include "clonoid/postlattice.hpp"
#include "clonoid/tables.hpp"

namespace {

using namespace clonoid;

int default_cap() {
  if (const char* e = std::getenv("CLONOID_CAP")) {
    int v = std::atoi(e);
    if (v >= 1 && v <= 4) return v;
  }
  return 3;
}

BoolFn input_fn(const std::string& fn, const std::string& lambda) {
  if (!fn.empty()) return parse_fn(fn);
  if (!lambda.empty()) return lambda_fn(lambda);
  throw CLI::ValidationError("--fn or --lambda is required");
}

std::ostream& out_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("cannot open output file " + path);
  return file;
}

int require_clone(const std::string& name) {
  int id = clone_index(name);
  if (id < 0) {
    std::string valid;
    for (const auto& n : clone_names()) valid += valid.empty() ? n : " " + n;
    throw CLI::ValidationError("unknown clone '" + name +
                               "'; valid names: " + valid);
  }
  return id;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clones and clonoids of Boolean functions"};
  app.require_subcommand(1);
  std::string fn, lambda, source, target, cls, suite, format = "text", out;
  int cap = default_cap(), cutoff = 2;

  auto* classify = app.add_subcommand("classify", "minor-class label");
  classify->add_option("--fn", fn, "function as n:HEX");
  classify->add_option("--lambda", lambda, "weight-vector bits");
  classify->add_option("--source", source, "source clone")->required();

  auto* closure = app.add_subcommand("closure", "clonoid closure of a set");
  closure->add_option("--fn", fn);
  closure->add_option("--lambda", lambda);
  closure->add_option("--source", source)->required();
  closure->add_option("--target", target)->required();
  closure->add_option("--cap", cap);
  closure->add_option("--cutoff", cutoff);

  auto* enumerate = app.add_subcommand("enumerate", "clonoid lattice");
  enumerate->add_option("--source", source)->required();
  enumerate->add_option("--target", target)->required();
  enumerate->add_option("--cutoff", cutoff);
  enumerate->add_option("--format", format);
  enumerate->add_option("--out", out);

  auto* stable = app.add_subcommand("stable", "stability check");
  stable->add_option("--class", cls, "class expression")->required();
  stable->add_option("--source", source);
  stable->add_option("--target", target);
  stable->add_option("--cap", cap);

  auto* tables = app.add_subcommand("tables", "verify stored tables");
  tables->add_option("--suite", suite, "suite name or 'all'");

  auto* hasse = app.add_subcommand("hasse", "export a Hasse diagram");
  hasse->add_option("--source", source, "source clone (minor poset)");
  hasse->add_option("--cutoff", cutoff);
  hasse->add_option("--out", out);

  app.add_subcommand("list-clones", "encoded clone inventory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::ofstream file;
    if (classify->parsed()) {
      BoolFn f = input_fn(fn, lambda);
      std::cout << class_label(f, require_clone(source)).text << "\n";
      return 0;
    }
    if (closure->parsed()) {
      BoolFn f = input_fn(fn, lambda);
      FnSet K =
          clonoid_closure({f}, require_clone(source), require_clone(target), cap);
      for (int n = 1; n <= cap; ++n) {
        uint64_t c = 0;
        for (const auto& g : K.to_functions())
          if (g.arity == n) ++c;
        std::cout << "arity " << n << ": " << c << " functions\n";
      }
      auto en = enumerate_clonoids(source, target, cutoff);
      if (en.covered) {
        for (const auto& d : en.items)
          if (FnSet::from_expr(d.expr, cap) == K) {
            std::cout << "matches descriptor: " << d.name << "\n";
            return 0;
          }
        std::cout << "matches descriptor: none at cap " << cap << "\n";
      }
      return 0;
    }
    if (enumerate->parsed()) {
      auto en = enumerate_clonoids(source, target, cutoff);
      std::ostream& os = out_stream(out, file);
      if (!en.covered) {
        os << en.note << "\n";
        return 1;
      }
      os << en.items.size() << " (" << source << "," << target
         << ")-clonoids\n";
      for (const auto& d : en.items) {
        os << d.name;
        if (!d.stab_c1.empty()) os << " | " << d.stab_c1 << " | " << d.stab_c2;
        os << "\n";
      }
      return 0;
    }
    if (stable->parsed()) {
      ClassExpr e = parse_class_expr(cls);
      bool ok = true;
      if (!source.empty()) {
        auto r = check_right_stable(e, require_clone(source), cap);
        std::cout << (r.stable ? "PASS" : "FAIL") << " right " << source;
        if (!r.stable) std::cout << " " << r.detail;
        std::cout << "\n";
        ok = ok && r.stable;
      }
      if (!target.empty()) {
        auto r = check_left_stable(e, require_clone(target), cap);
        std::cout << (r.stable ? "PASS" : "FAIL") << " left " << target;
        if (!r.stable) std::cout << " " << r.detail;
        std::cout << "\n";
        ok = ok && r.stable;
      }
      return ok ? 0 : 1;
    }
    if (tables->parsed()) {
      std::vector<std::string> run;
      if (suite.empty() || suite == "all") {
        run = suite_names();
      } else {
        run.push_back(suite);
      }
      bool ok = true;
      if (suite.empty() || suite == "all") {
        std::string msg;
        bool pok = verify_postlattice_golden(&msg);
        std::cout << "postlattice: " << (pok ? "ok" : "FAIL " + msg) << "\n";
        ok = ok && pok;
      }
      for (const auto& s : run) {
        auto rep = verify_suite(s);
        std::cout << s << ": " << rep.stable << "/" << rep.total << " stable, "
                  << rep.distinct << "/" << rep.total << " distinct\n";
        for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
        ok = ok && rep.ok;
      }
      if (suite.empty() || suite == "all") {
        for (const char* s : {"mcvc", "scvc"}) {
          auto rep = verify_stability_columns(s);
          std::cout << s << " stability columns: "
                    << (rep.ok ? "ok" : "FAIL") << "\n";
          for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
          ok = ok && rep.ok;
        }
        const std::pair<const char*, std::pair<int, size_t>> posets[] = {
            {"Sc", {16, 1296}}, {"S", {7, 19}}, {"Tc", {6, 36}},
            {"T0", {4, 9}},     {"T1", {4, 9}}, {"Omega", {3, 5}}};
        for (auto [name, want] : posets) {
          auto p = minor_poset(clone_index(name));
          size_t ds = downsets(p).size();
          bool pok = p.n == want.first && ds == want.second;
          std::cout << name << " minor classes: " << p.n << ", downsets: " << ds
                    << (pok ? "" : " MISMATCH") << "\n";
          ok = ok && pok;
        }
      }
      return ok ? 0 : 1;
    }
    if (hasse->parsed()) {
      std::ostream& os = out_stream(out, file);
      if (source.empty()) {
        // Clone lattice.
        std::string s = "digraph clones {\n  rankdir=BT;\n";
        for (int i = 0; i < clone_count(); ++i)
          s += "  n" + std::to_string(i) + " [label=\"" + clone_info(i).name +
               "\"];\n";
        for (auto [a, b] : clone_covers())
          s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
        s += "}\n";
        os << s;
      } else {
        int id = require_clone(source);
        bool mon = source == "M" || source == "M0" || source == "M1" ||
                   source == "Mc";
        os << minor_poset(id, mon ? cutoff : -1).to_dot();
      }
      return 0;
    }
    // list-clones
    for (int i = 0; i < clone_count(); ++i) {
      std::cout << clone_info(i).name << ": " << clone_info(i).description
                << "; generators:";
      auto gens = clone_generators(i);
      if (gens.empty()) std::cout << " (projections only)";
      for (const auto& g : gens) std::cout << " " << fn_to_string(g);
      std::cout << "\n";
    }
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
