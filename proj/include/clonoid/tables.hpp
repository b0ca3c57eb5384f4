#pragma once

#include <string>
#include <vector>

namespace clonoid {

// A row of one of the stored classification tables: descriptor name plus,
// where tabled, the largest right/left stabilizing clones.
struct GoldenRow {
  std::string name;
  std::string c1, c2;
};

// Suites: mclc, mcsm, mcvc, sclc, scsm, scvc.
std::vector<std::string> suite_names();
std::vector<GoldenRow> load_golden(const std::string& suite);

struct SuiteReport {
  bool ok = false;
  int total = 0;
  int stable = 0;    // rows stable as a clonoid for the suite's pair
  int distinct = 0;  // rows pairwise distinct extensionally
  std::vector<std::string> failures;
};

// Recomputes a stored table: every row right-stable under the suite's source
// and left-stable under its target at cap, all rows pairwise distinct at
// arity <= 4, and (mcvc/scvc) the block-product generation rule reproduces
// the stored rows exactly.
SuiteReport verify_suite(const std::string& suite, int cap = 3);

// Verifies the stabilizing-clone columns: the prescribed clones pass, and
// every encoded clone strictly above a prescribed one is refuted.
SuiteReport verify_stability_columns(const std::string& suite);

// Cross-checks data/postlattice.json (names, generators, cover edges)
// against the computed clone registry.
bool verify_postlattice_golden(std::string* message = nullptr);

}  // namespace clonoid
