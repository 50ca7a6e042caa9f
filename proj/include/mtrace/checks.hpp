#pragma once

#include <string>
#include <vector>

#include "mtrace/mtrace.hpp"

namespace mtrace {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The standard module corpus of an algebra: the unit, the regular module,
// the indecomposable projectives (P0 = projective cover of the unit first),
// and the socle of P0.
struct Corpus {
  HopfPtr algebra;
  ModulePtr unit;
  ModulePtr regular;
  std::vector<ModulePtr> projectives;  // P0, P1, ..., then the regular module
  ModulePtr alpha;                     // socle of P0
  std::vector<std::pair<std::string, ModulePtr>> registry;
  std::vector<ModulePtr> pivotal_corpus;
};

Corpus standard_corpus(const HopfPtr& h, unsigned long seed = 1);

// Named executable invariants.  Exact equality everywhere; `n` controls the
// number of random samples, `seed` the sampling stream.
std::vector<CheckResult> pivotal_suite(const Corpus& c, unsigned long seed,
                                       std::size_t n);
std::vector<CheckResult> mtrace_suite(const Corpus& c, unsigned long seed,
                                      std::size_t n);
std::vector<CheckResult> cy_suite(const Corpus& c, unsigned long seed,
                                  std::size_t n);

// suite in {"pivotal", "mtrace", "cy", "all"}.
std::vector<CheckResult> run_suite(const Corpus& c, const std::string& suite,
                                   unsigned long seed, std::size_t n);

}  // namespace mtrace
