#pragma once

#include <set>

#include "permmult/ring.hpp"

namespace pmc::acceptance {

struct FamilyResult {
  std::string family;
  bool clean_pass = false;
  std::vector<std::string> axioms;  // reported by the clean fixture, prefixed names left out
  std::set<std::string> covered;    // violated by at least one mutant
  std::vector<std::string> survivors;  // mutants the validator passed
  int mutants = 0;
};

// Identity of the sign category with P²_{x,y} = (−1)^{xy}; skewed, it also flips P²_{1,0}.
SymMonFunctor cocycle(PermCatPtr C, bool skew = false);

// Runs every validator on a clean fixture and on its seeded mutants.
std::vector<FamilyResult> run_mutant_catalogue();

}  // namespace pmc::acceptance
