#pragma once

#include <string>

#include "pcengel/subgroup.hpp"

namespace pcengel {

// Descending chain F_1 = G >= F_2 >= ... with F_m = 1; terms past the end
// are trivial by convention.
struct Filtration {
  const PcGroup* g = nullptr;
  std::vector<Subgroup> terms;  // terms[0] = F_1; last term trivial when terminating
  std::string kind;             // "lcs" | "zassenhaus(p)" | "intersected" | "custom"
  bool terminates = true;       // false only for the stabilized LCS of a
                                // non-nilpotent group

  // 1-based term access; indices past the chain give the trivial subgroup
  // (or the stabilized tail of a non-terminating series).
  Subgroup term(size_t i) const;
  size_t length() const { return terms.size(); }
};

struct StronglyCentralResult {
  bool ok = true;
  size_t i = 0, j = 0;  // failing pair when !ok
  std::string witness;
};

Filtration lcs_filtration(const PcGroup& g);
Filtration zassenhaus_filtration(const PcGroup& g, long long p);
StronglyCentralResult validate_strongly_central(const Filtration& f);
Filtration intersect_with(const Filtration& f, const Subgroup& c);

// Every Zassenhaus factor F_i/F_{i+1} has exponent p.
bool factors_have_exponent(const Filtration& f, long long p);

}  // namespace pcengel
