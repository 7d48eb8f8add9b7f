#pragma once

#include <memory>

#include "pcengel/automorphism.hpp"

namespace pcengel {

struct NamedAut {
  std::string name;
  Automorphism phi;
};

struct CatalogEntry {
  std::string name;
  std::shared_ptr<PcGroup> group;
  std::vector<NamedAut> automorphisms;
  std::vector<std::string> tags;  // "p-group", "soluble", "near-miss", ...
  std::string note;
};

// Deterministic built-in catalog. Every presentation passes
// consistency_check and every automorphism validates at build time.
std::vector<CatalogEntry> build_catalog();

const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& cat,
                                  const std::string& name);
const Automorphism& catalog_aut(const CatalogEntry& e, const std::string& name);

}  // namespace pcengel
