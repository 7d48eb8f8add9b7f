#pragma once

#include "pcengel/catalog.hpp"

namespace pcengel {

// Line-based text format:
//   group <name> / gen <sym> <prime> / pow <sym> = <word>
//   / conj <sym> <sym> = <word> / end
//   aut <name> on <group> / <sym> -> <word> / end
// where <word> is `eps` or a `*`-separated list of sym^int (bare sym = ^1).
// Parse errors carry 1-based line numbers. Groups are consistency-checked
// and automorphisms validated on construction.
std::vector<CatalogEntry> parse_text(const std::string& content);
std::vector<CatalogEntry> parse_text_file(const std::string& path);

std::string serialize_word(const PcGroup& g, const Word& w);
std::string serialize_group(const PcGroup& g);
std::string serialize_automorphism(const std::string& name, const Automorphism& phi);
std::string serialize_entry(const CatalogEntry& e);

}  // namespace pcengel
