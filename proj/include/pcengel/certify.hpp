#pragma once

#include <map>

#include "pcengel/catalog.hpp"
#include "pcengel/engel.hpp"

namespace pcengel {

struct CertificationReport {
  std::string suite;
  std::string group;
  std::string automorphism;  // empty when the suite takes no automorphism
  bool hypotheses_met = false;
  std::string hypothesis_reason;  // populated when hypotheses fail
  bool conclusion_holds = false;  // meaningful only when hypotheses_met
  std::vector<std::string> witnesses;
  std::map<std::string, long long> observed;
  std::string note;
};

// Nilpotency-class bounds h(q) for fixed-point-free automorphisms of prime
// order q. Only q in {2, 3} ship; both are re-verified against the catalog
// before any suite consumes them.
struct LiteratureConstants {
  std::map<long long, int> higman_bounds;
  std::map<long long, std::string> provenance;
};
LiteratureConstants literature_constants();

// Brute-force re-derivation over catalog groups of order <= order_cap:
// no nonabelian group admits a coprime fpf automorphism of order 2, no
// q = 3 fpf example exceeds class 2, and both bounds are realized.
bool verify_higman_bounds(const std::vector<CatalogEntry>& cat,
                          const LiteratureConstants& lc, long long order_cap = 200);

// Right Engel set lies in the hypercentre; for finite groups equality is
// recorded as an observation.
CertificationReport baer_check(const PcGroup& g, long long cap = 100000);

// Fixed-point-free coprime automorphism of prime order forces nilpotency.
CertificationReport thompson_check(const PcGroup& g, const Automorphism& phi);

// Under the same hypotheses the class is bounded by h(q); unknown q records
// the observed class without asserting.
CertificationReport higman_check(const PcGroup& g, const Automorphism& phi,
                                 const LiteratureConstants& lc);

// Coprime prime order with every fixed point right Engel forces nilpotency;
// records the observed parameters (d, q, n, c, class).
CertificationReport main_theorem_check(const PcGroup& g, const Automorphism& phi);

// With S fixed points covering C_G(phi) modulo gamma_{h(q)+2}, the term
// gamma_{h(q)+1} lies in the normal closure of S.
CertificationReport closure_lemma_check(const PcGroup& g, const Automorphism& phi,
                                        const LiteratureConstants& lc);

// Lie-level aggregate: builds the graded ring on the lcs, extends scalars by
// q, decomposes into eigencomponents and runs the projection, grading,
// ad-nilpotency and fixed-point-subring checks. Requires p > n for the
// Lie-level parts; the group-level parts always run. Identity automorphisms
// are an input error.
CertificationReport engel_suite(const PcGroup& g, const Automorphism& phi,
                                long long p, long long q);

// One suite across the whole catalog; reports sorted by (group, automorphism).
std::vector<CertificationReport> run_suite(const std::string& suite,
                                           const std::vector<CatalogEntry>& cat);

const std::vector<std::string>& known_suites();

}  // namespace pcengel
