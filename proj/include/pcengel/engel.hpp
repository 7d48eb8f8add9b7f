#pragma once

#include "pcengel/lie.hpp"

namespace pcengel {

enum class Verdict { pass, fail, hypothesis_not_met };

// ---------- group level ----------

Elt engel_word(const PcGroup& g, const Elt& y, const Elt& x, int n);

struct EngelProfile {
  Elt element;
  bool right_engel = false;
  int right_degree = 0;  // max over x of the first hitting time, when right_engel
  std::optional<Elt> right_witness;
  bool left_engel = false;
  int left_degree = 0;
  std::optional<Elt> left_witness;
};

// Exact decision by cycle detection over all x in the group.
EngelProfile engel_profile(const PcGroup& g, const Elt& e, long long cap = 100000);

struct EngelSet {
  bool whole = false;        // set equals the whole group
  std::vector<Elt> members;  // filled when computed by enumeration
  int max_degree = 0;
  bool exhaustive = true;    // false when the nilpotency shortcut was used
};

// Exhaustive for |G| <= exhaustive_cap; above it, nilpotent groups use the
// class bound plus sampled verification, anything else is a capacity error.
EngelSet right_engel_set(const PcGroup& g, unsigned seed = 1,
                         long long exhaustive_cap = 2000);

// Every h whose inverse is right n-Engel must be left (n+1)-Engel.
bool heineken_check(const PcGroup& g, int n, unsigned seed = 1,
                    long long exhaustive_cap = 2000);

// ---------- Lie level ----------

LieElt lie_engel_word(const GradedLieRing& l, const LieElt& y, const LieElt& x, int n);
ExtLieRing::ExtElt ext_engel_word(const ExtLieRing& l, const ExtLieRing::ExtElt& y,
                                  const ExtLieRing::ExtElt& x, int n);

// [[u,v],_n w] = sum_i C(n,i) [[u,_i w],[v,_{n-i} w]]
bool leibniz_check(const GradedLieRing& l, const LieElt& u, const LieElt& v,
                   const LieElt& w, int n);

// [[u,v],_{p^s} w] = [[u,_{p^s} w], v] + [u, [v,_{p^s} w]] in characteristic p
bool char_p_identity_check(const GradedLieRing& l, const LieElt& u, const LieElt& v,
                           const LieElt& w, int s);

struct AdnReport {
  bool hypotheses_met = false;
  std::string reason;
  long long ps = 0;   // least power of p >= max Engel degree of the generators
  int max_index = 0;  // largest ad-nilpotency index over all brackets
  bool ok = false;    // max_index <= ps
  std::vector<int> degrees;  // right Engel degrees of the generators
};
AdnReport commutator_ad_nilpotency_check(const PcGroup& g,
                                         const std::vector<Elt>& gens, long long p);

// sum over all permutations pi of [x0, a_{pi(1)}, ..., a_{pi(n)}]; n <= 8
ExtLieRing::ExtElt linearization_sum(const ExtLieRing& ext,
                                     const ExtLieRing::ExtElt& x0,
                                     const std::vector<ExtLieRing::ExtElt>& a);

struct VerdictReport {
  Verdict verdict = Verdict::pass;
  std::string detail;
};

// [x0,_n l] = 0 for all generators x0 of the zero eigenspaces and all
// homogeneous l; requires p > n
VerdictReport adn0_check(const ExtLieRing& ext, const EigenDecomposition& dec, int n,
                         long long p, long long enum_cap = 100000);

struct AdnkReport {
  Verdict verdict = Verdict::pass;
  std::string detail;
  int max_nonzero_index = 0;                 // over eigenvectors with k != 0
  std::map<long long, int> observed_by_k;    // including k = 0 observations
};
// every eigenvector with k != 0 is ad-nilpotent of index <= q + n - 1;
// k = 0 indices are recorded, not asserted
AdnkReport adnk_index_check(const ExtLieRing& ext, const EigenDecomposition& dec,
                            long long q, int n, long long enum_cap = 100000);

// for k != 0 eigenvectors l and weights j, the initial segment [x_j,_s l]
// with s = -j k^{-1} mod q lands in the zero eigenspace
bool initial_segment_check(const ExtLieRing& ext, const EigenDecomposition& dec,
                           long long q, long long enum_cap = 100000);

// all elements of a ModSubgroup, for eigencomponent scans
std::vector<Zvec> enumerate_mod_subgroup(const ModSubgroup& m, long long cap = 100000);

}  // namespace pcengel
