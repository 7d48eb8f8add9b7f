#pragma once

#include <optional>

#include "pcengel/automorphism.hpp"
#include "pcengel/filtration.hpp"
#include "pcengel/zmat.hpp"

namespace pcengel {

// Coefficient vectors over the basis 1, w, ..., w^{q-2} with the reduction
// w^{q-1} = -(1 + w + ... + w^{q-2}); exact for any modulus coprime to q.
Zvec cyc_zero(long long q);
Zvec cyc_one(long long q);
Zvec cyc_omega_pow(long long q, long long k);
Zvec cyc_add(const Zvec& a, const Zvec& b, long long mod);
Zvec cyc_neg(const Zvec& a, long long mod);
Zvec cyc_mul(long long q, const Zvec& a, const Zvec& b, long long mod);
bool cyc_is_zero(const Zvec& a, long long mod);

struct CyclotomicRing {
  long long q;        // prime
  long long modulus;  // p^m, coprime to q

  CyclotomicRing(long long q_, long long modulus_);
  int dim() const { return (int)q - 1; }
  Zvec zero() const { return cyc_zero(q); }
  Zvec one() const { return cyc_one(q); }
  Zvec omega_pow(long long k) const { return cyc_omega_pow(q, k); }
  Zvec add(const Zvec& a, const Zvec& b) const { return cyc_add(a, b, modulus); }
  Zvec neg(const Zvec& a) const { return cyc_neg(a, modulus); }
  Zvec mul(const Zvec& a, const Zvec& b) const { return cyc_mul(q, a, b, modulus); }
  bool is_zero(const Zvec& a) const { return cyc_is_zero(a, modulus); }
  Zvec scale_by_inv_q(const Zvec& a) const;
};

// Homogeneous element: weight 0 with empty coordinates is the zero element;
// otherwise coordinates along the diagonalized generators of its component.
struct LieElt {
  int weight = 0;
  Zvec c;
};

struct AxiomResult {
  bool ok = true;
  std::string witness;
};

// Additive subgroup per weight, coordinates along component generators.
struct GradedSub {
  std::vector<ModSubgroup> per_weight;  // index v-1
  bool is_zero() const;
  long long size() const;
};

class GradedLieRing {
 public:
  struct Component {
    int weight;
    std::vector<long long> orders;  // invariant factors > 1
    std::vector<int> kept;          // columns of V with order > 1
    Zmat V, Vinv;                   // igs coords <-> diagonal coords
    Subgroup F, Fnext;
    int rank() const { return (int)orders.size(); }
  };

  GradedLieRing(const PcGroup& g, const Filtration& f);

  const PcGroup& group() const { return *g_; }
  const Filtration& filtration() const { return f_; }
  int nweights() const { return (int)comps_.size(); }
  const Component& component(int v) const { return comps_.at(v - 1); }
  long long order() const;  // additive order of the whole ring

  // element algebra
  LieElt zero() const { return LieElt{}; }
  LieElt gen(int v, int a) const;
  bool is_zero(const LieElt& x) const;
  LieElt add(const LieElt& x, const LieElt& y) const;
  LieElt neg(const LieElt& x) const;
  LieElt smul(long long k, const LieElt& x) const;
  LieElt bracket(const LieElt& x, const LieElt& y) const;
  bool equal(const LieElt& x, const LieElt& y) const;

  // group <-> ring
  LieElt class_of(int v, const Elt& x) const;  // x in F_v
  Elt lift(const LieElt& x) const;             // representative in F_weight

  // structure constant table access; the setter exists for corruption
  // fixtures in tests
  const Zvec& structure_constant(int v, int a, int w, int b) const;
  void set_structure_constant(int v, int a, int w, int b, Zvec val);

  AxiomResult check_axioms(unsigned seed = 1, long long well_defined_cap = 2000) const;

  // graded additive subgroups
  GradedSub zero_sub() const;
  GradedSub full_sub() const;
  GradedSub span(const std::vector<LieElt>& xs) const;
  bool sub_contains(const GradedSub& s, const LieElt& x) const;
  std::vector<LieElt> sub_gens(const GradedSub& s) const;
  GradedSub bracket_span(const GradedSub& a, const std::vector<LieElt>& gens) const;
  bool sub_equal(const GradedSub& a, const GradedSub& b) const;

  std::vector<GradedSub> lie_lower_central_series() const;
  int lie_nilpotency_class() const;
  GradedSub subring_generated(const std::vector<LieElt>& s) const;

  int ad_nilpotency_index(const LieElt& a) const;
  int minimal_epsilon(const std::vector<LieElt>& m_gens) const;

 private:
  const PcGroup* g_;
  Filtration f_;
  std::vector<Component> comps_;
  // brackets_[v-1][w-1][a][b] = coords in component v+w
  std::vector<std::vector<std::vector<std::vector<Zvec>>>> brackets_;

  Zvec reduce(int v, Zvec c) const;
  Zvec to_diag(int v, const Elt& x) const;
};

// Automorphism induced on the graded ring: one integer matrix per weight,
// rows = images of component generators.
struct LieAut {
  std::vector<Zmat> mats;  // index v-1
};
LieAut induced_automorphism(const GradedLieRing& l, const Automorphism& phi);
LieElt lie_aut_apply(const GradedLieRing& l, const LieAut& a, const LieElt& x);

bool class_equality_check(const PcGroup& g);

struct LpData {
  Filtration filtration;
  std::shared_ptr<GradedLieRing> ring;  // D_p(g)
  GradedSub lp;                         // subring generated by weight 1
};
LpData lp_from_zassenhaus(const PcGroup& g, long long p);
bool dp_lp_coincidence_check(const PcGroup& g, long long p);

// Scalar extension by a primitive q-th root of unity: flattened coordinates,
// q-1 slots per component generator.
class ExtLieRing {
 public:
  struct ExtElt {
    int weight = 0;
    Zvec c;  // rank * (q-1) entries, generator-major
  };

  ExtLieRing(const GradedLieRing& base, long long q);

  const GradedLieRing& base() const { return *base_; }
  long long q() const { return q_; }
  int rank(int v) const { return base_->component(v).rank(); }
  int ext_rank(int v) const { return rank(v) * (int)(q_ - 1); }
  std::vector<long long> ext_moduli(int v) const;

  ExtElt zero() const { return ExtElt{}; }
  ExtElt embed(const LieElt& x) const;
  std::optional<LieElt> restrict_to_base(const ExtElt& x) const;
  ExtElt basis(int v, int a, int k) const;  // generator a tensor w^k
  bool is_zero(const ExtElt& x) const;
  ExtElt add(const ExtElt& x, const ExtElt& y) const;
  ExtElt neg(const ExtElt& x) const;
  ExtElt smul_int(long long k, const ExtElt& x) const;
  ExtElt smul(const Zvec& scalar, const ExtElt& x) const;  // cyclotomic scalar
  ExtElt bracket(const ExtElt& x, const ExtElt& y) const;
  bool equal(const ExtElt& x, const ExtElt& y) const;
  ExtElt apply(const LieAut& a, const ExtElt& x) const;

  int ad_nilpotency_index(const ExtElt& a) const;
  int lie_nilpotency_class() const;

 private:
  const GradedLieRing* base_;
  long long q_;
  Zvec reduce(int v, Zvec c) const;
};

// Eigenspace decomposition of the extended ring under a coprime
// automorphism of order q.
class EigenDecomposition {
 public:
  EigenDecomposition(const ExtLieRing& ext, const LieAut& phi, long long q);

  const ExtLieRing& ext() const { return *ext_; }
  long long q() const { return q_; }
  const LieAut& phi() const { return *phi_; }

  ExtLieRing::ExtElt project(long long j, const ExtLieRing::ExtElt& x) const;
  const ModSubgroup& eigencomponent(int v, long long j) const;
  std::vector<ExtLieRing::ExtElt> eigen_gens(int v, long long j) const;
  bool member(long long j, const ExtLieRing::ExtElt& x) const;

  AxiomResult projection_checks() const;
  // tamper hook for corrupted-fixture tests
  void corrupt_projection(int v, long long j, int basis_index, Zvec image);

 private:
  const ExtLieRing* ext_;
  const LieAut* phi_;
  long long q_;
  // proj_[v-1][j][basis index] = image coordinates
  std::vector<std::vector<std::vector<Zvec>>> proj_;
  std::vector<std::vector<ModSubgroup>> eigen_;  // [v-1][j]
  void rebuild_eigen();
};

AxiomResult grading_check(const EigenDecomposition& dec);

}  // namespace pcengel
