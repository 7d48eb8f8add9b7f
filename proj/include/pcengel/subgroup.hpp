#pragma once

#include <memory>
#include <optional>

#include "pcengel/pc.hpp"

namespace pcengel {

// Subgroup stored as an echelonized induced generating sequence: leading
// indices strictly increasing, leading exponents normalized to 1.
class Subgroup {
 public:
  static Subgroup trivial(const PcGroup& g);
  static Subgroup whole(const PcGroup& g);
  static Subgroup closure(const PcGroup& g, const std::vector<Elt>& gens);
  static Subgroup normal_closure(const PcGroup& g, const std::vector<Elt>& gens);

  const PcGroup& group() const { return *g_; }
  const std::vector<Elt>& igs() const { return igs_; }
  long long order() const;
  bool contains(const Elt& x) const;
  bool contains(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const;
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  bool is_trivial() const { return igs_.empty(); }
  bool is_whole() const { return order() == g_->order(); }
  bool is_normal() const;

  // Exponents of x along the igs (x = igs_0^{c_0} * igs_1^{c_1} * ...),
  // or nullopt when x is not a member.
  std::optional<std::vector<int>> coordinates(const Elt& x) const;
  Elt from_coordinates(const std::vector<long long>& c) const;

  // Canonical coset representative: igs slot exponents zeroed out.
  Elt coset_rep(Elt x) const;

  std::vector<Elt> elements(long long cap = 100000) const;

  struct AsGroup;
  // Pc presentation induced by the igs, with maps in both directions.
  AsGroup as_group(const std::string& name) const;

 private:
  explicit Subgroup(const PcGroup& g);
  bool sift(Elt x);  // true if the igs grew
  void rebuild_slots();

  const PcGroup* g_;
  std::vector<Elt> igs_;
  std::vector<int> slot_;  // generator index -> igs position or -1
};

struct Subgroup::AsGroup {
  std::shared_ptr<PcGroup> group;
  Subgroup parent;                       // copy of the subgroup itself
  Elt to_sub(const Elt& ambient) const;  // ambient member -> subgroup elt
  Elt to_ambient(const Elt& sub) const;
};

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b, long long cap = 100000);

struct LowerCentralSeries {
  std::vector<Subgroup> terms;  // gamma_1 = G, ...
  bool terminates;              // reached the trivial subgroup
};
LowerCentralSeries lower_central_series(const PcGroup& g);

Subgroup centre(const PcGroup& g, long long cap = 100000);
Subgroup hypercentre(const PcGroup& g, long long cap = 100000);
std::optional<int> nilpotency_class(const PcGroup& g);

// Quotient by a normal subgroup, as a pc group on the generators whose
// indices are not igs leading indices of N.
struct Quotient {
  std::shared_ptr<PcGroup> group;
  Subgroup kernel;
  std::vector<int> kept;  // quotient gen -> ambient gen index

  Elt project(const Elt& x) const;
  Elt lift(const Elt& q) const;
};
Quotient quotient(const PcGroup& g, const Subgroup& n);

}  // namespace pcengel
