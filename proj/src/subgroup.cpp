#include "pcengel/subgroup.hpp"

#include <algorithm>
#include <set>

#include "pcengel/zmat.hpp"

namespace pcengel {

Subgroup::Subgroup(const PcGroup& g) : g_(&g), slot_(g.ngens(), -1) {}

Subgroup Subgroup::trivial(const PcGroup& g) { return Subgroup(g); }

Subgroup Subgroup::whole(const PcGroup& g) {
  Subgroup s(g);
  for (int i = 0; i < g.ngens(); ++i) {
    s.igs_.push_back(g.gen(i));
    s.slot_[i] = i;
  }
  return s;
}

void Subgroup::rebuild_slots() {
  std::sort(igs_.begin(), igs_.end(),
            [](const Elt& a, const Elt& b) { return a.leading() < b.leading(); });
  std::fill(slot_.begin(), slot_.end(), -1);
  for (size_t s = 0; s < igs_.size(); ++s) slot_[igs_[s].leading()] = (int)s;
}

bool Subgroup::sift(Elt x) {
  while (!x.is_identity()) {
    int i = x.leading();
    int s = slot_[i];
    if (s < 0) {
      // New leading index; normalize leading exponent to 1 (prime order).
      long long k = mod_inverse(x.e[i], g_->rel_order(i));
      igs_.push_back(g_->power(x, k));
      rebuild_slots();
      return true;
    }
    x = g_->mul(g_->power(igs_[s], g_->rel_order(i) - x.e[i]), x);
  }
  return false;
}

Subgroup Subgroup::closure(const PcGroup& g, const std::vector<Elt>& gens) {
  Subgroup h(g);
  for (const Elt& x : gens) {
    g.check_ambient(x);
    h.sift(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t a = 0; a < h.igs_.size() && !grew; ++a) {
      if (h.sift(g.power(h.igs_[a], g.rel_order(h.igs_[a].leading())))) grew = true;
      for (size_t b = 0; b < h.igs_.size() && !grew; ++b)
        if (h.sift(g.mul(h.igs_[a], h.igs_[b]))) grew = true;
    }
  }
  return h;
}

Subgroup Subgroup::normal_closure(const PcGroup& g, const std::vector<Elt>& gens) {
  Subgroup h = closure(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t a = 0; a < h.igs_.size() && !grew; ++a)
      for (int i = 0; i < g.ngens() && !grew; ++i)
        if (h.sift(g.conjugate(h.igs_[a], g.gen(i)))) grew = true;
    if (grew) h = closure(g, h.igs_);
  }
  return h;
}

long long Subgroup::order() const {
  long long o = 1;
  for (const Elt& x : igs_) o *= g_->rel_order(x.leading());
  return o;
}

bool Subgroup::contains(const Elt& x) const {
  g_->check_ambient(x);
  Elt y = x;
  while (!y.is_identity()) {
    int i = y.leading();
    int s = slot_[i];
    if (s < 0) return false;
    y = g_->mul(g_->power(igs_[s], g_->rel_order(i) - y.e[i]), y);
  }
  return true;
}

bool Subgroup::contains(const Subgroup& other) const {
  for (const Elt& x : other.igs_)
    if (!contains(x)) return false;
  return true;
}

bool Subgroup::operator==(const Subgroup& o) const {
  return order() == o.order() && contains(o);
}

bool Subgroup::is_normal() const {
  for (const Elt& x : igs_)
    for (int i = 0; i < g_->ngens(); ++i)
      if (!contains(g_->conjugate(x, g_->gen(i)))) return false;
  return true;
}

std::optional<std::vector<int>> Subgroup::coordinates(const Elt& x) const {
  g_->check_ambient(x);
  std::vector<int> c(igs_.size(), 0);
  Elt y = x;
  while (!y.is_identity()) {
    int i = y.leading();
    int s = slot_[i];
    if (s < 0) return std::nullopt;
    c[s] = y.e[i];
    // igs_[s]^{rel_order} may be a nontrivial power-relation tail, so strip
    // with the genuine inverse rather than the relative-order complement.
    y = g_->mul(g_->inverse(g_->power(igs_[s], c[s])), y);
  }
  return c;
}

Elt Subgroup::from_coordinates(const std::vector<long long>& c) const {
  Elt x = g_->identity();
  for (size_t s = 0; s < igs_.size(); ++s) {
    long long k = mod_floor(c[s], g_->rel_order(igs_[s].leading()));
    x = g_->mul(x, g_->power(igs_[s], k));
  }
  return x;
}

Elt Subgroup::coset_rep(Elt x) const {
  g_->check_ambient(x);
  for (int i = 0; i < g_->ngens(); ++i) {
    int s = slot_[i];
    if (s >= 0 && x.e[i]) x = g_->mul(x, g_->power(igs_[s], g_->rel_order(i) - x.e[i]));
  }
  return x;
}

std::vector<Elt> Subgroup::elements(long long cap) const {
  if (order() > cap)
    throw capacity_error("subgroup of order " + std::to_string(order()) +
                         " exceeds enumeration cap");
  std::vector<Elt> out;
  std::vector<long long> c(igs_.size(), 0);
  for (;;) {
    out.push_back(from_coordinates(c));
    int s = (int)igs_.size() - 1;
    while (s >= 0 && ++c[s] == g_->rel_order(igs_[s].leading())) c[s--] = 0;
    if (s < 0) break;
  }
  return out;
}

Subgroup::AsGroup Subgroup::as_group(const std::string& name) const {
  if (igs_.empty()) {
    // Degenerate one-generator presentation of the trivial group is not
    // representable; callers handle trivial subgroups separately.
    throw input_error("cannot present the trivial subgroup as a pc group");
  }
  PcGroup::Spec spec;
  spec.name = name;
  int t = (int)igs_.size();
  auto word_of = [&](const Elt& x) {
    auto c = coordinates(x);
    if (!c) throw input_error("subgroup presentation: product left the subgroup");
    Word w;
    for (int s = 0; s < t; ++s)
      if ((*c)[s]) w.emplace_back(s, (*c)[s]);
    return w;
  };
  for (int s = 0; s < t; ++s) {
    int lead = igs_[s].leading();
    spec.gen_names.push_back(g_->gen_name(lead));
    spec.orders.push_back(g_->rel_order(lead));
  }
  spec.powers.resize(t);
  for (int s = 0; s < t; ++s)
    spec.powers[s] = word_of(g_->power(igs_[s], spec.orders[s]));
  for (int s = 0; s < t; ++s)
    for (int u = s + 1; u < t; ++u) {
      Word w = word_of(g_->conjugate(igs_[u], igs_[s]));
      if (!(w.size() == 1 && w[0] == std::make_pair(u, 1))) spec.conj[{s, u}] = w;
    }
  AsGroup out{std::make_shared<PcGroup>(std::move(spec)), *this};
  return out;
}

Elt Subgroup::AsGroup::to_sub(const Elt& ambient) const {
  auto c = parent.coordinates(ambient);
  if (!c) throw input_error("element not in subgroup");
  return group->from_exponents(*c);
}

Elt Subgroup::AsGroup::to_ambient(const Elt& sub) const {
  group->check_ambient(sub);
  std::vector<long long> c(sub.e.begin(), sub.e.end());
  return parent.from_coordinates(c);
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const PcGroup& g = a.group();
  std::vector<Elt> gens;
  for (const Elt& x : a.igs())
    for (const Elt& y : b.igs()) gens.push_back(g.commutator(x, y));
  return Subgroup::normal_closure(g, gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b, long long cap) {
  const PcGroup& g = a.group();
  if (&b.group() != &g) throw input_error("intersect: subgroups of different groups");
  if (a.is_whole()) return b;
  if (b.is_whole()) return a;
  const Subgroup& small = a.order() <= b.order() ? a : b;
  const Subgroup& big = a.order() <= b.order() ? b : a;
  std::vector<Elt> common;
  for (const Elt& x : small.elements(cap))
    if (big.contains(x)) common.push_back(x);
  return Subgroup::closure(g, common);
}

LowerCentralSeries lower_central_series(const PcGroup& g) {
  LowerCentralSeries out;
  out.terms.push_back(Subgroup::whole(g));
  for (;;) {
    Subgroup next = commutator_subgroup(out.terms.back(), out.terms.front());
    if (next == out.terms.back()) {
      out.terminates = next.is_trivial();
      break;
    }
    out.terms.push_back(next);
    if (next.is_trivial()) {
      out.terminates = true;
      break;
    }
  }
  return out;
}

Subgroup centre(const PcGroup& g, long long cap) {
  if (g.order() > cap)
    throw capacity_error("centre: group order exceeds enumeration cap");
  std::vector<Elt> central;
  g.for_each_element([&](const Elt& x) {
    for (int i = 0; i < g.ngens(); ++i)
      if (!g.commutator(x, g.gen(i)).is_identity()) return;
    central.push_back(x);
  });
  return Subgroup::closure(g, central);
}

Subgroup hypercentre(const PcGroup& g, long long cap) {
  Subgroup z = Subgroup::trivial(g);
  for (;;) {
    if (z.is_whole()) return z;
    Quotient q = quotient(g, z);
    Subgroup c = centre(*q.group, cap);
    if (c.is_trivial()) return z;
    std::vector<Elt> gens = z.igs();
    for (const Elt& x : c.igs()) gens.push_back(q.lift(x));
    z = Subgroup::closure(g, gens);
  }
}

std::optional<int> nilpotency_class(const PcGroup& g) {
  LowerCentralSeries lcs = lower_central_series(g);
  if (!lcs.terminates) return std::nullopt;
  return (int)lcs.terms.size() - 1;
}

Quotient quotient(const PcGroup& g, const Subgroup& n) {
  if (&n.group() != &g) throw input_error("quotient: subgroup of a different group");
  std::vector<int> kept;
  std::vector<bool> killed(g.ngens(), false);
  for (const Elt& x : n.igs()) killed[x.leading()] = true;
  for (int i = 0; i < g.ngens(); ++i)
    if (!killed[i]) kept.push_back(i);

  if (kept.empty()) {
    // Trivial quotient: present as a single generator of the smallest
    // prime order with itself killed is impossible; use C_p on one gen of
    // order r_0 collapsed. Callers treat |Q| = 1 via an explicit C1 stand-in.
    throw input_error("quotient by the whole group is not representable");
  }

  std::vector<int> pos(g.ngens(), -1);
  for (size_t k = 0; k < kept.size(); ++k) pos[kept[k]] = (int)k;

  auto word_of = [&](Elt x) {
    x = n.coset_rep(std::move(x));
    Word w;
    for (int i = 0; i < g.ngens(); ++i)
      if (x.e[i]) {
        if (pos[i] < 0) throw input_error("quotient: subgroup is not normal");
        w.emplace_back(pos[i], x.e[i]);
      }
    return w;
  };

  PcGroup::Spec spec;
  spec.name = g.name() + "/N";
  for (int i : kept) {
    spec.gen_names.push_back(g.gen_name(i));
    spec.orders.push_back(g.rel_order(i));
  }
  spec.powers.resize(kept.size());
  for (size_t k = 0; k < kept.size(); ++k)
    spec.powers[k] = word_of(g.power(g.gen(kept[k]), spec.orders[k]));
  for (size_t a = 0; a < kept.size(); ++a)
    for (size_t b = a + 1; b < kept.size(); ++b) {
      Word w = word_of(g.conjugate(g.gen(kept[b]), g.gen(kept[a])));
      if (!(w.size() == 1 && w[0] == std::make_pair((int)b, 1)))
        spec.conj[{(int)a, (int)b}] = w;
    }
  Quotient q{std::make_shared<PcGroup>(std::move(spec)), n, kept};
  return q;
}

Elt Quotient::project(const Elt& x) const {
  Elt r = kernel.coset_rep(x);
  std::vector<int> e(kept.size(), 0);
  for (size_t k = 0; k < kept.size(); ++k) e[k] = r.e[kept[k]];
  return group->from_exponents(std::move(e));
}

Elt Quotient::lift(const Elt& q) const {
  group->check_ambient(q);
  Elt x = kernel.group().identity();
  for (size_t k = 0; k < kept.size(); ++k) x.e[kept[k]] = q.e[k];
  return x;
}

}  // namespace pcengel
