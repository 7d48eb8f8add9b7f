#include "pcengel/lie.hpp"

#include <random>

namespace pcengel {

// ---------- cyclotomic coefficient arithmetic ----------

Zvec cyc_zero(long long q) { return Zvec(q - 1, 0); }

Zvec cyc_one(long long q) {
  Zvec v(q - 1, 0);
  v[0] = 1;
  return v;
}

Zvec cyc_omega_pow(long long q, long long k) {
  k = mod_floor(k, q);
  Zvec v(q - 1, 0);
  if (k <= q - 2)
    v[k] = 1;
  else
    for (auto& x : v) x = -1;  // w^{q-1} = -(1 + w + ... + w^{q-2})
  return v;
}

Zvec cyc_add(const Zvec& a, const Zvec& b, long long mod) {
  Zvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i] + b[i], mod);
  return r;
}

Zvec cyc_neg(const Zvec& a, long long mod) {
  Zvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(-a[i], mod);
  return r;
}

Zvec cyc_mul(long long q, const Zvec& a, const Zvec& b, long long mod) {
  Zvec conv(2 * q - 3, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
  }
  // w^e = w^{e-q} for e >= q, then eliminate w^{q-1} by the minimal relation.
  for (long long e = 2 * q - 4; e >= q; --e) {
    conv[e - q] += conv[e];
    conv[e] = 0;
  }
  Zvec r(q - 1);
  long long top = (q - 1 < (long long)conv.size()) ? conv[q - 1] : 0;
  for (long long i = 0; i < q - 1; ++i) r[i] = mod_floor(conv[i] - top, mod);
  return r;
}

bool cyc_is_zero(const Zvec& a, long long mod) {
  for (auto x : a)
    if (mod_floor(x, mod)) return false;
  return true;
}

CyclotomicRing::CyclotomicRing(long long q_, long long modulus_)
    : q(q_), modulus(modulus_) {
  if (!is_prime(q)) throw hypothesis_error("cyclotomic order must be prime");
  if (gcd_ll(q, modulus) != 1)
    throw hypothesis_error("cyclotomic order must be invertible in the scalars");
}

Zvec CyclotomicRing::scale_by_inv_q(const Zvec& a) const {
  long long inv = mod_inverse(q, modulus);
  Zvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i] * inv, modulus);
  return r;
}

// ---------- graded subgroups ----------

bool GradedSub::is_zero() const {
  for (const auto& m : per_weight)
    if (m.size() != 1) return false;
  return true;
}

long long GradedSub::size() const {
  long long s = 1;
  for (const auto& m : per_weight) s *= m.size();
  return s;
}

// ---------- GradedLieRing ----------

GradedLieRing::GradedLieRing(const PcGroup& g, const Filtration& f) : g_(&g), f_(f) {
  auto sc = validate_strongly_central(f);
  if (!sc.ok)
    throw hypothesis_error("filtration is not strongly central: [" +
                           std::to_string(sc.i) + "," + std::to_string(sc.j) +
                           "]: " + sc.witness);
  if (!f.terminates || f.terms.empty() || !f.terms.back().is_trivial())
    throw hypothesis_error("filtration does not reach the trivial subgroup");

  int m = (int)f.terms.size();
  for (int v = 1; v <= m - 1; ++v) {
    const Subgroup& F = f_.terms[v - 1];
    const Subgroup& Fn = f_.terms[v];
    Component comp{v, {}, {}, {}, {}, F, Fn};
    int t = (int)F.igs().size();
    if (t > 0) {
      Zmat rel;
      for (int s = 0; s < t; ++s) {
        long long r = g.rel_order(F.igs()[s].leading());
        auto c = F.coordinates(g.power(F.igs()[s], r));
        Zvec row(t, 0);
        row[s] = r;
        for (int j = 0; j < t; ++j) row[j] -= (*c)[j];
        rel.push_back(std::move(row));
      }
      for (const Elt& w : Fn.igs()) {
        auto c = F.coordinates(w);
        rel.emplace_back(c->begin(), c->end());
      }
      auto snf = smith_normal_form(std::move(rel));
      comp.V = std::move(snf.v);
      comp.Vinv = std::move(snf.vinv);
      long long prod = 1;
      for (int j = 0; j < t; ++j) {
        long long d = snf.s[j][j];
        if (d == 0) throw input_error("component diagonalization failed");
        prod *= d;
        if (d > 1) {
          comp.kept.push_back(j);
          comp.orders.push_back(d);
        }
      }
      if (prod != F.order() / Fn.order())
        throw input_error("component order mismatch at weight " + std::to_string(v));
    }
    comps_.push_back(std::move(comp));
  }

  int nw = nweights();
  brackets_.assign(nw, {});
  for (int v = 1; v <= nw; ++v) {
    brackets_[v - 1].assign(nw, {});
    for (int w = 1; w <= nw && v + w <= nw; ++w) {
      auto& table = brackets_[v - 1][w - 1];
      table.assign(comps_[v - 1].rank(), std::vector<Zvec>(comps_[w - 1].rank()));
      for (int a = 0; a < comps_[v - 1].rank(); ++a)
        for (int b = 0; b < comps_[w - 1].rank(); ++b)
          table[a][b] =
              to_diag(v + w, g.commutator(lift(gen(v, a)), lift(gen(w, b))));
    }
  }
}

long long GradedLieRing::order() const {
  long long o = 1;
  for (const auto& c : comps_)
    for (auto d : c.orders) o *= d;
  return o;
}

Zvec GradedLieRing::reduce(int v, Zvec c) const {
  const auto& orders = comps_[v - 1].orders;
  for (size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], orders[i]);
  return c;
}

Zvec GradedLieRing::to_diag(int v, const Elt& x) const {
  const Component& comp = comps_[v - 1];
  auto c = comp.F.coordinates(x);
  if (!c) throw input_error("element not in filtration term " + std::to_string(v));
  int t = (int)c->size();
  Zvec full(t, 0);
  for (int j = 0; j < t; ++j)
    for (int s = 0; s < t; ++s) full[j] += (long long)(*c)[s] * comp.V[s][j];
  Zvec out;
  for (size_t a = 0; a < comp.kept.size(); ++a)
    out.push_back(mod_floor(full[comp.kept[a]], comp.orders[a]));
  return out;
}

LieElt GradedLieRing::gen(int v, int a) const {
  Zvec c(comps_[v - 1].rank(), 0);
  c[a] = 1;
  return LieElt{v, std::move(c)};
}

bool GradedLieRing::is_zero(const LieElt& x) const {
  if (x.weight == 0) return true;
  const auto& orders = comps_[x.weight - 1].orders;
  for (size_t i = 0; i < x.c.size(); ++i)
    if (mod_floor(x.c[i], orders[i])) return false;
  return true;
}

LieElt GradedLieRing::add(const LieElt& x, const LieElt& y) const {
  if (is_zero(x)) return LieElt{y.weight, y.weight ? reduce(y.weight, y.c) : Zvec{}};
  if (is_zero(y)) return LieElt{x.weight, reduce(x.weight, x.c)};
  if (x.weight != y.weight)
    throw input_error("sum of homogeneous elements of different weights");
  Zvec c(x.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = x.c[i] + y.c[i];
  return LieElt{x.weight, reduce(x.weight, std::move(c))};
}

LieElt GradedLieRing::neg(const LieElt& x) const { return smul(-1, x); }

LieElt GradedLieRing::smul(long long k, const LieElt& x) const {
  if (x.weight == 0) return zero();
  Zvec c(x.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = k * x.c[i];
  return LieElt{x.weight, reduce(x.weight, std::move(c))};
}

LieElt GradedLieRing::bracket(const LieElt& x, const LieElt& y) const {
  if (is_zero(x) || is_zero(y)) return zero();
  int z = x.weight + y.weight;
  if (z > nweights()) return zero();
  Zvec r(comps_[z - 1].rank(), 0);
  const auto& table = brackets_[x.weight - 1][y.weight - 1];
  for (size_t a = 0; a < x.c.size(); ++a) {
    if (!x.c[a]) continue;
    for (size_t b = 0; b < y.c.size(); ++b) {
      if (!y.c[b]) continue;
      const Zvec& t = table[a][b];
      for (size_t i = 0; i < r.size(); ++i) r[i] += x.c[a] * y.c[b] * t[i];
    }
  }
  return LieElt{z, reduce(z, std::move(r))};
}

bool GradedLieRing::equal(const LieElt& x, const LieElt& y) const {
  if (is_zero(x)) return is_zero(y);
  if (is_zero(y)) return false;
  return x.weight == y.weight && reduce(x.weight, x.c) == reduce(y.weight, y.c);
}

LieElt GradedLieRing::class_of(int v, const Elt& x) const {
  return LieElt{v, to_diag(v, x)};
}

Elt GradedLieRing::lift(const LieElt& x) const {
  if (x.weight == 0) return g_->identity();
  const Component& comp = comps_[x.weight - 1];
  int t = (int)comp.V.size();
  Zvec full(t, 0);
  for (size_t a = 0; a < comp.kept.size(); ++a) full[comp.kept[a]] = x.c[a];
  Zvec igs_coords(t, 0);
  for (int j = 0; j < t; ++j)
    for (int s = 0; s < t; ++s) igs_coords[j] += full[s] * comp.Vinv[s][j];
  return comp.F.from_coordinates(igs_coords);
}

const Zvec& GradedLieRing::structure_constant(int v, int a, int w, int b) const {
  return brackets_.at(v - 1).at(w - 1).at(a).at(b);
}

void GradedLieRing::set_structure_constant(int v, int a, int w, int b, Zvec val) {
  brackets_.at(v - 1).at(w - 1).at(a).at(b) = std::move(val);
}

AxiomResult GradedLieRing::check_axioms(unsigned seed, long long well_defined_cap) const {
  auto tag = [&](int v, int a) {
    return "(" + std::to_string(v) + "," + std::to_string(a) + ")";
  };
  std::vector<std::pair<int, int>> gens;
  for (int v = 1; v <= nweights(); ++v)
    for (int a = 0; a < comps_[v - 1].rank(); ++a) gens.emplace_back(v, a);

  for (auto [v, a] : gens) {
    if (!is_zero(bracket(gen(v, a), gen(v, a))))
      return {false, "alternating fails at " + tag(v, a)};
    for (auto [w, b] : gens) {
      LieElt xy = bracket(gen(v, a), gen(w, b));
      if (!equal(xy, neg(bracket(gen(w, b), gen(v, a)))))
        return {false, "antisymmetry fails at " + tag(v, a) + "," + tag(w, b)};
      if (!is_zero(smul(comps_[v - 1].orders[a], xy)))
        return {false, "torsion bilinearity fails at " + tag(v, a) + "," + tag(w, b)};
    }
  }
  for (auto [v, a] : gens)
    for (auto [w, b] : gens)
      for (auto [z, c] : gens) {
        LieElt jac = add(add(bracket(bracket(gen(v, a), gen(w, b)), gen(z, c)),
                             bracket(bracket(gen(w, b), gen(z, c)), gen(v, a))),
                         bracket(bracket(gen(z, c), gen(v, a)), gen(w, b)));
        if (!is_zero(jac))
          return {false, "Jacobi fails at " + tag(v, a) + "," + tag(w, b) + "," +
                             tag(z, c)};
      }

  if (g_->order() <= well_defined_cap) {
    std::mt19937_64 rng(seed);
    auto random_of = [&](const Subgroup& h) {
      Zvec c(h.igs().size());
      for (size_t i = 0; i < c.size(); ++i)
        c[i] = (long long)(rng() % (unsigned long long)g_->order());
      return h.from_coordinates(c);
    };
    for (auto [v, a] : gens)
      for (auto [w, b] : gens) {
        if (v + w > nweights()) continue;
        for (int trial = 0; trial < 3; ++trial) {
          Elt x = g_->mul(lift(gen(v, a)), random_of(comps_[v - 1].Fnext));
          Elt y = g_->mul(lift(gen(w, b)), random_of(comps_[w - 1].Fnext));
          Zvec got = to_diag(v + w, g_->commutator(x, y));
          if (got != reduce(v + w, structure_constant(v, a, w, b)))
            return {false, "bracket not well-defined at " + tag(v, a) + "," +
                               tag(w, b)};
        }
      }
  }
  return {true, ""};
}

GradedSub GradedLieRing::zero_sub() const {
  GradedSub s;
  for (const auto& c : comps_) s.per_weight.emplace_back(c.orders);
  return s;
}

GradedSub GradedLieRing::full_sub() const {
  GradedSub s = zero_sub();
  for (int v = 1; v <= nweights(); ++v)
    for (int a = 0; a < comps_[v - 1].rank(); ++a) {
      Zvec e(comps_[v - 1].rank(), 0);
      e[a] = 1;
      s.per_weight[v - 1].add_generator(e);
    }
  return s;
}

GradedSub GradedLieRing::span(const std::vector<LieElt>& xs) const {
  GradedSub s = zero_sub();
  for (const LieElt& x : xs)
    if (!is_zero(x)) s.per_weight[x.weight - 1].add_generator(reduce(x.weight, x.c));
  return s;
}

bool GradedLieRing::sub_contains(const GradedSub& s, const LieElt& x) const {
  if (is_zero(x)) return true;
  return s.per_weight[x.weight - 1].contains(reduce(x.weight, x.c));
}

std::vector<LieElt> GradedLieRing::sub_gens(const GradedSub& s) const {
  std::vector<LieElt> out;
  for (int v = 1; v <= nweights(); ++v)
    for (const Zvec& g : s.per_weight[v - 1].generators())
      out.push_back(LieElt{v, g});
  return out;
}

GradedSub GradedLieRing::bracket_span(const GradedSub& a,
                                      const std::vector<LieElt>& gens) const {
  std::vector<LieElt> out;
  for (const LieElt& x : sub_gens(a))
    for (const LieElt& g : gens) out.push_back(bracket(x, g));
  return span(out);
}

bool GradedLieRing::sub_equal(const GradedSub& a, const GradedSub& b) const {
  return a.per_weight == b.per_weight;
}

std::vector<GradedSub> GradedLieRing::lie_lower_central_series() const {
  std::vector<GradedSub> terms;
  std::vector<LieElt> ring_gens = sub_gens(full_sub());
  GradedSub m = full_sub();
  terms.push_back(m);
  while (!m.is_zero()) {
    m = bracket_span(m, ring_gens);
    terms.push_back(m);
    if ((int)terms.size() > nweights() + 2)
      throw input_error("lie lower central series failed to terminate");
  }
  return terms;
}

int GradedLieRing::lie_nilpotency_class() const {
  auto terms = lie_lower_central_series();
  int c = 0;
  for (const auto& t : terms)
    if (!t.is_zero()) ++c;
  return c;
}

GradedSub GradedLieRing::subring_generated(const std::vector<LieElt>& s) const {
  GradedSub a = span(s);
  for (;;) {
    std::vector<LieElt> gens = sub_gens(a);
    std::vector<LieElt> all = gens;
    for (const LieElt& x : gens)
      for (const LieElt& y : gens) all.push_back(bracket(x, y));
    GradedSub next = span(all);
    if (sub_equal(next, a)) return a;
    a = std::move(next);
  }
}

int GradedLieRing::ad_nilpotency_index(const LieElt& a) const {
  int best = 1;
  for (int v = 1; v <= nweights(); ++v)
    for (int i = 0; i < comps_[v - 1].rank(); ++i) {
      LieElt y = gen(v, i);
      int n = 0;
      while (!is_zero(y)) {
        y = bracket(y, a);
        ++n;
        if (n > nweights() + 1)
          throw input_error("ad-nilpotency iteration failed to terminate");
      }
      best = std::max(best, n);
    }
  return best;
}

int GradedLieRing::minimal_epsilon(const std::vector<LieElt>& m_gens) const {
  GradedSub b = full_sub();
  for (int eps = 1;; ++eps) {
    b = bracket_span(b, m_gens);
    if (b.is_zero()) return eps;
    if (eps > nweights() + 1)
      throw input_error("minimal_epsilon iteration failed to terminate");
  }
}

// ---------- induced automorphism / derived checks ----------

LieAut induced_automorphism(const GradedLieRing& l, const Automorphism& phi) {
  const Filtration& f = l.filtration();
  for (size_t i = 0; i < f.terms.size(); ++i)
    if (!phi.invariant(f.terms[i]))
      throw hypothesis_error("filtration term " + std::to_string(i + 1) +
                             " is not invariant under the automorphism");
  LieAut a;
  for (int v = 1; v <= l.nweights(); ++v) {
    Zmat m;
    for (int i = 0; i < l.component(v).rank(); ++i)
      m.push_back(l.class_of(v, phi.apply(l.lift(l.gen(v, i)))).c);
    a.mats.push_back(std::move(m));
  }
  return a;
}

LieElt lie_aut_apply(const GradedLieRing& l, const LieAut& a, const LieElt& x) {
  if (l.is_zero(x)) return l.zero();
  const Zmat& m = a.mats[x.weight - 1];
  Zvec r(l.component(x.weight).rank(), 0);
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (!x.c[i]) continue;
    for (size_t j = 0; j < r.size(); ++j) r[j] += x.c[i] * m[i][j];
  }
  return LieElt{x.weight, r};
}

bool class_equality_check(const PcGroup& g) {
  auto nc = nilpotency_class(g);
  if (!nc) return false;
  GradedLieRing l(g, lcs_filtration(g));
  return l.lie_nilpotency_class() == *nc;
}

LpData lp_from_zassenhaus(const PcGroup& g, long long p) {
  LpData data;
  data.filtration = zassenhaus_filtration(g, p);
  data.ring = std::make_shared<GradedLieRing>(g, data.filtration);
  std::vector<LieElt> gens;
  if (data.ring->nweights() >= 1)
    for (int a = 0; a < data.ring->component(1).rank(); ++a)
      gens.push_back(data.ring->gen(1, a));
  data.lp = data.ring->subring_generated(gens);
  return data;
}

bool dp_lp_coincidence_check(const PcGroup& g, long long p) {
  LpData data = lp_from_zassenhaus(g, p);
  for (int s = 1; s <= data.ring->nweights(); ++s) {
    if (s % p == 0) continue;
    long long full = 1;
    for (auto d : data.ring->component(s).orders) full *= d;
    if (data.lp.per_weight[s - 1].size() != full) return false;
  }
  return true;
}

// ---------- scalar extension ----------

ExtLieRing::ExtLieRing(const GradedLieRing& base, long long q) : base_(&base), q_(q) {
  if (!is_prime(q)) throw hypothesis_error("scalar extension order must be prime");
  for (int v = 1; v <= base.nweights(); ++v)
    for (auto d : base.component(v).orders)
      if (gcd_ll(q, d) != 1)
        throw hypothesis_error(
            "scalar extension order must be coprime to the component orders");
}

std::vector<long long> ExtLieRing::ext_moduli(int v) const {
  std::vector<long long> m;
  for (auto d : base_->component(v).orders)
    for (long long k = 0; k < q_ - 1; ++k) m.push_back(d);
  return m;
}

Zvec ExtLieRing::reduce(int v, Zvec c) const {
  auto m = ext_moduli(v);
  for (size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], m[i]);
  return c;
}

ExtLieRing::ExtElt ExtLieRing::embed(const LieElt& x) const {
  if (base_->is_zero(x)) return zero();
  Zvec c(ext_rank(x.weight), 0);
  for (size_t a = 0; a < x.c.size(); ++a) c[a * (q_ - 1)] = x.c[a];
  return ExtElt{x.weight, reduce(x.weight, std::move(c))};
}

std::optional<LieElt> ExtLieRing::restrict_to_base(const ExtElt& x) const {
  if (is_zero(x)) return base_->zero();
  Zvec c = reduce(x.weight, x.c);
  Zvec out(rank(x.weight), 0);
  for (int a = 0; a < rank(x.weight); ++a) {
    out[a] = c[a * (q_ - 1)];
    for (long long k = 1; k < q_ - 1; ++k)
      if (c[a * (q_ - 1) + k]) return std::nullopt;
  }
  return LieElt{x.weight, std::move(out)};
}

ExtLieRing::ExtElt ExtLieRing::basis(int v, int a, int k) const {
  Zvec c(ext_rank(v), 0);
  c[a * (q_ - 1) + k] = 1;
  return ExtElt{v, std::move(c)};
}

bool ExtLieRing::is_zero(const ExtElt& x) const {
  if (x.weight == 0) return true;
  auto m = ext_moduli(x.weight);
  for (size_t i = 0; i < x.c.size(); ++i)
    if (mod_floor(x.c[i], m[i])) return false;
  return true;
}

ExtLieRing::ExtElt ExtLieRing::add(const ExtElt& x, const ExtElt& y) const {
  if (is_zero(x)) return ExtElt{y.weight, y.weight ? reduce(y.weight, y.c) : Zvec{}};
  if (is_zero(y)) return ExtElt{x.weight, reduce(x.weight, x.c)};
  if (x.weight != y.weight)
    throw input_error("sum of homogeneous elements of different weights");
  Zvec c(x.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = x.c[i] + y.c[i];
  return ExtElt{x.weight, reduce(x.weight, std::move(c))};
}

ExtLieRing::ExtElt ExtLieRing::neg(const ExtElt& x) const { return smul_int(-1, x); }

ExtLieRing::ExtElt ExtLieRing::smul_int(long long k, const ExtElt& x) const {
  if (x.weight == 0) return zero();
  Zvec c(x.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = k * x.c[i];
  return ExtElt{x.weight, reduce(x.weight, std::move(c))};
}

ExtLieRing::ExtElt ExtLieRing::smul(const Zvec& scalar, const ExtElt& x) const {
  if (is_zero(x)) return zero();
  const auto& orders = base_->component(x.weight).orders;
  Zvec c(x.c.size(), 0);
  for (size_t a = 0; a < orders.size(); ++a) {
    Zvec block(x.c.begin() + a * (q_ - 1), x.c.begin() + (a + 1) * (q_ - 1));
    Zvec prod = cyc_mul(q_, scalar, block, orders[a]);
    for (long long k = 0; k < q_ - 1; ++k) c[a * (q_ - 1) + k] = prod[k];
  }
  return ExtElt{x.weight, std::move(c)};
}

ExtLieRing::ExtElt ExtLieRing::bracket(const ExtElt& x, const ExtElt& y) const {
  if (is_zero(x) || is_zero(y)) return zero();
  int z = x.weight + y.weight;
  if (z > base_->nweights()) return zero();
  int tr = rank(z);
  Zvec r(ext_rank(z), 0);
  for (int a = 0; a < rank(x.weight); ++a)
    for (long long k = 0; k < q_ - 1; ++k) {
      long long alpha = x.c[a * (q_ - 1) + k];
      if (!alpha) continue;
      for (int b = 0; b < rank(y.weight); ++b)
        for (long long l = 0; l < q_ - 1; ++l) {
          long long beta = y.c[b * (q_ - 1) + l];
          if (!beta) continue;
          const Zvec& t = base_->structure_constant(x.weight, a, y.weight, b);
          Zvec om = cyc_omega_pow(q_, k + l);
          for (int c = 0; c < tr; ++c) {
            if (!t[c]) continue;
            for (long long s = 0; s < q_ - 1; ++s)
              r[c * (q_ - 1) + s] += alpha * beta * t[c] * om[s];
          }
        }
    }
  return ExtElt{z, reduce(z, std::move(r))};
}

bool ExtLieRing::equal(const ExtElt& x, const ExtElt& y) const {
  if (is_zero(x)) return is_zero(y);
  if (is_zero(y)) return false;
  return x.weight == y.weight && reduce(x.weight, x.c) == reduce(y.weight, y.c);
}

ExtLieRing::ExtElt ExtLieRing::apply(const LieAut& aut, const ExtElt& x) const {
  if (is_zero(x)) return zero();
  const Zmat& m = aut.mats[x.weight - 1];
  Zvec r(ext_rank(x.weight), 0);
  for (int a = 0; a < rank(x.weight); ++a)
    for (long long k = 0; k < q_ - 1; ++k) {
      long long alpha = x.c[a * (q_ - 1) + k];
      if (!alpha) continue;
      for (int c = 0; c < rank(x.weight); ++c) r[c * (q_ - 1) + k] += alpha * m[a][c];
    }
  return ExtElt{x.weight, reduce(x.weight, std::move(r))};
}

int ExtLieRing::ad_nilpotency_index(const ExtElt& a) const {
  int best = 1;
  for (int v = 1; v <= base_->nweights(); ++v)
    for (int i = 0; i < rank(v); ++i)
      for (long long k = 0; k < q_ - 1; ++k) {
        ExtElt y = basis(v, i, (int)k);
        int n = 0;
        while (!is_zero(y)) {
          y = bracket(y, a);
          ++n;
          if (n > base_->nweights() + 1)
            throw input_error("ad-nilpotency iteration failed to terminate");
        }
        best = std::max(best, n);
      }
  return best;
}

int ExtLieRing::lie_nilpotency_class() const {
  int nw = base_->nweights();
  std::vector<ExtElt> ring_gens;
  for (int v = 1; v <= nw; ++v)
    for (int a = 0; a < rank(v); ++a)
      for (long long k = 0; k < q_ - 1; ++k) ring_gens.push_back(basis(v, a, (int)k));

  auto span_of = [&](const std::vector<ExtElt>& xs) {
    std::vector<ModSubgroup> per;
    for (int v = 1; v <= nw; ++v) per.emplace_back(ext_moduli(v));
    for (const ExtElt& x : xs)
      if (!is_zero(x)) per[x.weight - 1].add_generator(reduce(x.weight, x.c));
    return per;
  };
  auto gens_of = [&](const std::vector<ModSubgroup>& per) {
    std::vector<ExtElt> out;
    for (int v = 1; v <= nw; ++v)
      for (const Zvec& g : per[v - 1].generators()) out.push_back(ExtElt{v, g});
    return out;
  };
  auto zero = [&](const std::vector<ModSubgroup>& per) {
    for (const auto& m : per)
      if (m.size() != 1) return false;
    return true;
  };

  std::vector<ModSubgroup> m = span_of(ring_gens);
  int c = 0;
  while (!zero(m)) {
    ++c;
    std::vector<ExtElt> next;
    for (const ExtElt& x : gens_of(m))
      for (const ExtElt& g : ring_gens) next.push_back(bracket(x, g));
    m = span_of(next);
    if (c > nw + 1) throw input_error("extended lcs failed to terminate");
  }
  return c;
}

// ---------- eigenspace decomposition ----------

EigenDecomposition::EigenDecomposition(const ExtLieRing& ext, const LieAut& phi,
                                       long long q)
    : ext_(&ext), phi_(&phi), q_(q) {
  if (q != ext.q())
    throw input_error("decomposition order does not match the scalar extension");
  const GradedLieRing& base = ext.base();
  int nw = base.nweights();
  for (int v = 1; v <= nw; ++v) {
    // order of the induced map must divide q on every component
    for (int a = 0; a < ext.rank(v); ++a)
      for (long long k = 0; k < q - 1; ++k) {
        ExtLieRing::ExtElt u = ext.basis(v, a, (int)k);
        ExtLieRing::ExtElt w = u;
        for (long long s = 0; s < q; ++s) w = ext.apply(phi, w);
        if (!ext.equal(w, u))
          throw hypothesis_error("automorphism order does not divide " +
                                 std::to_string(q) + " on weight " +
                                 std::to_string(v));
      }
  }

  proj_.assign(nw, {});
  for (int v = 1; v <= nw; ++v) {
    const auto& orders = base.component(v).orders;
    int dim = ext.ext_rank(v);
    proj_[v - 1].assign(q, std::vector<Zvec>(dim));
    for (int a = 0; a < ext.rank(v); ++a)
      for (long long k = 0; k < q - 1; ++k) {
        int idx = a * (int)(q - 1) + (int)k;
        // iterates phi^s(e_{a,k})
        std::vector<ExtLieRing::ExtElt> iter;
        iter.push_back(ext.basis(v, a, (int)k));
        for (long long s = 1; s < q; ++s) iter.push_back(ext.apply(phi, iter.back()));
        for (long long j = 0; j < q; ++j) {
          ExtLieRing::ExtElt acc = ext.zero();
          for (long long s = 0; s < q; ++s)
            acc = ext.add(acc, ext.smul(cyc_omega_pow(q, -j * s), iter[s]));
          // blockwise multiplication by q^{-1}
          Zvec c = acc.weight ? acc.c : Zvec(dim, 0);
          for (size_t b = 0; b < orders.size(); ++b) {
            long long inv = mod_inverse(q, orders[b]);
            for (long long t = 0; t < q - 1; ++t) {
              auto& x = c[b * (q - 1) + t];
              x = mod_floor(x * inv, orders[b]);
            }
          }
          proj_[v - 1][j][idx] = std::move(c);
        }
      }
  }
  rebuild_eigen();
}

void EigenDecomposition::rebuild_eigen() {
  const GradedLieRing& base = ext_->base();
  eigen_.assign(base.nweights(), {});
  for (int v = 1; v <= base.nweights(); ++v) {
    eigen_[v - 1].assign(q_, ModSubgroup(ext_->ext_moduli(v)));
    for (long long j = 0; j < q_; ++j)
      for (const Zvec& img : proj_[v - 1][j]) eigen_[v - 1][j].add_generator(img);
  }
}

ExtLieRing::ExtElt EigenDecomposition::project(long long j,
                                               const ExtLieRing::ExtElt& x) const {
  if (ext_->is_zero(x)) return ext_->zero();
  int v = x.weight;
  Zvec r(ext_->ext_rank(v), 0);
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (!x.c[i]) continue;
    const Zvec& img = proj_[v - 1][j][i];
    for (size_t t = 0; t < r.size(); ++t) r[t] += x.c[i] * img[t];
  }
  ExtLieRing::ExtElt out{v, std::move(r)};
  return ext_->add(out, ext_->zero());  // reduce
}

const ModSubgroup& EigenDecomposition::eigencomponent(int v, long long j) const {
  return eigen_[v - 1][j];
}

std::vector<ExtLieRing::ExtElt> EigenDecomposition::eigen_gens(int v,
                                                               long long j) const {
  std::vector<ExtLieRing::ExtElt> out;
  for (const Zvec& g : eigen_[v - 1][j].generators())
    out.push_back(ExtLieRing::ExtElt{v, g});
  return out;
}

bool EigenDecomposition::member(long long j, const ExtLieRing::ExtElt& x) const {
  if (ext_->is_zero(x)) return true;
  Zvec c = x.c;
  auto m = ext_->ext_moduli(x.weight);
  for (size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], m[i]);
  return eigen_[x.weight - 1][j].contains(c);
}

AxiomResult EigenDecomposition::projection_checks() const {
  const ExtLieRing& ext = *ext_;
  const GradedLieRing& base = ext.base();
  for (int v = 1; v <= base.nweights(); ++v)
    for (int a = 0; a < ext.rank(v); ++a)
      for (long long k = 0; k < q_ - 1; ++k) {
        ExtLieRing::ExtElt u = ext.basis(v, a, (int)k);
        ExtLieRing::ExtElt sum = ext.zero();
        for (long long j = 0; j < q_; ++j) {
          ExtLieRing::ExtElt pj = project(j, u);
          sum = ext.add(sum, pj);
          if (!ext.equal(project(j, pj), pj))
            return {false, "projection " + std::to_string(j) +
                               " is not idempotent at weight " + std::to_string(v)};
          for (long long l = 0; l < q_; ++l)
            if (l != j && !ext.is_zero(project(l, pj)))
              return {false, "projections " + std::to_string(j) + "," +
                                 std::to_string(l) + " are not orthogonal"};
          if (!ext.equal(ext.apply(*phi_, pj),
                         ext.smul(cyc_omega_pow(q_, j), pj)))
            return {false, "phi does not act as w^" + std::to_string(j) +
                               " on eigencomponent " + std::to_string(j)};
        }
        if (!ext.equal(sum, u))
          return {false, "projections do not sum to the identity at weight " +
                             std::to_string(v)};
      }
  return {true, ""};
}

void EigenDecomposition::corrupt_projection(int v, long long j, int basis_index,
                                            Zvec image) {
  proj_[v - 1][j][basis_index] = std::move(image);
  rebuild_eigen();
}

AxiomResult grading_check(const EigenDecomposition& dec) {
  const ExtLieRing& ext = dec.ext();
  const GradedLieRing& base = ext.base();
  long long q = dec.q();
  int nw = base.nweights();

  for (int v = 1; v <= nw; ++v)
    for (int w = v; w <= nw; ++w) {
      if (v + w > nw) continue;  // brackets land in 0
      for (long long i = 0; i < q; ++i)
        for (long long j = 0; j < q; ++j)
          for (const auto& x : dec.eigen_gens(v, i))
            for (const auto& y : dec.eigen_gens(w, j)) {
              ExtLieRing::ExtElt b = ext.bracket(x, y);
              if (!dec.member((i + j) % q, b))
                return {false, "[L_" + std::to_string(i) + ", L_" +
                                   std::to_string(j) +
                                   "] escapes L_" + std::to_string((i + j) % q) +
                                   " at weights (" + std::to_string(v) + "," +
                                   std::to_string(w) + ")"};
            }
    }

  // L_0 must equal the scalar extension of the fixed-point subring.
  for (int v = 1; v <= nw; ++v) {
    const auto& orders = base.component(v).orders;
    int r = (int)orders.size();
    if (r == 0) continue;
    Zmat a_minus_i = dec.phi().mats[v - 1];
    for (int i = 0; i < r; ++i) a_minus_i[i][i] -= 1;
    ModSubgroup c0(ext.ext_moduli(v));
    for (const Zvec& c : kernel_mod(a_minus_i, orders))
      for (long long k = 0; k < q - 1; ++k) {
        Zvec e(ext.ext_rank(v), 0);
        for (int b = 0; b < r; ++b) e[b * (q - 1) + k] = c[b];
        c0.add_generator(e);
      }
    if (!(c0 == dec.eigencomponent(v, 0)))
      return {false, "L_0 differs from the extended fixed-point subring at weight " +
                         std::to_string(v)};
  }
  return {true, ""};
}

}  // namespace pcengel
