#include "pcengel/engel.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pcengel {

Elt engel_word(const PcGroup& g, const Elt& y, const Elt& x, int n) {
  Elt r = y;
  for (int i = 0; i < n; ++i) r = g.commutator(r, x);
  return r;
}

namespace {

// first hitting time of the identity along y -> [y, x], or nullopt if the
// iteration cycles without reaching it
std::optional<int> hitting_time(const PcGroup& g, Elt y, const Elt& x) {
  std::set<std::vector<int>> seen;
  int n = 0;
  for (;;) {
    if (y.is_identity()) return n;
    if (!seen.insert(y.e).second) return std::nullopt;
    y = g.commutator(y, x);
    ++n;
  }
}

}  // namespace

EngelProfile engel_profile(const PcGroup& g, const Elt& e, long long cap) {
  if (g.order() > cap) throw capacity_error("engel_profile: group exceeds cap");
  EngelProfile p;
  p.element = e;
  p.right_engel = true;
  p.left_engel = true;
  g.for_each_element([&](const Elt& x) {
    if (p.right_engel) {
      auto n = hitting_time(g, e, x);
      if (n)
        p.right_degree = std::max(p.right_degree, *n);
      else {
        p.right_engel = false;
        p.right_degree = 0;
        p.right_witness = x;
      }
    }
    if (p.left_engel) {
      auto n = hitting_time(g, x, e);
      if (n)
        p.left_degree = std::max(p.left_degree, *n);
      else {
        p.left_engel = false;
        p.left_degree = 0;
        p.left_witness = x;
      }
    }
  });
  return p;
}

EngelSet right_engel_set(const PcGroup& g, unsigned seed, long long exhaustive_cap) {
  EngelSet out;
  if (g.order() <= exhaustive_cap) {
    out.whole = true;
    g.for_each_element([&](const Elt& e) {
      bool right = true;
      int deg = 0;
      g.for_each_element([&](const Elt& x) {
        if (!right) return;
        auto n = hitting_time(g, e, x);
        if (n)
          deg = std::max(deg, *n);
        else
          right = false;
      });
      if (right) {
        out.members.push_back(e);
        out.max_degree = std::max(out.max_degree, deg);
      } else {
        out.whole = false;
      }
    });
    return out;
  }
  auto c = nilpotency_class(g);
  if (!c)
    throw capacity_error("right_engel_set: non-nilpotent group exceeds the cap");
  // class c forces [y,_c x] = 1 for every pair; verify on sampled pairs
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> d(0, g.order() - 1);
  for (int t = 0; t < 1000; ++t) {
    Elt y = g.element_at(d(rng)), x = g.element_at(d(rng));
    if (!engel_word(g, y, x, *c).is_identity())
      throw input_error("nilpotency class bound violated; inconsistent state");
  }
  out.whole = true;
  out.exhaustive = false;
  out.max_degree = *c;
  return out;
}

bool heineken_check(const PcGroup& g, int n, unsigned seed, long long exhaustive_cap) {
  if (g.order() <= exhaustive_cap) {
    bool ok = true;
    g.for_each_element([&](const Elt& h) {
      if (!ok) return;
      Elt hi = g.inverse(h);
      bool right_n = true;
      g.for_each_element([&](const Elt& x) {
        if (right_n && !engel_word(g, hi, x, n).is_identity()) right_n = false;
      });
      if (!right_n) return;
      g.for_each_element([&](const Elt& x) {
        if (ok && !engel_word(g, x, h, n + 1).is_identity()) ok = false;
      });
    });
    return ok;
  }
  auto c = nilpotency_class(g);
  if (!c || *c > n + 1)
    throw capacity_error("heineken_check: group exceeds the exhaustive cap");
  // class <= n+1 makes every element left (n+1)-Engel; sampled verification
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> d(0, g.order() - 1);
  for (int t = 0; t < 1000; ++t) {
    Elt x = g.element_at(d(rng)), h = g.element_at(d(rng));
    if (!engel_word(g, x, h, n + 1).is_identity()) return false;
  }
  return true;
}

LieElt lie_engel_word(const GradedLieRing& l, const LieElt& y, const LieElt& x,
                      int n) {
  LieElt r = y;
  for (int i = 0; i < n; ++i) r = l.bracket(r, x);
  return r;
}

ExtLieRing::ExtElt ext_engel_word(const ExtLieRing& l, const ExtLieRing::ExtElt& y,
                                  const ExtLieRing::ExtElt& x, int n) {
  ExtLieRing::ExtElt r = y;
  for (int i = 0; i < n; ++i) r = l.bracket(r, x);
  return r;
}

bool leibniz_check(const GradedLieRing& l, const LieElt& u, const LieElt& v,
                   const LieElt& w, int n) {
  LieElt lhs = lie_engel_word(l, l.bracket(u, v), w, n);
  LieElt rhs = l.zero();
  long long binom = 1;
  for (int i = 0; i <= n; ++i) {
    LieElt term = l.bracket(lie_engel_word(l, u, w, i), lie_engel_word(l, v, w, n - i));
    rhs = l.add(rhs, l.smul(binom, term));
    binom = binom * (n - i) / (i + 1);
  }
  return l.equal(lhs, rhs);
}

bool char_p_identity_check(const GradedLieRing& l, const LieElt& u, const LieElt& v,
                           const LieElt& w, int s) {
  long long p = 0;
  for (int vv = 1; vv <= l.nweights(); ++vv)
    for (auto d : l.component(vv).orders) {
      if (p == 0) p = d;
      if (d != p)
        throw hypothesis_error("char_p identity needs elementary abelian components");
    }
  if (p == 0 || !is_prime(p))
    throw hypothesis_error("char_p identity needs characteristic-p scalars");
  long long ps = 1;
  for (int i = 0; i < s; ++i) ps *= p;
  LieElt lhs = lie_engel_word(l, l.bracket(u, v), w, (int)ps);
  LieElt rhs = l.add(l.bracket(lie_engel_word(l, u, w, (int)ps), v),
                     l.bracket(u, lie_engel_word(l, v, w, (int)ps)));
  return l.equal(lhs, rhs);
}

AdnReport commutator_ad_nilpotency_check(const PcGroup& g,
                                         const std::vector<Elt>& gens, long long p) {
  AdnReport rep;
  int maxdeg = 0;
  for (const Elt& h : gens) {
    bool right = true;
    int deg = 0;
    g.for_each_element([&](const Elt& x) {
      if (!right) return;
      auto n = hitting_time(g, h, x);
      if (n)
        deg = std::max(deg, *n);
      else
        right = false;
    });
    if (!right) {
      rep.reason = "generator " + g.to_string(h) + " is not right Engel";
      return rep;
    }
    rep.degrees.push_back(deg);
    maxdeg = std::max(maxdeg, deg);
  }
  rep.hypotheses_met = true;
  rep.ps = 1;
  while (rep.ps < maxdeg) rep.ps *= p;

  LpData data = lp_from_zassenhaus(g, p);
  const GradedLieRing& l = *data.ring;
  std::vector<LieElt> images;
  for (const Elt& h : gens) images.push_back(l.class_of(1, h));

  // all nonzero left-normed brackets of the generator images
  std::set<std::pair<int, Zvec>> seen;
  std::vector<LieElt> frontier;
  auto note = [&](const LieElt& x) {
    if (l.is_zero(x)) return;
    if (seen.insert({x.weight, x.c}).second) frontier.push_back(x);
  };
  for (const LieElt& x : images) note(l.add(x, l.zero()));
  rep.max_index = 0;
  while (!frontier.empty()) {
    LieElt x = frontier.back();
    frontier.pop_back();
    rep.max_index = std::max(rep.max_index, l.ad_nilpotency_index(x));
    for (const LieElt& y : images) note(l.bracket(x, y));
  }
  rep.ok = rep.max_index <= rep.ps;
  return rep;
}

ExtLieRing::ExtElt linearization_sum(const ExtLieRing& ext,
                                     const ExtLieRing::ExtElt& x0,
                                     const std::vector<ExtLieRing::ExtElt>& a) {
  if (a.size() > 8) throw capacity_error("linearization budget is n <= 8");
  std::vector<int> idx(a.size());
  for (size_t i = 0; i < a.size(); ++i) idx[i] = (int)i;
  ExtLieRing::ExtElt sum = ext.zero();
  do {
    ExtLieRing::ExtElt term = x0;
    for (int i : idx) term = ext.bracket(term, a[i]);
    sum = ext.add(sum, term);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return sum;
}

std::vector<Zvec> enumerate_mod_subgroup(const ModSubgroup& m, long long cap) {
  std::vector<Zvec> gens = m.generators();
  const Zvec& mod = m.moduli();
  auto add_order = [&](const Zvec& row) {
    long long o = 1;
    for (size_t j = 0; j < row.size(); ++j) {
      long long d = mod[j] / gcd_ll(row[j], mod[j]);
      o = o / gcd_ll(o, d) * d;
    }
    return o;
  };
  std::vector<long long> radix;
  long long combos = 1;
  for (const Zvec& r : gens) {
    radix.push_back(add_order(r));
    combos *= radix.back();
    if (combos > cap) throw capacity_error("eigencomponent enumeration exceeds cap");
  }
  std::set<Zvec> out;
  std::vector<long long> c(gens.size(), 0);
  for (;;) {
    Zvec v(mod.size(), 0);
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j)
        v[j] = mod_floor(v[j] + c[i] * gens[i][j], mod[j]);
    out.insert(std::move(v));
    int i = (int)c.size() - 1;
    while (i >= 0 && ++c[i] == radix[i]) c[i--] = 0;
    if (i < 0) break;
  }
  return {out.begin(), out.end()};
}

namespace {

// all homogeneous elements of the extended ring at a given weight
std::vector<ExtLieRing::ExtElt> all_homogeneous(const ExtLieRing& ext, int v,
                                                long long cap) {
  auto mod = ext.ext_moduli(v);
  long long count = 1;
  for (auto d : mod) {
    count *= d;
    if (count > cap) throw capacity_error("homogeneous enumeration exceeds cap");
  }
  std::vector<ExtLieRing::ExtElt> out;
  Zvec c(mod.size(), 0);
  for (;;) {
    out.push_back(ExtLieRing::ExtElt{v, c});
    int i = (int)c.size() - 1;
    while (i >= 0 && ++c[i] == mod[i]) c[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace

VerdictReport adn0_check(const ExtLieRing& ext, const EigenDecomposition& dec, int n,
                         long long p, long long enum_cap) {
  if (p <= n)
    return {Verdict::hypothesis_not_met,
            "p = " + std::to_string(p) + " <= n = " + std::to_string(n)};
  int nw = ext.base().nweights();
  for (int v = 1; v <= nw; ++v)
    for (const auto& x0 : dec.eigen_gens(v, 0))
      for (int w = 1; w <= nw; ++w)
        for (const auto& l : all_homogeneous(ext, w, enum_cap))
          if (!ext.is_zero(ext_engel_word(ext, x0, l, n)))
            return {Verdict::fail, "[x0,_" + std::to_string(n) +
                                       " l] != 0 at weights (" + std::to_string(v) +
                                       "," + std::to_string(w) + ")"};
  return {Verdict::pass, ""};
}

AdnkReport adnk_index_check(const ExtLieRing& ext, const EigenDecomposition& dec,
                            long long q, int n, long long enum_cap) {
  AdnkReport rep;
  int nw = ext.base().nweights();
  for (int v = 1; v <= nw; ++v)
    for (long long k = 0; k < q; ++k)
      for (const Zvec& c : enumerate_mod_subgroup(dec.eigencomponent(v, k), enum_cap)) {
        ExtLieRing::ExtElt l{v, c};
        if (ext.is_zero(l)) continue;
        int idx = ext.ad_nilpotency_index(l);
        auto it = rep.observed_by_k.find(k);
        if (it == rep.observed_by_k.end())
          rep.observed_by_k[k] = idx;
        else
          it->second = std::max(it->second, idx);
        if (k != 0) {
          rep.max_nonzero_index = std::max(rep.max_nonzero_index, idx);
          if (idx > (int)q + n - 1) {
            rep.verdict = Verdict::fail;
            rep.detail = "eigenvector of degree " + std::to_string(k) +
                         " at weight " + std::to_string(v) + " has ad-index " +
                         std::to_string(idx) + " > q+n-1";
            return rep;
          }
        }
      }
  return rep;
}

bool initial_segment_check(const ExtLieRing& ext, const EigenDecomposition& dec,
                           long long q, long long enum_cap) {
  int nw = ext.base().nweights();
  for (int v = 1; v <= nw; ++v)
    for (long long k = 1; k < q; ++k) {
      long long kinv = mod_inverse(k, q);
      for (const Zvec& c : enumerate_mod_subgroup(dec.eigencomponent(v, k), enum_cap)) {
        ExtLieRing::ExtElt l{v, c};
        if (ext.is_zero(l)) continue;
        for (int w = 1; w <= nw; ++w)
          for (long long j = 0; j < q; ++j) {
            long long s = mod_floor(-j * kinv, q);
            for (const auto& x : dec.eigen_gens(w, j))
              if (!dec.member(0, ext_engel_word(ext, x, l, (int)s))) return false;
          }
      }
    }
  return true;
}

}  // namespace pcengel
