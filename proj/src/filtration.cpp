#include "pcengel/filtration.hpp"

namespace pcengel {

Subgroup Filtration::term(size_t i) const {
  if (i == 0) throw input_error("filtration terms are 1-based");
  if (i <= terms.size()) return terms[i - 1];
  // Past the end: trivial when terminating, the stabilized tail otherwise.
  return terminates ? Subgroup::trivial(*g) : terms.back();
}

Filtration lcs_filtration(const PcGroup& g) {
  LowerCentralSeries lcs = lower_central_series(g);
  Filtration f;
  f.g = &g;
  f.terms = std::move(lcs.terms);
  f.kind = "lcs";
  f.terminates = lcs.terminates;
  if (f.terminates && !f.terms.back().is_trivial())
    f.terms.push_back(Subgroup::trivial(g));
  return f;
}

Filtration zassenhaus_filtration(const PcGroup& g, long long p) {
  long long o = g.order();
  while (o % p == 0) o /= p;
  if (o != 1)
    throw hypothesis_error("zassenhaus filtration requires a finite " +
                           std::to_string(p) + "-group");

  LowerCentralSeries lcs = lower_central_series(g);
  // P[j][k] = <x^{p^k} : x in gamma_j>; the chain of k per j stops at the
  // first trivial term since p-th powers only lose order.
  std::vector<std::vector<Subgroup>> pows;
  for (const Subgroup& gam : lcs.terms) {
    std::vector<Subgroup> row;
    long long pk = 1;
    for (;;) {
      std::vector<Elt> gens;
      for (const Elt& x : gam.elements()) gens.push_back(g.power(x, pk));
      Subgroup s = Subgroup::closure(g, gens);
      bool triv = s.is_trivial();
      row.push_back(std::move(s));
      if (triv) break;
      pk *= p;
    }
    pows.push_back(std::move(row));
  }

  Filtration f;
  f.g = &g;
  f.kind = "zassenhaus(" + std::to_string(p) + ")";
  for (size_t i = 1;; ++i) {
    std::vector<Elt> gens;
    for (size_t j = 1; j <= pows.size(); ++j) {
      long long pk = 1;
      for (size_t k = 0; k < pows[j - 1].size(); ++k, pk *= p)
        if ((long long)j * pk >= (long long)i)
          for (const Elt& x : pows[j - 1][k].igs()) gens.push_back(x);
    }
    Subgroup gi = Subgroup::closure(g, gens);
    bool triv = gi.is_trivial();
    f.terms.push_back(std::move(gi));
    if (triv) break;
  }
  return f;
}

StronglyCentralResult validate_strongly_central(const Filtration& f) {
  const PcGroup& g = *f.g;
  size_t m = f.terms.size();
  for (size_t i = 1; i <= m; ++i) {
    if (f.term(i).is_trivial()) continue;
    if (!f.term(i).is_normal())
      return {false, i, i, "term " + std::to_string(i) + " is not normal"};
    for (size_t j = i; j <= m; ++j) {
      if (f.term(j).is_trivial()) continue;
      Subgroup ti = f.term(i), tj = f.term(j);
      Subgroup target = f.term(i + j);
      Subgroup comm = commutator_subgroup(ti, tj);
      if (target.contains(comm)) continue;
      // Prefer a genuine commutator witness over an igs element.
      for (const Elt& a : ti.igs())
        for (const Elt& b : tj.igs()) {
          Elt c = g.commutator(a, b);
          if (!target.contains(c))
            return {false, i, j,
                    "[" + g.to_string(a) + ", " + g.to_string(b) + "] = " +
                        g.to_string(c)};
        }
      return {false, i, j, g.to_string(comm.igs().front())};
    }
  }
  return {true, 0, 0, ""};
}

Filtration intersect_with(const Filtration& f, const Subgroup& c) {
  Filtration out;
  out.g = f.g;
  out.kind = "intersected";
  out.terminates = f.terminates;
  for (const Subgroup& t : f.terms) out.terms.push_back(intersect(t, c));
  return out;
}

bool factors_have_exponent(const Filtration& f, long long p) {
  for (size_t i = 1; i <= f.terms.size(); ++i) {
    Subgroup cur = f.term(i), next = f.term(i + 1);
    for (const Elt& x : cur.igs())
      if (!next.contains(f.g->power(x, p))) return false;
  }
  return true;
}

}  // namespace pcengel
