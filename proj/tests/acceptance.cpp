// Acceptance gate: one line per criterion, exit status = number of failures.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pcengel/certify.hpp"
#include "pcengel/textio.hpp"

using namespace pcengel;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const char* what, bool ok, const std::string& detail = "") {
  std::printf("criterion %2d: %s — %s%s%s\n", num, ok ? "PASS" : "FAIL", what,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool is_p_group(const PcGroup& g, long long p) {
  long long o = g.order();
  while (o % p == 0) o /= p;
  return o == 1;
}

long long prime_of(const PcGroup& g) { return g.rel_order(0); }

// All homogeneous elements of one weight, as diagonal coordinate vectors.
std::vector<LieElt> all_homogeneous(const GradedLieRing& l, int v) {
  const auto& orders = l.component(v).orders;
  std::vector<LieElt> out;
  Zvec c(orders.size(), 0);
  for (;;) {
    out.push_back(LieElt{v, c});
    int i = (int)c.size() - 1;
    while (i >= 0 && ++c[i] == orders[i]) c[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// Bounded right-Engel decision, independent of the cycle-detection path.
bool bounded_right_engel(const PcGroup& g, const Elt& y) {
  bool ok = true;
  g.for_each_element([&](const Elt& x) {
    if (!ok) return;
    Elt w = y;
    long long steps = g.order();
    while (steps-- > 0 && !w.is_identity()) w = g.commutator(w, x);
    if (!w.is_identity()) ok = false;
  });
  return ok;
}

Subgroup brute_gamma_next(const PcGroup& g, const Subgroup& h) {
  std::vector<Elt> comms;
  for (const Elt& x : h.elements())
    for (int j = 0; j < g.ngens(); ++j) comms.push_back(g.commutator(x, g.gen(j)));
  return Subgroup::normal_closure(g, comms);
}

}  // namespace

int main() {
  auto cat = build_catalog();

  {  // 1: consistency + random associativity
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(12345);
    for (const auto& e : cat) {
      ConsistencyResult cr = e.group->consistency_check(2000);
      if (!cr.ok) {
        ok = false;
        detail = e.name + ": " + cr.witness;
        break;
      }
      const PcGroup& g = *e.group;
      std::uniform_int_distribution<long long> d(0, g.order() - 1);
      for (int t = 0; t < 1000; ++t) {
        Elt a = g.element_at(d(rng)), b = g.element_at(d(rng)),
            c = g.element_at(d(rng));
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          ok = false;
          detail = e.name + ": associativity";
          break;
        }
      }
    }
    double secs = seconds_since(t0);
    if (secs >= 30) {
      ok = false;
      detail = "over 30 s";
    }
    report(1, "presentation consistency and associativity", ok, detail);
  }

  {  // 2: strongly central series
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& e : cat) {
      long long p = prime_of(*e.group);
      if (!is_p_group(*e.group, p)) continue;
      if (!validate_strongly_central(lcs_filtration(*e.group)).ok ||
          !validate_strongly_central(zassenhaus_filtration(*e.group, p)).ok) {
        ok = false;
        detail = e.name;
        break;
      }
    }
    if (seconds_since(t0) >= 30) {
      ok = false;
      detail = "over 30 s";
    }
    report(2, "lcs and Zassenhaus filtrations strongly central", ok, detail);
  }

  {  // 3: Lie axioms with well-definedness
    bool ok = true;
    std::string detail;
    for (const auto& e : cat) {
      if (!nilpotency_class(*e.group)) continue;
      GradedLieRing l(*e.group, lcs_filtration(*e.group));
      AxiomResult a = l.check_axioms(1, 2000);
      if (!a.ok) {
        ok = false;
        detail = e.name + " lcs: " + a.witness;
        break;
      }
      long long p = prime_of(*e.group);
      if (is_p_group(*e.group, p)) {
        GradedLieRing z(*e.group, zassenhaus_filtration(*e.group, p));
        AxiomResult az = z.check_axioms(1, 2000);
        if (!az.ok) {
          ok = false;
          detail = e.name + " zassenhaus: " + az.witness;
          break;
        }
      }
    }
    report(3, "Lie ring axioms and bracket well-definedness", ok, detail);
  }

  {  // 4: class equality, with an independent series for the 5^6 entry
    bool ok = true;
    std::string detail;
    for (const auto& e : cat) {
      auto cls = nilpotency_class(*e.group);
      if (!cls) continue;
      if (!class_equality_check(*e.group)) {
        ok = false;
        detail = e.name;
        break;
      }
    }
    for (const char* name : {"heis3", "heis5", "heis7"})
      if (ok && *nilpotency_class(*catalog_entry(cat, name).group) != 2) {
        ok = false;
        detail = name;
      }
    if (ok) {
      const PcGroup& w5 = *catalog_entry(cat, "w5").group;
      Subgroup gamma = Subgroup::whole(w5);
      int cls = 0;
      while (!gamma.is_trivial()) {
        gamma = brute_gamma_next(w5, gamma);
        ++cls;
      }
      GradedLieRing l(w5, lcs_filtration(w5));
      if (cls != *nilpotency_class(w5) || l.lie_nilpotency_class() != cls) {
        ok = false;
        detail = "w5: brute-forced class " + std::to_string(cls);
      }
    }
    report(4, "graded ring class equals group class", ok, detail);
  }

  {  // 5: eigenstructure
    bool ok = true;
    std::string detail;
    for (const auto& e : cat) {
      if (!nilpotency_class(*e.group)) continue;
      GradedLieRing l(*e.group, lcs_filtration(*e.group));
      for (const auto& na : e.automorphisms) {
        long long q = na.phi.order();
        if (!is_prime(q) || !na.phi.coprime()) continue;
        LieAut lphi = induced_automorphism(l, na.phi);
        ExtLieRing ext(l, q);
        EigenDecomposition dec(ext, lphi, q);
        if (!dec.projection_checks().ok || !grading_check(dec).ok) {
          ok = false;
          detail = e.name + "/" + na.name;
        }
        // phi acts as omega^j on L_j
        for (int v = 1; v <= l.nweights() && ok; ++v)
          for (long long j = 0; j < q && ok; ++j)
            for (const auto& x : dec.eigen_gens(v, j))
              if (!ext.equal(ext.apply(lphi, x),
                             ext.smul(cyc_omega_pow(q, j), x))) {
                ok = false;
                detail = e.name + "/" + na.name + " eigenvalue";
              }
        if (!ok) break;
      }
      if (!ok) break;
    }
    report(5, "projections, grading and eigenvalues exact", ok, detail);
  }

  {  // 6: Leibniz (n <= 6) and characteristic-p identities (p^s <= 125)
    bool ok = true;
    std::string detail;
    for (const auto& e : cat) {
      if (!nilpotency_class(*e.group)) continue;
      GradedLieRing l(*e.group, lcs_filtration(*e.group));
      std::vector<LieElt> gens = l.sub_gens(l.full_sub());
      std::vector<LieElt> ws;
      for (int v = 1; v <= l.nweights(); ++v)
        for (const LieElt& w : all_homogeneous(l, v)) ws.push_back(w);
      for (const LieElt& u : gens)
        for (const LieElt& v : gens)
          for (const LieElt& w : ws)
            for (int n = 0; n <= 6 && ok; ++n)
              if (!leibniz_check(l, u, v, w, n)) {
                ok = false;
                detail = e.name + " leibniz";
              }
      long long p = prime_of(*e.group);
      if (ok && is_p_group(*e.group, p)) {
        GradedLieRing z(*e.group, zassenhaus_filtration(*e.group, p));
        std::vector<LieElt> zgens = z.sub_gens(z.full_sub());
        std::vector<LieElt> zws;
        for (int v = 1; v <= z.nweights(); ++v)
          for (const LieElt& w : all_homogeneous(z, v)) zws.push_back(w);
        for (int s = 1; ok; ++s) {
          long long ps = 1;
          for (int i = 0; i < s; ++i) ps *= p;
          if (ps > 125) break;
          for (const LieElt& u : zgens)
            for (const LieElt& v : zgens)
              for (const LieElt& w : zws)
                if (!char_p_identity_check(z, u, v, w, s)) {
                  ok = false;
                  detail = e.name + " char-p";
                  break;
                }
        }
      }
      if (!ok) break;
    }
    report(6, "Leibniz and characteristic-p identities", ok, detail);
  }

  {  // 7: Engel exactness
    bool ok = true;
    std::string detail;
    for (const auto& e : cat) {
      const PcGroup& g = *e.group;
      if (g.order() > 2000) continue;
      g.for_each_element([&](const Elt& y) {
        if (!ok) return;
        if (engel_profile(g, y).right_engel != bounded_right_engel(g, y)) {
          ok = false;
          detail = e.name + ": " + g.to_string(y);
        }
      });
      if (!ok) break;
    }
    for (const char* name : {"s3", "s4"})
      if (ok) {
        EngelSet s = right_engel_set(*catalog_entry(cat, name).group);
        if (s.whole || s.members.size() != 1) {
          ok = false;
          detail = name;
        }
      }
    for (const auto& e : cat)
      if (ok && nilpotency_class(*e.group) && !right_engel_set(*e.group).whole) {
        ok = false;
        detail = e.name;
      }
    report(7, "cycle detection agrees with bounded iteration", ok, detail);
  }

  {  // 8: Baer shadow
    bool ok = true;
    std::string detail;
    for (const auto& r : run_suite("baer", cat))
      if (!r.conclusion_holds) {
        ok = false;
        detail = r.group;
      }
    report(8, "right Engel set inside the hypercentre", ok, detail);
  }

  {  // 9: Heineken shadow
    bool ok = true;
    std::string detail;
    for (const auto& e : cat) {
      int maxn = std::max(1, right_engel_set(*e.group).max_degree);
      // below the exhaustive cap every n is checked; above it only the
      // entry's measured degree is feasible
      int lo = e.group->order() <= 2000 ? 1 : maxn;
      for (int n = lo; n <= maxn; ++n)
        if (!heineken_check(*e.group, n)) {
          ok = false;
          detail = e.name + " n=" + std::to_string(n);
        }
      if (!ok) break;
    }
    report(9, "right n-Engel inverses are left (n+1)-Engel", ok, detail);
  }

  {  // 10: Higman bounds re-derived
    auto t0 = Clock::now();
    bool ok = verify_higman_bounds(cat, literature_constants(), 200);
    std::string detail;
    if (seconds_since(t0) >= 120) {
      ok = false;
      detail = "over 2 min";
    }
    report(10, "h(2) = 1 and h(3) = 2 re-derived, h(3) tight", ok, detail);
  }

  {  // 11: main theorem shadow with near-miss flagging
    bool ok = true;
    std::string detail;
    bool near_miss_flagged = false;
    for (const auto& r : run_suite("main", cat)) {
      if (r.hypotheses_met && !r.conclusion_holds) {
        ok = false;
        detail = r.group + "/" + r.automorphism;
      }
      if (r.group == "f21" && !r.hypotheses_met && !r.witnesses.empty())
        near_miss_flagged = true;
    }
    if (!near_miss_flagged) {
      ok = false;
      detail = "f21 not flagged";
    }
    report(11, "Engel fixed points force nilpotency", ok, detail);
  }

  {  // 12: eigencomponent ad-nilpotency and linearization
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& e : cat) {
      const PcGroup& g = *e.group;
      for (const auto& na : e.automorphisms) {
        if (na.phi.is_identity()) continue;
        CertificationReport r = main_theorem_check(g, na.phi);
        if (!r.hypotheses_met) continue;
        long long q = r.observed.at("q");
        int n = std::max<long long>(1, r.observed.at("n"));
        long long p = prime_of(g);
        if (!is_p_group(g, p) || p <= n) continue;
        GradedLieRing l(g, lcs_filtration(g));
        LieAut lphi = induced_automorphism(l, na.phi);
        ExtLieRing ext(l, q);
        EigenDecomposition dec(ext, lphi, q);
        if (adn0_check(ext, dec, n, p, 300000).verdict != Verdict::pass) {
          ok = false;
          detail = e.name + "/" + na.name + " adn0";
          break;
        }
        AdnkReport ak = adnk_index_check(ext, dec, q, n, 300000);
        if (ak.verdict != Verdict::pass ||
            ak.max_nonzero_index > (int)q + n - 1) {
          ok = false;
          detail = e.name + "/" + na.name + " adnk";
          break;
        }
        // linearization samples: arguments homogeneous of one weight
        if (n <= 4) {
          std::mt19937_64 rng(1);
          for (int t = 0; t < 100; ++t) {
            int v = 1 + (int)(rng() % l.nweights());
            auto x0s = dec.eigen_gens(v, 0);
            ExtLieRing::ExtElt x0 =
                x0s.empty() ? ext.zero() : x0s[rng() % x0s.size()];
            int w = 1 + (int)(rng() % l.nweights());
            if (ext.rank(w) == 0) continue;
            std::vector<ExtLieRing::ExtElt> args;
            for (int i = 0; i < n; ++i)
              args.push_back(ext.basis(w, (int)(rng() % ext.rank(w)),
                                       (int)(rng() % (q - 1))));
            if (!ext.is_zero(linearization_sum(ext, x0, args))) {
              ok = false;
              detail = e.name + "/" + na.name + " linearization";
              break;
            }
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (seconds_since(t0) >= 300) {
      ok = false;
      detail = "over 5 min";
    }
    report(12, "zero-eigenspace Engel words and eigenvector ad-indices", ok,
           detail);
  }

  {  // 13: byte-identical batch reports modulo the timestamp header
    bool ok = true;
    std::string detail;
#ifdef PCENGEL_CLI
    std::string dir = "acceptance_tmp";
    std::system(("mkdir -p " + dir).c_str());
    std::string cfg = dir + "/cfg.json";
    {
      std::ofstream out(cfg);
      out << "{ \"suites\": [\"baer\", \"main\", \"higman\"], \"seed\": 7 }\n";
    }
    auto run = [&](const std::string& out_file) {
      std::string cmd = std::string(PCENGEL_CLI) + " batch --config " + cfg +
                        " --out " + out_file;
      return std::system(cmd.c_str());
    };
    auto strip_timestamp = [](const std::string& path) {
      std::ifstream in(path);
      std::ostringstream body;
      std::string line;
      while (std::getline(in, line))
        if (line.find("\"generated_at\"") == std::string::npos)
          body << line << "\n";
      return body.str();
    };
    if (run(dir + "/a.json") != 0 || run(dir + "/b.json") != 0) {
      ok = false;
      detail = "batch run failed";
    } else {
      std::string a = strip_timestamp(dir + "/a.json");
      std::string b = strip_timestamp(dir + "/b.json");
      if (a.empty() || a != b) {
        ok = false;
        detail = "reports differ";
      }
    }
#else
    ok = false;
    detail = "CLI path not configured";
#endif
    report(13, "deterministic batch reports", ok, detail);
  }

  std::printf("%d of 13 criteria passed\n", 13 - failures);
  return failures;
}
