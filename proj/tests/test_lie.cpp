#include <random>

#include "doctest.h"
#include "pcengel/catalog.hpp"
#include "pcengel/lie.hpp"

using namespace pcengel;

namespace {
bool is_p_group(const PcGroup& g, long long p) {
  long long o = g.order();
  while (o % p == 0) o /= p;
  return o == 1;
}
long long prime_of(const PcGroup& g) { return g.rel_order(0); }
}  // namespace

TEST_CASE("associated ring of Heis(5) along the lower central series") {
  auto cat = build_catalog();
  const auto& h5 = catalog_entry(cat, "heis5");
  GradedLieRing l(*h5.group, lcs_filtration(*h5.group));
  REQUIRE(l.nweights() == 2);
  CHECK(l.component(1).orders == std::vector<long long>{5, 5});
  CHECK(l.component(2).orders == std::vector<long long>{5});

  LieElt xb = l.class_of(1, h5.group->gen(0));
  LieElt yb = l.class_of(1, h5.group->gen(1));
  LieElt zb = l.class_of(2, h5.group->gen(2));
  CHECK(l.equal(l.bracket(yb, xb), zb));
  CHECK(l.is_zero(l.bracket(xb, xb)));
  CHECK(l.lie_nilpotency_class() == 2);

  // lift followed by class_of is the identity on classes
  CHECK(l.equal(l.class_of(1, l.lift(xb)), xb));
}

TEST_CASE("abelian groups give zero-bracket rings") {
  auto cat = build_catalog();
  const auto& ea = catalog_entry(cat, "ea27");
  GradedLieRing l(*ea.group, lcs_filtration(*ea.group));
  REQUIRE(l.nweights() == 1);
  for (int a = 0; a < l.component(1).rank(); ++a)
    for (int b = 0; b < l.component(1).rank(); ++b)
      CHECK(l.is_zero(l.bracket(l.gen(1, a), l.gen(1, b))));
  CHECK(l.lie_nilpotency_class() == 1);
  CHECK(l.check_axioms().ok);
}

TEST_CASE("C25 Zassenhaus ring has the expected component orders") {
  auto cat = build_catalog();
  const auto& c25 = catalog_entry(cat, "c25");
  GradedLieRing l(*c25.group, zassenhaus_filtration(*c25.group, 5));
  REQUIRE(l.nweights() == 5);
  CHECK(l.component(1).orders == std::vector<long long>{5});
  CHECK(l.component(2).rank() == 0);
  CHECK(l.component(5).orders == std::vector<long long>{5});
}

TEST_CASE("lie axioms hold on every catalog ring; corruption is caught") {
  auto cat = build_catalog();
  for (const auto& e : cat) {
    auto nc = nilpotency_class(*e.group);
    if (!nc) continue;
    CAPTURE(e.name);
    GradedLieRing l(*e.group, lcs_filtration(*e.group));
    auto res = l.check_axioms();
    CAPTURE(res.witness);
    CHECK(res.ok);
    long long p = prime_of(*e.group);
    if (is_p_group(*e.group, p)) {
      GradedLieRing lz(*e.group, zassenhaus_filtration(*e.group, p));
      CHECK(lz.check_axioms().ok);
    }
  }

  const auto& h5 = catalog_entry(cat, "heis5");
  GradedLieRing l(*h5.group, lcs_filtration(*h5.group));
  l.set_structure_constant(1, 0, 1, 1, Zvec{3});
  CHECK(!l.check_axioms().ok);
}

TEST_CASE("nonstrongly-central filtration is rejected") {
  auto cat = build_catalog();
  const auto& s4 = catalog_entry(cat, "s4");
  Filtration f;
  f.g = s4.group.get();
  f.kind = "custom";
  f.terms = {Subgroup::whole(*s4.group), Subgroup::trivial(*s4.group)};
  CHECK_THROWS_AS(GradedLieRing(*s4.group, f), hypothesis_error);
}

TEST_CASE("class equality for every nilpotent catalog group") {
  auto cat = build_catalog();
  for (const auto& e : cat) {
    if (!nilpotency_class(*e.group)) continue;
    CAPTURE(e.name);
    CHECK(class_equality_check(*e.group));
  }
}

TEST_CASE("L_p inside D_p and the coincidence in degrees prime to p") {
  auto cat = build_catalog();
  const auto& h5 = catalog_entry(cat, "heis5");
  LpData data = lp_from_zassenhaus(*h5.group, 5);
  // degree-2 component is generated by the bracket of degree-1 elements
  CHECK(data.lp.per_weight[1].size() == 5);
  CHECK(dp_lp_coincidence_check(*h5.group, 5));

  for (const auto& e : cat) {
    long long p = prime_of(*e.group);
    if (!is_p_group(*e.group, p)) continue;
    CAPTURE(e.name);
    CHECK(dp_lp_coincidence_check(*e.group, p));
  }

  // empty generating set spans the zero subring
  GradedLieRing l(*h5.group, lcs_filtration(*h5.group));
  CHECK(l.subring_generated({}).is_zero());
}

TEST_CASE("induced automorphisms") {
  auto cat = build_catalog();
  const auto& h7 = catalog_entry(cat, "heis7");
  GradedLieRing l(*h7.group, lcs_filtration(*h7.group));
  LieAut a = induced_automorphism(l, catalog_aut(h7, "pow2"));
  CHECK(a.mats[0] == Zmat{{2, 0}, {0, 2}});
  CHECK(a.mats[1] == Zmat{{4}});

  LieAut id = induced_automorphism(l, Automorphism::identity(*h7.group));
  CHECK(id.mats[0] == Zmat{{1, 0}, {0, 1}});

  // commutes with brackets on all generator pairs
  for (const auto& e : cat)
    for (const auto& na : e.automorphisms) {
      if (!nilpotency_class(*e.group)) continue;
      GradedLieRing r(*e.group, lcs_filtration(*e.group));
      LieAut m = induced_automorphism(r, na.phi);
      for (int v = 1; v <= r.nweights(); ++v)
        for (int i = 0; i < r.component(v).rank(); ++i)
          for (int w = 1; w <= r.nweights(); ++w)
            for (int j = 0; j < r.component(w).rank(); ++j) {
              LieElt lhs = lie_aut_apply(r, m, r.bracket(r.gen(v, i), r.gen(w, j)));
              LieElt rhs = r.bracket(lie_aut_apply(r, m, r.gen(v, i)),
                                     lie_aut_apply(r, m, r.gen(w, j)));
              REQUIRE(r.equal(lhs, rhs));
            }
    }
}

TEST_CASE("ad-nilpotency index and minimal epsilon") {
  auto cat = build_catalog();
  const auto& h5 = catalog_entry(cat, "heis5");
  GradedLieRing l(*h5.group, lcs_filtration(*h5.group));
  LieElt xb = l.class_of(1, h5.group->gen(0));
  CHECK(l.ad_nilpotency_index(xb) == 2);
  CHECK(l.ad_nilpotency_index(l.zero()) == 1);
  CHECK(l.minimal_epsilon({xb}) == 2);
  CHECK(l.minimal_epsilon({}) == 1);

  std::vector<LieElt> all = l.sub_gens(l.full_sub());
  CHECK(l.minimal_epsilon(all) == l.lie_nilpotency_class());

  const auto& ea = catalog_entry(cat, "ea25");
  GradedLieRing la(*ea.group, lcs_filtration(*ea.group));
  CHECK(la.ad_nilpotency_index(la.gen(1, 0)) == 1);
}

TEST_CASE("cyclotomic arithmetic") {
  // (1 + w) * w = -1 when q = 3
  CHECK(cyc_mul(3, Zvec{1, 1}, Zvec{0, 1}, 7) == Zvec{6, 0});
  CHECK(cyc_mul(3, cyc_omega_pow(3, 1), cyc_omega_pow(3, 2), 7) == cyc_one(3));
  CHECK(cyc_omega_pow(2, 1) == Zvec{-1});
  CHECK(cyc_mul(2, cyc_omega_pow(2, 1), cyc_omega_pow(2, 1), 9) == cyc_one(2));
  // w^q = 1 for several q
  for (long long q : {2, 3, 5}) {
    Zvec acc = cyc_one(q);
    for (long long i = 0; i < q; ++i) acc = cyc_mul(q, acc, cyc_omega_pow(q, 1), 49);
    CHECK(acc == cyc_one(q));
  }
  CHECK_THROWS_AS(CyclotomicRing(3, 9), hypothesis_error);
  CHECK_THROWS_AS(CyclotomicRing(4, 7), hypothesis_error);
  CyclotomicRing r(3, 7);
  CHECK(r.scale_by_inv_q(Zvec{3, 0}) == Zvec{1, 0});
}

TEST_CASE("scalar extension embeds and restricts") {
  auto cat = build_catalog();
  const auto& h7 = catalog_entry(cat, "heis7");
  GradedLieRing l(*h7.group, lcs_filtration(*h7.group));
  ExtLieRing ext(l, 3);
  CHECK_THROWS_AS(ExtLieRing(l, 7), hypothesis_error);

  LieElt xb = l.class_of(1, h7.group->gen(0));
  auto back = ext.restrict_to_base(ext.embed(xb));
  REQUIRE(back.has_value());
  CHECK(l.equal(*back, xb));

  // scalar 1 acts as the identity
  auto e = ext.basis(1, 0, 1);
  CHECK(ext.equal(ext.smul(cyc_one(3), e), e));

  // extension preserves nilpotency class
  for (const auto& entry : cat) {
    if (!nilpotency_class(*entry.group)) continue;
    long long p = prime_of(*entry.group);
    if (!is_p_group(*entry.group, p)) continue;
    CAPTURE(entry.name);
    GradedLieRing r(*entry.group, lcs_filtration(*entry.group));
    long long q = p == 3 ? 2 : 3;
    ExtLieRing er(r, q);
    CHECK(er.lie_nilpotency_class() == r.lie_nilpotency_class());
  }

  // brackets extend bilinearly: embedded brackets match base brackets
  LieElt yb = l.class_of(1, h7.group->gen(1));
  CHECK(ext.equal(ext.bracket(ext.embed(xb), ext.embed(yb)),
                  ext.embed(l.bracket(xb, yb))));
}

TEST_CASE("eigenspace decomposition of (Z/7)^2 under an order-3 map") {
  auto cat = build_catalog();
  const auto& ea = catalog_entry(cat, "ea49");
  GradedLieRing l(*ea.group, lcs_filtration(*ea.group));
  LieAut phi = induced_automorphism(l, catalog_aut(ea, "rot3"));
  ExtLieRing ext(l, 3);
  EigenDecomposition dec(ext, phi, 3);

  CHECK(dec.projection_checks().ok);
  CHECK(dec.eigencomponent(1, 0).size() == 1);
  CHECK(dec.eigencomponent(1, 1).size() == 49);
  CHECK(dec.eigencomponent(1, 2).size() == 49);
  // direct sum reconstructs the extended module
  CHECK(dec.eigencomponent(1, 0).size() * dec.eigencomponent(1, 1).size() *
            dec.eigencomponent(1, 2).size() ==
        7 * 7 * 7 * 7);
  // membership is the eigenvector equation
  for (long long j = 0; j < 3; ++j)
    for (const auto& x : dec.eigen_gens(1, j))
      CHECK(ext.equal(ext.apply(phi, x), ext.smul(cyc_omega_pow(3, j), x)));
  CHECK(grading_check(dec).ok);
}

TEST_CASE("trivial action puts everything in degree zero") {
  auto cat = build_catalog();
  const auto& ea = catalog_entry(cat, "ea49");
  GradedLieRing l(*ea.group, lcs_filtration(*ea.group));
  LieAut id = induced_automorphism(l, Automorphism::identity(*ea.group));
  ExtLieRing ext(l, 3);
  EigenDecomposition dec(ext, id, 3);
  CHECK(dec.projection_checks().ok);
  CHECK(dec.eigencomponent(1, 0).size() == 7LL * 7 * 7 * 7);
  CHECK(dec.eigencomponent(1, 1).size() == 1);
  CHECK(dec.eigencomponent(1, 2).size() == 1);
  CHECK(grading_check(dec).ok);
}

TEST_CASE("Heis(7) with the order-3 map: trivial zero-eigenspace, graded brackets") {
  auto cat = build_catalog();
  const auto& h7 = catalog_entry(cat, "heis7");
  GradedLieRing l(*h7.group, lcs_filtration(*h7.group));
  LieAut phi = induced_automorphism(l, catalog_aut(h7, "pow2"));
  ExtLieRing ext(l, 3);
  EigenDecomposition dec(ext, phi, 3);
  CHECK(dec.projection_checks().ok);
  CHECK(dec.eigencomponent(1, 0).size() == 1);
  CHECK(dec.eigencomponent(2, 0).size() == 1);
  CHECK(grading_check(dec).ok);

  // corrupting a projection image breaks the checks
  dec.corrupt_projection(1, 1, 0, Zvec(ext.ext_rank(1), 1));
  bool broken = !dec.projection_checks().ok || !grading_check(dec).ok;
  CHECK(broken);
}

TEST_CASE("projection and grading checks across all coprime catalog pairs") {
  auto cat = build_catalog();
  for (const auto& e : cat) {
    if (!nilpotency_class(*e.group)) continue;
    GradedLieRing l(*e.group, lcs_filtration(*e.group));
    for (const auto& na : e.automorphisms) {
      long long q = na.phi.order();
      if (!is_prime(q) || !na.phi.coprime()) continue;
      CAPTURE(e.name);
      CAPTURE(na.name);
      LieAut phi = induced_automorphism(l, na.phi);
      ExtLieRing ext(l, q);
      EigenDecomposition dec(ext, phi, q);
      auto pc = dec.projection_checks();
      CAPTURE(pc.witness);
      CHECK(pc.ok);
      auto gc = grading_check(dec);
      CAPTURE(gc.witness);
      CHECK(gc.ok);
    }
  }
}
