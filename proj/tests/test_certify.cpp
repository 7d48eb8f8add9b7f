#include "doctest.h"
#include "pcengel/certify.hpp"

using namespace pcengel;

TEST_CASE("literature constants re-derive against the catalog") {
  auto cat = build_catalog();
  LiteratureConstants lc = literature_constants();
  REQUIRE(lc.higman_bounds.at(2) == 1);
  REQUIRE(lc.higman_bounds.at(3) == 2);
  CHECK(verify_higman_bounds(cat, lc));

  // A wrong bound is caught by the brute force.
  LiteratureConstants bad = lc;
  bad.higman_bounds[3] = 1;  // Heis(7) with pow2 realizes class 2
  CHECK(!verify_higman_bounds(cat, bad));
}

TEST_CASE("baer: right Engel set inside the hypercentre everywhere") {
  auto cat = build_catalog();
  for (const auto& e : cat) {
    CAPTURE(e.name);
    CertificationReport r = baer_check(*e.group);
    CHECK(r.hypotheses_met);
    CHECK(r.conclusion_holds);
    CHECK(r.observed.at("engel_set_equals_hypercentre") == 1);
  }
  CertificationReport s3 = baer_check(*catalog_entry(cat, "s3").group);
  CHECK(s3.observed.at("engel_set_size") == 1);
  CHECK(s3.observed.at("hypercentre_order") == 1);
  CertificationReport h5 = baer_check(*catalog_entry(cat, "heis5").group);
  CHECK(h5.observed.at("engel_set_size") == 125);
}

TEST_CASE("thompson: fpf coprime prime order forces nilpotency") {
  auto cat = build_catalog();
  const auto& c7 = catalog_entry(cat, "c7");
  CertificationReport r = thompson_check(*c7.group, catalog_aut(c7, "pow2"));
  CHECK(r.hypotheses_met);
  CHECK(r.conclusion_holds);

  const auto& h7 = catalog_entry(cat, "heis7");
  CertificationReport rh = thompson_check(*h7.group, catalog_aut(h7, "pow2"));
  CHECK(rh.hypotheses_met);
  CHECK(rh.conclusion_holds);
  CHECK(rh.observed.at("class") == 2);

  const auto& f21 = catalog_entry(cat, "f21");
  CertificationReport rf = thompson_check(*f21.group, catalog_aut(f21, "invb"));
  CHECK(!rf.hypotheses_met);
  CHECK(!rf.witnesses.empty());
  CHECK(rf.observed.at("fixed_points") > 1);
}

TEST_CASE("higman: class bounded by h(q), unknown q records only") {
  auto cat = build_catalog();
  LiteratureConstants lc = literature_constants();
  const auto& c7 = catalog_entry(cat, "c7");
  CertificationReport r = higman_check(*c7.group, catalog_aut(c7, "inv"), lc);
  CHECK(r.hypotheses_met);
  CHECK(r.conclusion_holds);
  CHECK(r.observed.at("bound") == 1);

  const auto& h7 = catalog_entry(cat, "heis7");
  CertificationReport rh = higman_check(*h7.group, catalog_aut(h7, "pow2"), lc);
  CHECK(rh.hypotheses_met);
  CHECK(rh.conclusion_holds);
  CHECK(rh.observed.at("class") == rh.observed.at("bound"));  // tight

  // Drop the q = 3 constant: check degrades to an observation.
  LiteratureConstants partial;
  partial.higman_bounds[2] = 1;
  CertificationReport ro = higman_check(*h7.group, catalog_aut(h7, "pow2"), partial);
  CHECK(!ro.hypotheses_met);
  CHECK(ro.hypothesis_reason.find("bound unavailable") != std::string::npos);
}

TEST_CASE("main theorem shadow across the catalog") {
  auto cat = build_catalog();
  for (const auto& r : run_suite("main", cat)) {
    CAPTURE(r.group);
    CAPTURE(r.automorphism);
    if (r.hypotheses_met) {
      CHECK(r.conclusion_holds);
      CHECK(r.observed.count("d"));
      CHECK(r.observed.count("n"));
      CHECK(r.observed.count("c"));
    }
  }

  const auto& f21 = catalog_entry(cat, "f21");
  CertificationReport rf = main_theorem_check(*f21.group, catalog_aut(f21, "invb"));
  CHECK(!rf.hypotheses_met);
  CHECK(rf.hypothesis_reason.find("not right Engel") != std::string::npos);
  CHECK(!rf.witnesses.empty());

  const auto& hc = catalog_entry(cat, "heis7xc7");
  CertificationReport rc = main_theorem_check(*hc.group, catalog_aut(hc, "pow2"));
  CHECK(rc.hypotheses_met);
  CHECK(rc.conclusion_holds);
  CHECK(rc.observed.at("c") == 1);
  CHECK(rc.observed.at("fixed_points") == 7);
}

TEST_CASE("closure lemma shadow") {
  auto cat = build_catalog();
  LiteratureConstants lc = literature_constants();

  // gamma_3(Heis(7)) = 1 makes the containment trivial
  const auto& h7 = catalog_entry(cat, "heis7");
  CertificationReport r = closure_lemma_check(*h7.group, catalog_aut(h7, "pow2"), lc);
  CHECK(r.hypotheses_met);
  CHECK(r.conclusion_holds);
  CHECK(r.observed.at("gamma_order") == 1);

  // order-3^5 entry with q = 2: gamma_2 inside the normal closure of the
  // fixed-point cover
  const auto& e = catalog_entry(cat, "heis3x9");
  CertificationReport rm = closure_lemma_check(*e.group, catalog_aut(e, "mix"), lc);
  CHECK(rm.hypotheses_met);
  CHECK(rm.conclusion_holds);
  CHECK(rm.observed.at("gamma_order") > 1);
  CHECK(rm.observed.at("closure_order") >= rm.observed.at("gamma_order"));

  // abelian: gamma_2 = 1
  const auto& ea = catalog_entry(cat, "ea49");
  CertificationReport ra = closure_lemma_check(*ea.group, catalog_aut(ea, "rot3"), lc);
  CHECK(ra.hypotheses_met);
  CHECK(ra.conclusion_holds);
}

TEST_CASE("engel suite") {
  auto cat = build_catalog();

  const auto& h7 = catalog_entry(cat, "heis7");
  CertificationReport r = engel_suite(*h7.group, catalog_aut(h7, "pow2"), 7, 3);
  CHECK(r.hypotheses_met);
  CHECK(r.conclusion_holds);
  CHECK(r.observed.at("fixed_subring_class") == 0);
  CHECK(r.observed.at("lie_checks_run") == 1);
  CHECK(r.observed.at("projections_ok") == 1);
  CHECK(r.observed.at("grading_ok") == 1);
  CHECK(r.observed.at("adn0_ok") == 1);
  CHECK(r.observed.at("adnk_ok") == 1);

  const auto& hc = catalog_entry(cat, "heis7xc7");
  CertificationReport rc = engel_suite(*hc.group, catalog_aut(hc, "pow2"), 7, 3);
  CHECK(rc.hypotheses_met);
  CHECK(rc.conclusion_holds);
  CHECK(rc.observed.at("fixed_subring_class") == 1);
  CHECK(rc.observed.at("c") == 1);

  // p <= n: Lie-level parts skipped, group-level parts still run
  const auto& h5 = catalog_entry(cat, "heis5");
  CertificationReport rp = engel_suite(*h5.group, catalog_aut(h5, "invx"), 2, 2);
  CHECK(rp.hypotheses_met);
  CHECK(rp.observed.at("lie_checks_run") == 0);
  CHECK(rp.conclusion_holds);

  const auto& c7 = catalog_entry(cat, "c7");
  CHECK_THROWS_AS(engel_suite(*c7.group, catalog_aut(c7, "id"), 7, 1), input_error);
}

TEST_CASE("suite runner: order, determinism, near-misses flagged") {
  auto cat = build_catalog();
  for (const std::string& suite : known_suites()) {
    CAPTURE(suite);
    auto reports = run_suite(suite, cat);
    REQUIRE(!reports.empty());
    for (size_t i = 1; i < reports.size(); ++i)
      CHECK(std::tie(reports[i - 1].group, reports[i - 1].automorphism) <=
            std::tie(reports[i].group, reports[i].automorphism));
    for (const auto& r : reports) {
      CAPTURE(r.group);
      CAPTURE(r.automorphism);
      CHECK(r.suite == suite);
      if (r.hypotheses_met) CHECK(r.conclusion_holds);
      if (!r.hypotheses_met) CHECK(!r.hypothesis_reason.empty());
    }
    // pure recomputation gives identical reports
    auto again = run_suite(suite, cat);
    REQUIRE(again.size() == reports.size());
    for (size_t i = 0; i < reports.size(); ++i) {
      CHECK(again[i].hypotheses_met == reports[i].hypotheses_met);
      CHECK(again[i].conclusion_holds == reports[i].conclusion_holds);
      CHECK(again[i].observed == reports[i].observed);
      CHECK(again[i].witnesses == reports[i].witnesses);
    }
  }
  CHECK_THROWS_AS(run_suite("unknown", cat), input_error);
}
