#include "doctest.h"
#include "pcengel/textio.hpp"

using namespace pcengel;

namespace {
const char* kSample = R"(# comment
group h5
gen x 5
gen y 5
gen z 5
conj x y = y^1*z^1
end

aut invx on h5
x -> x^1
y -> y^4
z -> z^4
end
)";
}

TEST_CASE("parse a presentation with an automorphism") {
  auto entries = parse_text(kSample);
  REQUIRE(entries.size() == 1);
  const auto& e = entries[0];
  CHECK(e.name == "h5");
  CHECK(e.group->order() == 125);
  REQUIRE(e.automorphisms.size() == 1);
  CHECK(e.automorphisms[0].name == "invx");
  CHECK(e.automorphisms[0].phi.order() == 2);
  // y -> y^4 z^0, z -> z^4
  CHECK(e.automorphisms[0].phi.apply(e.group->gen(1)) ==
        e.group->power(e.group->gen(1), 4));
}

TEST_CASE("word syntax: eps, bare symbols, negative exponents in images") {
  auto entries = parse_text(
      "group c3\ngen a 3\nend\naut inv on c3\na -> a^-1\nend\n"
      "group c9\ngen a 3\ngen b 3\npow a = b\nend\n");
  const auto& c3 = entries[0];
  CHECK(c3.automorphisms[0].phi.apply(c3.group->gen(0)) ==
        c3.group->power(c3.group->gen(0), 2));
  CHECK(entries[1].group->element_order(entries[1].group->gen(0)) == 9);
}

TEST_CASE("exact parse errors with line numbers") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_text(text);
      FAIL_CHECK("expected input_error for: " << needle);
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("group g\ngen a 4\nend\n", "line 2: relative order 4");
  expect_error("group g\ngen a 3\npow a = b^1\nend\n",
               "line 3: unknown generator symbol 'b'");
  expect_error("group g\ngen a 3\n", "line 1: group block never closed");
  expect_error("gen a 3\n", "line 1: expected 'group' or 'aut'");
  expect_error("group g\ngen a 3\ngen a 3\nend\n", "line 3: duplicate generator");
  expect_error("group g\ngen a 3\nend\naut f on h\na -> a\nend\n",
               "line 4: unknown group 'h'");
  expect_error("group g\ngen a 3\nend\naut f on g\nend\n",
               "line 4: missing image for generator 'a'");
  expect_error("group g\ngen a 3\nend\naut f on g\na -> a^2*\nend\n",
               "line 5: trailing '*'");
  expect_error("group g\ngen a 3\nend\naut f on g\na -> eps\nend\n",
               "invalid automorphism");
  expect_error("group g\ngen a 3\nend\ngroup g\ngen b 3\nend\n",
               "line 4: duplicate group 'g'");
  // consistent syntax, inconsistent presentation
  expect_error("group g\ngen a 2\ngen b 2\nconj a b = a^1\nend\n",
               "invalid presentation");
}

TEST_CASE("round trip: every catalog entry survives serialize/parse") {
  auto cat = build_catalog();
  std::string all;
  for (const auto& e : cat) all += serialize_entry(e) + "\n";
  auto parsed = parse_text(all);
  REQUIRE(parsed.size() == cat.size());
  for (size_t i = 0; i < cat.size(); ++i) {
    CAPTURE(cat[i].name);
    const auto& a = *cat[i].group;
    const auto& b = *parsed[i].group;
    CHECK(parsed[i].name == cat[i].name);
    CHECK(a.spec().gen_names == b.spec().gen_names);
    CHECK(a.spec().orders == b.spec().orders);
    CHECK(a.spec().powers == b.spec().powers);
    CHECK(a.spec().conj == b.spec().conj);
    REQUIRE(parsed[i].automorphisms.size() == cat[i].automorphisms.size());
    for (size_t k = 0; k < cat[i].automorphisms.size(); ++k) {
      CHECK(parsed[i].automorphisms[k].name == cat[i].automorphisms[k].name);
      const auto& pa = parsed[i].automorphisms[k].phi;
      const auto& ca = cat[i].automorphisms[k].phi;
      CHECK(pa.order() == ca.order());
      for (int j = 0; j < a.ngens(); ++j)
        CHECK(pa.images()[j].e == ca.images()[j].e);
    }
  }
  // serializing the reparsed entries reproduces the text exactly
  std::string again;
  for (const auto& e : parsed) again += serialize_entry(e) + "\n";
  CHECK(again == all);
}
