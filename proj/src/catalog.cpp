#include "pcengel/catalog.hpp"

namespace pcengel {

namespace {

std::shared_ptr<PcGroup> make_group(std::string name, std::vector<std::string> gens,
                                    std::vector<int> orders,
                                    std::vector<std::pair<int, Word>> powers,
                                    std::map<std::pair<int, int>, Word> conj) {
  PcGroup::Spec spec;
  spec.name = std::move(name);
  spec.gen_names = std::move(gens);
  spec.orders = std::move(orders);
  spec.powers.resize(spec.orders.size());
  for (auto& [i, w] : powers) spec.powers[i] = std::move(w);
  spec.conj = std::move(conj);
  return std::make_shared<PcGroup>(std::move(spec));
}

// Images given as words over the pc generators.
Automorphism aut_from_words(const PcGroup& g, const std::vector<Word>& words) {
  std::vector<Elt> images;
  for (const Word& w : words) images.push_back(g.collect(w));
  return Automorphism::from_images(g, std::move(images));
}

struct Builder {
  std::vector<CatalogEntry> out;

  CatalogEntry& add(std::shared_ptr<PcGroup> g, std::vector<std::string> tags,
                    std::string note) {
    auto res = g->consistency_check();
    if (!res.ok)
      throw input_error("catalog entry " + g->name() + " inconsistent: " + res.witness);
    out.push_back(CatalogEntry{g->name(), std::move(g), {}, std::move(tags),
                               std::move(note)});
    return out.back();
  }

  void aut(CatalogEntry& e, const std::string& name, const std::vector<Word>& words) {
    e.automorphisms.push_back(NamedAut{name, aut_from_words(*e.group, words)});
  }
};

Word inv_word(const PcGroup& g, int gen) {
  Elt x = g.inverse(g.gen(gen));
  Word w;
  for (int i = 0; i < g.ngens(); ++i)
    if (x.e[i]) w.emplace_back(i, x.e[i]);
  return w;
}

}  // namespace

std::vector<CatalogEntry> build_catalog() {
  Builder b;

  // Cyclic groups of prime and prime-squared order.
  for (int p : {3, 5, 7}) {
    auto cp = make_group("c" + std::to_string(p), {"g"}, {p}, {}, {});
    auto& e = b.add(cp, {"p-group", "abelian"}, "cyclic of prime order");
    b.aut(e, "inv", {inv_word(*cp, 0)});
    if (p == 7) {
      b.aut(e, "pow2", {{{0, 2}}});
      b.aut(e, "id", {{{0, 1}}});
    }
  }
  for (int p : {3, 5, 7}) {
    auto cpp = make_group("c" + std::to_string(p * p), {"a", "b"}, {p, p},
                          {{0, {{1, 1}}}}, {});
    auto& e = b.add(cpp, {"p-group", "abelian"}, "cyclic of order p^2");
    b.aut(e, "inv", {inv_word(*cpp, 0), inv_word(*cpp, 1)});
  }

  // Elementary abelian groups, ranks 2 and 3, with matrix actions.
  {
    auto ea9 = make_group("ea9", {"a", "b"}, {3, 3}, {}, {});
    auto& e = b.add(ea9, {"p-group", "abelian"}, "(Z/3)^2");
    b.aut(e, "swap", {{{1, 1}}, {{0, 1}}});
    b.aut(e, "inv", {inv_word(*ea9, 0), inv_word(*ea9, 1)});
  }
  {
    auto ea25 = make_group("ea25", {"a", "b"}, {5, 5}, {}, {});
    auto& e = b.add(ea25, {"p-group", "abelian"}, "(Z/5)^2");
    b.aut(e, "swap", {{{1, 1}}, {{0, 1}}});
    b.aut(e, "diag", {{{0, 1}}, {inv_word(*ea25, 1)}});
  }
  {
    auto ea49 = make_group("ea49", {"a", "b"}, {7, 7}, {}, {});
    auto& e = b.add(ea49, {"p-group", "abelian"}, "(Z/7)^2");
    b.aut(e, "inv", {inv_word(*ea49, 0), inv_word(*ea49, 1)});
    // Companion matrix of x^2 + x + 1: order 3, fixed-point-free.
    b.aut(e, "rot3", {{{1, 1}}, {{0, 6}, {1, 6}}});
  }
  {
    auto ea27 = make_group("ea27", {"a", "b", "c"}, {3, 3, 3}, {}, {});
    auto& e = b.add(ea27, {"p-group", "abelian"}, "(Z/3)^3");
    b.aut(e, "negneg", {inv_word(*ea27, 0), inv_word(*ea27, 1), {{2, 1}}});
    b.aut(e, "inv", {inv_word(*ea27, 0), inv_word(*ea27, 1), inv_word(*ea27, 2)});
  }

  // Heisenberg groups: extraspecial of order p^3 and exponent p.
  for (int p : {3, 5, 7}) {
    auto h = make_group("heis" + std::to_string(p), {"x", "y", "z"}, {p, p, p}, {},
                        {{{0, 1}, {{1, 1}, {2, 1}}}});
    auto& e = b.add(h, {"p-group", "extraspecial"}, "Heisenberg group of order p^3");
    // x fixed, y and z inverted: order 2, noncentral fixed points <x>.
    b.aut(e, "invx", {{{0, 1}}, inv_word(*h, 1), inv_word(*h, 2)});
    // x and y inverted, z fixed: order 2, fixed points = centre.
    b.aut(e, "inv2", {inv_word(*h, 0), inv_word(*h, 1), {{2, 1}}});
    if (p == 7) b.aut(e, "pow2", {{{0, 2}}, {{1, 2}}, {{2, 4}}});
    if (p == 5) b.aut(e, "id", {{{0, 1}}, {{1, 1}}, {{2, 1}}});
  }

  // Extraspecial of order p^3 and exponent p^2.
  for (int p : {3, 5, 7}) {
    auto es = make_group("es" + std::to_string(p * p * p), {"a", "b", "c"}, {p, p, p},
                         {{0, {{2, 1}}}}, {{{0, 1}, {{1, 1}, {2, 1}}}});
    auto& e = b.add(es, {"p-group", "extraspecial"},
                    "extraspecial of order p^3, exponent p^2");
    // a inverted, b fixed, c inverted: order 2, noncentral fixed points <b>.
    b.aut(e, "invb", {inv_word(*es, 0), {{1, 1}}, inv_word(*es, 2)});
  }

  // C5 wr C5 in the (1+u)-basis of the base group F5[u]/(u^5): order 5^6,
  // nilpotency class 5.
  {
    std::map<std::pair<int, int>, Word> conj;
    for (int k = 0; k < 4; ++k) conj[{0, 1 + k}] = {{1 + k, 1}, {2 + k, 1}};
    auto w5 = make_group("w5", {"t", "b0", "b1", "b2", "b3", "b4"},
                         {5, 5, 5, 5, 5, 5}, {}, std::move(conj));
    b.add(w5, {"p-group", "wreath"}, "C5 wr C5, class 5");
  }

  // Heis(7) x C7, with the order-3 automorphism fixing the extra factor.
  {
    auto g = make_group("heis7xc7", {"x", "y", "z", "w"}, {7, 7, 7, 7}, {},
                        {{{0, 1}, {{1, 1}, {2, 1}}}});
    auto& e = b.add(g, {"p-group"}, "Heis(7) x C7");
    b.aut(e, "pow2", {{{0, 2}}, {{1, 2}}, {{2, 4}}, {{3, 1}}});
  }

  // Heis(3) x C3 x C3: order 3^5, order-2 automorphism with noncentral
  // fixed points <x>.
  {
    auto g = make_group("heis3x9", {"x", "y", "z", "a", "b"}, {3, 3, 3, 3, 3}, {},
                        {{{0, 1}, {{1, 1}, {2, 1}}}});
    auto& e = b.add(g, {"p-group"}, "Heis(3) x (Z/3)^2");
    b.aut(e, "mix", {{{0, 1}}, inv_word(*g, 1), inv_word(*g, 2), inv_word(*g, 3),
                     inv_word(*g, 4)});
  }

  // Soluble non-nilpotent entries.
  {
    auto s3 = make_group("s3", {"a", "b"}, {2, 3}, {}, {{{0, 1}, {{1, 2}}}});
    b.add(s3, {"soluble", "near-miss"},
          "S3; no nontrivial coprime automorphism exists (Aut(S3) = S3)");
  }
  {
    auto d10 = make_group("d10", {"a", "b"}, {2, 5}, {}, {{{0, 1}, {{1, 4}}}});
    b.add(d10, {"soluble", "near-miss"},
          "dihedral of order 10; no coprime prime-order automorphism");
  }
  {
    auto f21 = make_group("f21", {"a", "b"}, {3, 7}, {}, {{{0, 1}, {{1, 2}}}});
    auto& e = b.add(f21, {"soluble", "near-miss"}, "Frobenius group C7 : C3");
    b.aut(e, "invb", {{{0, 1}}, inv_word(*f21, 1)});
  }
  {
    // S4 on the chief series S4 > A4 > V4 > 1; c = (12)(34), d = (13)(24).
    std::map<std::pair<int, int>, Word> conj;
    conj[{0, 1}] = {{1, 2}};          // b^a = b^2
    conj[{0, 3}] = {{2, 1}, {3, 1}};  // d^a = cd
    conj[{1, 2}] = {{3, 1}};          // c^b = d
    conj[{1, 3}] = {{2, 1}, {3, 1}};  // d^b = cd
    auto s4 = make_group("s4", {"a", "b", "c", "d"}, {2, 3, 2, 2}, {}, std::move(conj));
    b.add(s4, {"soluble", "near-miss"}, "symmetric group on 4 points");
  }

  return b.out;
}

const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& cat,
                                  const std::string& name) {
  for (const auto& e : cat)
    if (e.name == name) return e;
  throw input_error("no catalog entry named " + name);
}

const Automorphism& catalog_aut(const CatalogEntry& e, const std::string& name) {
  for (const auto& a : e.automorphisms)
    if (a.name == name) return a.phi;
  throw input_error("entry " + e.name + " has no automorphism named " + name);
}

}  // namespace pcengel
