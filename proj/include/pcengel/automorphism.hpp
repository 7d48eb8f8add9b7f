#pragma once

#include "pcengel/subgroup.hpp"

namespace pcengel {

class Automorphism {
 public:
  // Validates the homomorphism property on all relations, bijectivity
  // (image generates the whole group) and computes the order.
  static Automorphism from_images(const PcGroup& g, std::vector<Elt> images,
                                  long long order_cap = 10000);
  static Automorphism identity(const PcGroup& g);

  const PcGroup& group() const { return *g_; }
  const std::vector<Elt>& images() const { return images_; }
  Elt apply(const Elt& x) const;
  Elt apply_pow(const Elt& x, long long k) const;  // phi^k(x), k >= 0
  Automorphism compose(const Automorphism& o) const;  // this after o
  long long order() const { return order_; }
  bool is_identity() const;
  bool coprime() const;  // gcd(order(phi), |G|) == 1

  Subgroup fixed_points(long long cap = 100000) const;
  bool invariant(const Subgroup& h) const;
  bool fixed_point_free(long long cap = 100000) const;

  Automorphism induced_on_quotient(const Quotient& q) const;

 private:
  Automorphism(const PcGroup& g, std::vector<Elt> images, long long order);
  const PcGroup* g_;
  std::vector<Elt> images_;
  long long order_;
};

// C_{G/N}(phi) == image of C_G(phi) N / N. N must be normal and
// phi-invariant; non-coprime orders are reported by the caller.
bool quotient_covering_check(const PcGroup& g, const Automorphism& phi,
                             const Subgroup& n, long long cap = 100000);

// Greedy minimal generating sequence of pc generators, plus a word in those
// generators for every pc generator (via breadth-first closure).
struct GeneratingData {
  std::vector<int> min_gens;        // pc generator indices
  std::vector<Word> pc_gen_words;   // words over positions in min_gens
};
GeneratingData minimal_generating_data(const PcGroup& g, long long cap = 100000);

// All automorphisms of the given order, by brute force over images of a
// minimal generating sequence. Intended for small groups only.
std::vector<Automorphism> find_automorphisms_of_order(const PcGroup& g, long long k,
                                                      long long cap = 100000);

}  // namespace pcengel
