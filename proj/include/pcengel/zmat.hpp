#pragma once

#include <cstdint>
#include <vector>

namespace pcengel {

// Dense integer matrices, row-major. Sizes here are tiny (<= ~40 rows),
// entries stay far below 2^63 for the moduli in play.
using Zvec = std::vector<long long>;
using Zmat = std::vector<Zvec>;

Zmat zmat_identity(int n);
Zmat zmat_mul(const Zmat& a, const Zmat& b);

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot). Zero rows are dropped.
Zmat hnf(Zmat a);

// HNF with row transformation: u * input = hnf rows (including zero rows);
// returns pair (h, u) with h the full row-reduced matrix (zero rows kept).
struct HnfTransform {
  Zmat h;
  Zmat u;
};
HnfTransform hnf_with_transform(Zmat a);

// Smith normal form s = u * r * v with divisibility chain along the
// diagonal. Only the column transform and its inverse are tracked; that is
// all the abelian-group diagonalization needs.
struct SmithResult {
  Zmat s;
  Zmat v;
  Zmat vinv;
};
SmithResult smith_normal_form(Zmat r);

long long mod_floor(long long a, long long m);
long long gcd_ll(long long a, long long b);
// Inverse of a mod m; a must be coprime to m.
long long mod_inverse(long long a, long long m);

// Additive subgroup of Z^t / (d_1 x ... x d_t), canonicalized by HNF of the
// generator rows together with the modulus rows d_k e_k.
class ModSubgroup {
 public:
  ModSubgroup() = default;
  explicit ModSubgroup(Zvec moduli);

  void add_generator(const Zvec& v);
  bool contains(const Zvec& v) const;
  bool operator==(const ModSubgroup& o) const;

  long long size() const;
  bool is_trivial() const { return size() == 1; }

  // Canonical generating rows (reduced mod the moduli, zero rows dropped).
  std::vector<Zvec> generators() const;
  const Zvec& moduli() const { return moduli_; }

 private:
  Zvec moduli_;
  Zmat h_;  // square t x t HNF, always full rank thanks to modulus rows
};

// Solutions x of x * a == 0 (mod moduli), as subgroup generators.
std::vector<Zvec> kernel_mod(const Zmat& a, const Zvec& moduli);

}  // namespace pcengel
