#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcengel {

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct hypothesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word over pc generators: (generator index, exponent) pairs.
using Word = std::vector<std::pair<int, int>>;

// Collected normal form: exponent vector with 0 <= e_i < r_i. Carries the
// id of its ambient group so cross-group arithmetic fails loudly.
struct Elt {
  int gid = -1;
  std::vector<int> e;

  bool operator==(const Elt& o) const { return gid == o.gid && e == o.e; }
  bool operator!=(const Elt& o) const { return !(*this == o); }
  bool operator<(const Elt& o) const { return e < o.e; }
  bool is_identity() const {
    for (int x : e)
      if (x) return false;
    return true;
  }
  // Lowest index with nonzero exponent, or ngens if identity.
  int leading() const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) return (int)i;
    return (int)e.size();
  }
};

struct ConsistencyResult {
  bool ok = false;
  long long order = 0;
  std::string witness;  // empty when ok
};

// Finite soluble group given by a power-commutator presentation, with
// collection-from-the-left normal forms.
class PcGroup {
 public:
  struct Spec {
    std::string name;
    std::vector<std::string> gen_names;
    std::vector<int> orders;            // relative orders r_i
    std::vector<Word> powers;           // powers[i]: word for g_i^{r_i}, gens > i
    std::map<std::pair<int, int>, Word> conj;  // (i,j), i<j: g_j^{g_i}, gens > i
  };

  explicit PcGroup(Spec spec);

  const std::string& name() const { return spec_.name; }
  int ngens() const { return (int)spec_.orders.size(); }
  int rel_order(int i) const { return spec_.orders[i]; }
  const std::string& gen_name(int i) const { return spec_.gen_names[i]; }
  int gen_index(const std::string& name) const;  // throws input_error
  const Spec& spec() const { return spec_; }
  long long order() const { return order_; }
  int id() const { return id_; }

  Elt identity() const;
  Elt gen(int i) const;
  Elt from_exponents(std::vector<int> e) const;

  Elt collect(const Word& w) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inverse(const Elt& a) const;
  Elt power(const Elt& a, long long n) const;
  Elt conjugate(const Elt& x, const Elt& g) const;  // g^{-1} x g
  // [x, y] = x^{-1} y^{-1} x y
  Elt commutator(const Elt& x, const Elt& y) const;
  long long element_order(const Elt& a) const;

  // Mixed-radix enumeration of normal forms (the whole group when the
  // presentation is consistent).
  Elt element_at(long long idx) const;
  long long index_of(const Elt& a) const;
  void for_each_element(const std::function<void(const Elt&)>& f) const;

  // Full Cayley-level associativity when |G| <= full_cap, otherwise the
  // overlap set of generator-power triples. Also rejects non-prime
  // relative orders.
  ConsistencyResult consistency_check(long long full_cap = 2000) const;

  std::string to_string(const Elt& a) const;

  void check_ambient(const Elt& a) const;

 private:
  void apply_gen(std::vector<int>& e, int i) const;
  void apply_word(std::vector<int>& e, const Word& w) const;

  Spec spec_;
  long long order_;
  int id_;
};

bool is_prime(long long n);

}  // namespace pcengel
