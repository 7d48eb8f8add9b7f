#include "pcengel/pc.hpp"

#include <atomic>
#include <sstream>

namespace pcengel {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {
std::atomic<int> next_group_id{1};
}

PcGroup::PcGroup(Spec spec) : spec_(std::move(spec)) {
  int n = (int)spec_.orders.size();
  if (n == 0) throw input_error("presentation has no generators");
  if ((int)spec_.gen_names.size() != n)
    throw input_error("generator name count mismatch");
  if ((int)spec_.powers.size() != n) spec_.powers.resize(n);
  for (int i = 0; i < n; ++i) {
    if (spec_.orders[i] < 2)
      throw input_error("relative order of " + spec_.gen_names[i] +
                        " must be at least 2");
    for (auto& [g, k] : spec_.powers[i]) {
      if (g <= i || g >= n)
        throw input_error("power relation for " + spec_.gen_names[i] +
                          " mentions generator of index <= its own");
      if (k < 0) throw input_error("negative exponent in power relation");
    }
  }
  for (auto& [ij, w] : spec_.conj) {
    auto [i, j] = ij;
    if (!(0 <= i && i < j && j < n))
      throw input_error("conjugation relation indices out of range");
    for (auto& [g, k] : w) {
      if (g <= i || g >= n)
        throw input_error("conjugation relation for (" + spec_.gen_names[i] +
                          "," + spec_.gen_names[j] +
                          ") mentions generator of index <= conjugator");
      if (k < 0) throw input_error("negative exponent in conjugation relation");
    }
  }
  order_ = 1;
  for (int i = 0; i < n; ++i) order_ *= spec_.orders[i];
  id_ = next_group_id.fetch_add(1);
}

int PcGroup::gen_index(const std::string& name) const {
  for (int i = 0; i < ngens(); ++i)
    if (spec_.gen_names[i] == name) return i;
  throw input_error("unknown generator symbol: " + name);
}

void PcGroup::check_ambient(const Elt& a) const {
  if (a.gid != id_ || (int)a.e.size() != ngens())
    throw input_error("element does not belong to group " + spec_.name);
}

Elt PcGroup::identity() const { return Elt{id_, std::vector<int>(ngens(), 0)}; }

Elt PcGroup::gen(int i) const {
  Elt x = identity();
  x.e[i] = 1;
  return x;
}

Elt PcGroup::from_exponents(std::vector<int> e) const {
  if ((int)e.size() != ngens()) throw input_error("exponent vector size mismatch");
  for (int i = 0; i < ngens(); ++i)
    if (e[i] < 0 || e[i] >= spec_.orders[i])
      throw input_error("exponent out of range in normal form");
  return Elt{id_, std::move(e)};
}

// Right-multiply the normal form e by generator g_i. Relation words only
// mention generators of index > i, so the recursion descends in index.
void PcGroup::apply_gen(std::vector<int>& e, int i) const {
  int n = ngens();
  // x = head * tail with tail over indices > i; x*g_i = (head*g_i) * tail^{g_i}.
  std::vector<std::pair<int, int>> tail;
  for (int j = i + 1; j < n; ++j)
    if (e[j]) {
      tail.emplace_back(j, e[j]);
      e[j] = 0;
    }
  if (++e[i] == spec_.orders[i]) {
    e[i] = 0;
    apply_word(e, spec_.powers[i]);
  }
  for (auto [j, c] : tail) {
    auto it = spec_.conj.find({i, j});
    if (it == spec_.conj.end()) {
      for (int t = 0; t < c; ++t) apply_gen(e, j);
    } else {
      for (int t = 0; t < c; ++t) apply_word(e, it->second);
    }
  }
}

void PcGroup::apply_word(std::vector<int>& e, const Word& w) const {
  for (auto [g, k] : w)
    for (int t = 0; t < k; ++t) apply_gen(e, g);
}

Elt PcGroup::collect(const Word& w) const {
  Elt x = identity();
  for (auto [g, k] : w) {
    if (g < 0 || g >= ngens()) throw input_error("word references unknown generator");
    x = mul(x, power(gen(g), k));
  }
  return x;
}

Elt PcGroup::mul(const Elt& a, const Elt& b) const {
  check_ambient(a);
  check_ambient(b);
  Elt r = a;
  for (int i = 0; i < ngens(); ++i)
    for (int t = 0; t < b.e[i]; ++t) apply_gen(r.e, i);
  return r;
}

Elt PcGroup::inverse(const Elt& a) const {
  check_ambient(a);
  Elt x = a, y = identity();
  while (!x.is_identity()) {
    int i = x.leading();
    int k = spec_.orders[i] - x.e[i];
    Elt gk = identity();
    for (int t = 0; t < k; ++t) apply_gen(gk.e, i);
    x = mul(x, gk);
    y = mul(y, gk);
  }
  return y;
}

Elt PcGroup::power(const Elt& a, long long n) const {
  check_ambient(a);
  Elt base = a;
  if (n < 0) {
    base = inverse(base);
    n = -n;
  }
  Elt r = identity();
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

Elt PcGroup::conjugate(const Elt& x, const Elt& g) const {
  return mul(mul(inverse(g), x), g);
}

Elt PcGroup::commutator(const Elt& x, const Elt& y) const {
  return mul(mul(inverse(x), inverse(y)), mul(x, y));
}

long long PcGroup::element_order(const Elt& a) const {
  check_ambient(a);
  Elt x = a;
  long long d = 1;
  while (!x.is_identity()) {
    x = mul(x, a);
    if (++d > order_) throw input_error("element order exceeds group order");
  }
  return d;
}

Elt PcGroup::element_at(long long idx) const {
  Elt x = identity();
  for (int i = ngens() - 1; i >= 0; --i) {
    x.e[i] = (int)(idx % spec_.orders[i]);
    idx /= spec_.orders[i];
  }
  return x;
}

long long PcGroup::index_of(const Elt& a) const {
  check_ambient(a);
  long long idx = 0;
  for (int i = 0; i < ngens(); ++i) idx = idx * spec_.orders[i] + a.e[i];
  return idx;
}

void PcGroup::for_each_element(const std::function<void(const Elt&)>& f) const {
  std::vector<int> e(ngens(), 0);
  for (;;) {
    f(Elt{id_, e});
    int i = ngens() - 1;
    while (i >= 0 && ++e[i] == spec_.orders[i]) e[i--] = 0;
    if (i < 0) break;
  }
}

std::string PcGroup::to_string(const Elt& a) const {
  if (a.is_identity()) return "eps";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ngens(); ++i)
    if (a.e[i]) {
      if (!first) os << "*";
      os << spec_.gen_names[i];
      if (a.e[i] != 1) os << "^" << a.e[i];
      first = false;
    }
  return os.str();
}

ConsistencyResult PcGroup::consistency_check(long long full_cap) const {
  ConsistencyResult res;
  res.order = order_;
  auto assoc = [&](const Elt& x, const Elt& y, const Elt& z) {
    return mul(mul(x, y), z) == mul(x, mul(y, z));
  };
  if (order_ <= full_cap) {
    // (xy)g = x(yg) for all x, y and generators g forces full associativity.
    for (long long i = 0; i < order_; ++i) {
      Elt x = element_at(i);
      for (long long j = 0; j < order_; ++j) {
        Elt y = element_at(j);
        for (int k = 0; k < ngens(); ++k) {
          Elt z = gen(k);
          if (!assoc(x, y, z)) {
            res.witness = "associativity fails on (" + to_string(x) + ", " +
                          to_string(y) + ", " + to_string(z) + ")";
            return res;
          }
        }
      }
    }
  } else {
    // Overlap-level: generator powers g_i^a, 1 <= a < r_i.
    std::vector<Elt> pows;
    for (int i = 0; i < ngens(); ++i)
      for (int a = 1; a < spec_.orders[i]; ++a) pows.push_back(power(gen(i), a));
    for (const Elt& x : pows)
      for (const Elt& y : pows)
        for (const Elt& z : pows)
          if (!assoc(x, y, z)) {
            res.witness = "associativity fails on (" + to_string(x) + ", " +
                          to_string(y) + ", " + to_string(z) + ")";
            return res;
          }
  }
  for (int i = 0; i < ngens(); ++i)
    if (!is_prime(spec_.orders[i])) {
      res.witness = "relative order of " + spec_.gen_names[i] + " is not prime";
      return res;
    }
  res.ok = true;
  return res;
}

}  // namespace pcengel
