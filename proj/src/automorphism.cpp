#include "pcengel/automorphism.hpp"

#include <map>
#include <queue>

#include "pcengel/zmat.hpp"

namespace pcengel {

Automorphism::Automorphism(const PcGroup& g, std::vector<Elt> images, long long order)
    : g_(&g), images_(std::move(images)), order_(order) {}

Elt Automorphism::apply(const Elt& x) const {
  g_->check_ambient(x);
  Elt r = g_->identity();
  for (int i = 0; i < g_->ngens(); ++i)
    if (x.e[i]) r = g_->mul(r, g_->power(images_[i], x.e[i]));
  return r;
}

Elt Automorphism::apply_pow(const Elt& x, long long k) const {
  Elt r = x;
  for (long long t = 0; t < k; ++t) r = apply(r);
  return r;
}

Automorphism Automorphism::identity(const PcGroup& g) {
  std::vector<Elt> images;
  for (int i = 0; i < g.ngens(); ++i) images.push_back(g.gen(i));
  return Automorphism(g, std::move(images), 1);
}

bool Automorphism::is_identity() const {
  for (int i = 0; i < g_->ngens(); ++i)
    if (images_[i] != g_->gen(i)) return false;
  return true;
}

Automorphism Automorphism::compose(const Automorphism& o) const {
  if (g_ != o.g_) throw input_error("composing automorphisms of different groups");
  std::vector<Elt> images;
  for (int i = 0; i < g_->ngens(); ++i) images.push_back(apply(o.images_[i]));
  return Automorphism(*g_, std::move(images), 0);
}

Automorphism Automorphism::from_images(const PcGroup& g, std::vector<Elt> images,
                                       long long order_cap) {
  if ((int)images.size() != g.ngens())
    throw input_error("automorphism needs one image per generator");
  for (const Elt& x : images) g.check_ambient(x);

  auto apply_word = [&](const Word& w) {
    Elt r = g.identity();
    for (auto [i, k] : w) r = g.mul(r, g.power(images[i], k));
    return r;
  };
  for (int i = 0; i < g.ngens(); ++i) {
    Elt lhs = g.power(images[i], g.rel_order(i));
    Elt rhs = apply_word(g.spec().powers[i]);
    if (lhs != rhs)
      throw input_error("not an automorphism: power relation of " + g.gen_name(i) +
                        " is not preserved");
  }
  for (int i = 0; i < g.ngens(); ++i)
    for (int j = i + 1; j < g.ngens(); ++j) {
      Elt lhs = g.conjugate(images[j], images[i]);
      auto it = g.spec().conj.find({i, j});
      Elt rhs = it == g.spec().conj.end() ? images[j] : apply_word(it->second);
      if (lhs != rhs)
        throw input_error("not an automorphism: conjugation relation (" +
                          g.gen_name(i) + "," + g.gen_name(j) + ") is not preserved");
    }
  if (Subgroup::closure(g, images).order() != g.order())
    throw input_error("not an automorphism: images generate a proper subgroup");

  Automorphism phi(g, images, 0);
  Automorphism acc = phi;
  long long ord = 1;
  while (!acc.is_identity()) {
    acc = phi.compose(acc);
    if (++ord > order_cap)
      throw capacity_error("automorphism order exceeds the configured bound");
  }
  phi.order_ = ord;
  return phi;
}

bool Automorphism::coprime() const { return gcd_ll(order_, g_->order()) == 1; }

Subgroup Automorphism::fixed_points(long long cap) const {
  if (g_->order() > cap)
    throw capacity_error("fixed_points: group order exceeds enumeration cap");
  std::vector<Elt> fixed;
  g_->for_each_element([&](const Elt& x) {
    if (apply(x) == x) fixed.push_back(x);
  });
  return Subgroup::closure(*g_, fixed);
}

bool Automorphism::invariant(const Subgroup& h) const {
  for (const Elt& x : h.igs())
    if (!h.contains(apply(x))) return false;
  return true;
}

bool Automorphism::fixed_point_free(long long cap) const {
  return fixed_points(cap).is_trivial();
}

Automorphism Automorphism::induced_on_quotient(const Quotient& q) const {
  if (!invariant(q.kernel))
    throw hypothesis_error("kernel is not invariant under the automorphism");
  std::vector<Elt> images;
  for (size_t k = 0; k < q.kept.size(); ++k)
    images.push_back(q.project(apply(q.lift(q.group->gen((int)k)))));
  return from_images(*q.group, std::move(images));
}

bool quotient_covering_check(const PcGroup& g, const Automorphism& phi,
                             const Subgroup& n, long long cap) {
  if (!n.is_normal()) throw input_error("quotient_covering_check: N not normal");
  if (n.is_whole()) return true;  // both sides are the trivial group
  Quotient q = quotient(g, n);
  Automorphism psi = phi.induced_on_quotient(q);
  Subgroup lhs = psi.fixed_points(cap);

  Subgroup cg = phi.fixed_points(cap);
  std::vector<Elt> images;
  for (const Elt& x : cg.igs()) images.push_back(q.project(x));
  Subgroup rhs = Subgroup::closure(*q.group, images);
  return lhs == rhs;
}

GeneratingData minimal_generating_data(const PcGroup& g, long long cap) {
  if (g.order() > cap)
    throw capacity_error("minimal_generating_data: group exceeds cap");
  GeneratingData out;
  Subgroup h = Subgroup::trivial(g);
  for (int i = 0; i < g.ngens(); ++i) {
    if (h.contains(g.gen(i))) continue;
    out.min_gens.push_back(i);
    std::vector<Elt> gens;
    for (int s : out.min_gens) gens.push_back(g.gen(s));
    h = Subgroup::closure(g, gens);
  }
  // BFS over the Cayley graph on the minimal generators, recording words.
  std::map<std::vector<int>, Word> word;
  std::queue<Elt> frontier;
  Elt id = g.identity();
  word[id.e] = {};
  frontier.push(id);
  while (!frontier.empty()) {
    Elt x = frontier.front();
    frontier.pop();
    for (size_t s = 0; s < out.min_gens.size(); ++s) {
      Elt y = g.mul(x, g.gen(out.min_gens[s]));
      if (word.count(y.e)) continue;
      Word w = word[x.e];
      if (!w.empty() && w.back().first == (int)s)
        w.back().second++;
      else
        w.emplace_back((int)s, 1);
      word[y.e] = std::move(w);
      frontier.push(y);
    }
  }
  for (int i = 0; i < g.ngens(); ++i) out.pc_gen_words.push_back(word.at(g.gen(i).e));
  return out;
}

std::vector<Automorphism> find_automorphisms_of_order(const PcGroup& g, long long k,
                                                      long long cap) {
  GeneratingData gd = minimal_generating_data(g, cap);
  int m = (int)gd.min_gens.size();
  std::vector<Elt> pool;
  g.for_each_element([&](const Elt& x) { pool.push_back(x); });

  // Prune on element orders: an automorphism preserves them.
  std::vector<std::vector<Elt>> candidates(m);
  for (int s = 0; s < m; ++s) {
    long long o = g.element_order(g.gen(gd.min_gens[s]));
    for (const Elt& x : pool)
      if (g.element_order(x) == o) candidates[s].push_back(x);
  }

  std::vector<Automorphism> found;
  std::vector<Elt> choice(m, g.identity());
  auto eval_word = [&](const Word& w) {
    Elt r = g.identity();
    for (auto [s, c] : w) r = g.mul(r, g.power(choice[s], c));
    return r;
  };
  std::function<void(int)> rec = [&](int s) {
    if (s == m) {
      std::vector<Elt> images;
      for (int i = 0; i < g.ngens(); ++i) images.push_back(eval_word(gd.pc_gen_words[i]));
      try {
        Automorphism phi = Automorphism::from_images(g, std::move(images));
        if (phi.order() == k) found.push_back(std::move(phi));
      } catch (const input_error&) {
      }
      return;
    }
    for (const Elt& x : candidates[s]) {
      choice[s] = x;
      rec(s + 1);
    }
  };
  rec(0);
  return found;
}

}  // namespace pcengel
