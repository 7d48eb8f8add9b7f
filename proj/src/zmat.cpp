#include "pcengel/zmat.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace pcengel {

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long mod_inverse(long long a, long long m) {
  long long t = 0, newt = 1, r = m, newr = mod_floor(a, m);
  while (newr != 0) {
    long long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not coprime");
  return mod_floor(t, m);
}

Zmat zmat_identity(int n) {
  Zmat m(n, Zvec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Zmat zmat_mul(const Zmat& a, const Zmat& b) {
  if (a.empty() || b.empty()) return {};
  int n = (int)a.size(), k = (int)b.size(), m = (int)b[0].size();
  Zmat c(n, Zvec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      long long aij = a[i][j];
      if (!aij) continue;
      for (int l = 0; l < m; ++l) c[i][l] += aij * b[j][l];
    }
  return c;
}

namespace {

void row_addmul(Zmat& m, int dst, int src, long long k) {
  if (!k) return;
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += k * m[src][j];
}

// Reduce rows of a into row HNF starting at (row, col); u, if nonnull,
// receives the same row operations.
void hnf_inplace(Zmat& a, Zmat* u) {
  if (a.empty()) return;
  int rows = (int)a.size(), cols = (int)a[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid all entries of column c below row r into row r.
    for (int i = r + 1; i < rows; ++i) {
      while (a[i][c] != 0) {
        long long q = a[r][c] / a[i][c];
        row_addmul(a, r, i, -q);
        if (u) row_addmul(*u, r, i, -q);
        std::swap(a[r], a[i]);
        if (u) std::swap((*u)[r], (*u)[i]);
      }
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& x : a[r]) x = -x;
      if (u)
        for (auto& x : (*u)[r]) x = -x;
    }
    for (int i = 0; i < r; ++i) {
      long long q = a[i][c] >= 0 ? a[i][c] / a[r][c]
                                 : -((-a[i][c] + a[r][c] - 1) / a[r][c]);
      row_addmul(a, i, r, -q);
      if (u) row_addmul(*u, i, r, -q);
    }
    ++r;
  }
}

}  // namespace

Zmat hnf(Zmat a) {
  hnf_inplace(a, nullptr);
  while (!a.empty()) {
    bool zero = true;
    for (auto x : a.back())
      if (x) zero = false;
    if (!zero) break;
    a.pop_back();
  }
  return a;
}

HnfTransform hnf_with_transform(Zmat a) {
  Zmat u = zmat_identity((int)a.size());
  hnf_inplace(a, &u);
  return {std::move(a), std::move(u)};
}

SmithResult smith_normal_form(Zmat r) {
  int rows = (int)r.size();
  int cols = rows ? (int)r[0].size() : 0;
  Zmat v = zmat_identity(cols), vinv = zmat_identity(cols);

  auto col_swap = [&](int i, int j) {
    for (int k = 0; k < rows; ++k) std::swap(r[k][i], r[k][j]);
    for (int k = 0; k < cols; ++k) std::swap(v[k][i], v[k][j]);
    std::swap(vinv[i], vinv[j]);
  };
  auto col_neg = [&](int i) {
    for (int k = 0; k < rows; ++k) r[k][i] = -r[k][i];
    for (int k = 0; k < cols; ++k) v[k][i] = -v[k][i];
    for (int k = 0; k < cols; ++k) vinv[i][k] = -vinv[i][k];
  };
  // col j += k * col i  <=>  vinv row i -= k * row j
  auto col_addmul = [&](int j, int i, long long k) {
    if (!k) return;
    for (int t = 0; t < rows; ++t) r[t][j] += k * r[t][i];
    for (int t = 0; t < cols; ++t) v[t][j] += k * v[t][i];
    row_addmul(vinv, i, j, -k);
  };
  auto row_swap = [&](int i, int j) { std::swap(r[i], r[j]); };
  auto row_am = [&](int dst, int src, long long k) { row_addmul(r, dst, src, k); };

  int n = std::min(rows, cols);
  for (int s = 0; s < n; ++s) {
    // Find a nonzero pivot in the lower-right block.
    int pi = -1, pj = -1;
    for (int i = s; i < rows && pi < 0; ++i)
      for (int j = s; j < cols; ++j)
        if (r[i][j]) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    row_swap(s, pi);
    col_swap(s, pj);

    for (;;) {
      bool clean = true;
      for (int i = s + 1; i < rows; ++i) {
        while (r[i][s] != 0) {
          long long q = r[s][s] / r[i][s];
          row_am(s, i, -q);
          row_swap(s, i);
          clean = false;
        }
      }
      for (int j = s + 1; j < cols; ++j) {
        while (r[s][j] != 0) {
          long long q = r[s][s] / r[s][j];
          col_addmul(s, j, -q);
          col_swap(s, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (r[s][s] < 0) col_neg(s);
  }
  // Enforce divisibility d_s | d_{s+1}.
  for (int s = 0; s + 1 < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (r[s][s] == 0 || r[t][t] % r[s][s] == 0) continue;
      // Classic trick: fold column t into the s-block and re-diagonalize.
      col_addmul(s, t, 1);
      for (;;) {
        bool clean = true;
        while (r[t][s] != 0) {
          long long q = r[s][s] / r[t][s];
          row_am(s, t, -q);
          row_swap(s, t);
          clean = false;
        }
        while (r[s][t] != 0) {
          long long q = r[s][s] / r[s][t];
          col_addmul(s, t, -q);
          col_swap(s, t);
          clean = false;
        }
        if (clean) break;
      }
      if (r[s][s] < 0) col_neg(s);
      if (r[t][t] < 0) col_neg(t);
      t = s;  // re-check the chain from here
    }
  }
  return {std::move(r), std::move(v), std::move(vinv)};
}

ModSubgroup::ModSubgroup(Zvec moduli) : moduli_(std::move(moduli)) {
  int t = (int)moduli_.size();
  Zmat rows(t, Zvec(t, 0));
  for (int i = 0; i < t; ++i) rows[i][i] = moduli_[i];
  h_ = hnf(std::move(rows));
}

void ModSubgroup::add_generator(const Zvec& v) {
  assert(v.size() == moduli_.size());
  if (contains(v)) return;
  Zmat rows = h_;
  rows.push_back(v);
  h_ = hnf(std::move(rows));
}

bool ModSubgroup::contains(const Zvec& v) const {
  Zvec w = v;
  size_t t = moduli_.size();
  size_t row = 0;
  for (size_t c = 0; c < t && row < h_.size(); ++c) {
    if (h_[row][c] == 0) continue;  // cannot happen: h_ is full rank
    long long q = w[c] >= 0 ? w[c] / h_[row][c]
                            : -((-w[c] + h_[row][c] - 1) / h_[row][c]);
    for (size_t j = 0; j < t; ++j) w[j] -= q * h_[row][j];
    if (w[c] != 0) return false;
    ++row;
  }
  for (auto x : w)
    if (x) return false;
  return true;
}

bool ModSubgroup::operator==(const ModSubgroup& o) const {
  return moduli_ == o.moduli_ && h_ == o.h_;
}

long long ModSubgroup::size() const {
  long long full = 1, det = 1;
  for (auto d : moduli_) full *= d;
  for (size_t i = 0; i < h_.size(); ++i) det *= h_[i][i];
  return det == 0 ? 1 : full / det;
}

std::vector<Zvec> ModSubgroup::generators() const {
  std::vector<Zvec> out;
  for (const auto& row : h_) {
    Zvec r(row.size());
    bool nz = false;
    for (size_t j = 0; j < row.size(); ++j) {
      r[j] = mod_floor(row[j], moduli_[j]);
      if (r[j]) nz = true;
    }
    if (nz) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Zvec> kernel_mod(const Zmat& a, const Zvec& moduli) {
  int t = (int)a.size();
  int cols = t ? (int)a[0].size() : (int)moduli.size();
  Zmat stacked = a;
  for (int k = 0; k < cols; ++k) {
    Zvec row(cols, 0);
    row[k] = moduli[k];
    stacked.push_back(std::move(row));
  }
  auto [h, u] = hnf_with_transform(std::move(stacked));
  std::vector<Zvec> out;
  for (size_t i = 0; i < h.size(); ++i) {
    bool zero = true;
    for (auto x : h[i])
      if (x) zero = false;
    if (!zero) continue;
    Zvec x(u[i].begin(), u[i].begin() + t);
    bool nz = false;
    for (int j = 0; j < t; ++j) {
      x[j] = mod_floor(x[j], moduli[j]);
      if (x[j]) nz = true;
    }
    if (nz) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace pcengel
