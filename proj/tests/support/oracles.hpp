#pragma once
// Independent reference computations used only by the tests.

#include <utility>
#include <vector>

#include "fdrep/module.hpp"
#include "fdrep/scalg.hpp"

namespace oracle {

using fdrep::Matrix;
using fdrep::Module;
using fdrep::Rational;

// dim Hom(X, Y) from the full vertex-wise commutation system
// Y_a F_i - F_j X_a = 0, one unknown per entry of every F_v.
inline std::size_t hom_dimension(const Module& x, const Module& y) {
  const auto& a = x.algebra();
  const int n = a.vertex_count();
  std::vector<std::size_t> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + y.dim(v) * x.dim(v);
  std::size_t unknowns = off[n];
  std::size_t rows = 0;
  for (int ar = 0; ar < a.arrow_count(); ++ar) rows += y.dim(a.arrow_target(ar)) * x.dim(a.arrow_source(ar));
  Matrix sys(rows, unknowns);
  std::size_t r0 = 0;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    int i = a.arrow_source(ar), j = a.arrow_target(ar);
    const Matrix& ya = y.arrow(ar);
    const Matrix& xa = x.arrow(ar);
    // entry (p, q) of Y_a F_i - F_j X_a, with F_v(s, t) at off[v] + s * x.dim(v) + t
    for (std::size_t p = 0; p < y.dim(j); ++p)
      for (std::size_t q = 0; q < x.dim(i); ++q) {
        std::size_t row = r0 + p * x.dim(i) + q;
        for (std::size_t s = 0; s < y.dim(i); ++s) sys(row, off[i] + s * x.dim(i) + q) += ya(p, s);
        for (std::size_t t = 0; t < x.dim(j); ++t) sys(row, off[j] + p * x.dim(j) + t) -= xa(t, q);
      }
    r0 += y.dim(j) * x.dim(i);
  }
  return unknowns - fdrep::rank(sys);
}

// Number of paths of length < bound from vertex s to vertex t in the cyclic
// quiver 0 -> 1 -> ... -> k-1 -> 0.
inline std::size_t cyclic_path_count(int k, int bound, int s, int t) {
  std::size_t c = 0;
  for (int len = 0; len < bound; ++len)
    if ((s + len) % k == t) ++c;
  return c;
}

// dim Hom_A(X, Y) for modules over a structure-constant algebra: all
// F with Y_b F = F X_b for every basis element b.
inline std::size_t sc_hom_dimension(const fdrep::SCModule& x, const fdrep::SCModule& y) {
  const std::size_t nx = x.dimension(), ny = y.dimension();
  const std::size_t d = x.algebra().dimension();
  Matrix sys(d * ny * nx, ny * nx);
  for (std::size_t b = 0; b < d; ++b) {
    const Matrix& yb = y.action(b);
    const Matrix& xb = x.action(b);
    for (std::size_t p = 0; p < ny; ++p)
      for (std::size_t q = 0; q < nx; ++q) {
        std::size_t row = (b * ny + p) * nx + q;
        for (std::size_t s = 0; s < ny; ++s) sys(row, s * nx + q) += yb(p, s);
        for (std::size_t t = 0; t < nx; ++t) sys(row, p * nx + t) -= xb(t, q);
      }
  }
  return ny * nx - fdrep::rank(sys);
}

// Upper-triangular n x n matrices, basis E_ij (i <= j) in row-major order.
inline fdrep::SCAlgebra upper_triangular(int n) {
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) idx.emplace_back(i, j);
  const std::size_t d = idx.size();
  std::vector<fdrep::SparseVec> table(d * d);
  std::vector<Rational> unit(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (idx[a].first == idx[a].second) unit[a] = 1;
    for (std::size_t b = 0; b < d; ++b)
      if (idx[a].second == idx[b].first)
        for (std::size_t c = 0; c < d; ++c)
          if (idx[c] == std::make_pair(idx[a].first, idx[b].second)) table[a * d + b].emplace_back(int(c), Rational(1));
  }
  return fdrep::SCAlgebra(d, std::move(table), std::move(unit));
}

// Nakayama algebras only. h(i, j) = dim Hom(P_i/rad^j, X) is the kernel
// dimension of the length-j path out of i acting on X_i; the multiplicity
// vector solves H a = h with H the same counts on the indecomposables.
inline std::vector<std::size_t> uniserial_hom_counts(const Module& x, const std::vector<std::pair<int, int>>& keys) {
  const auto& a = x.algebra();
  std::vector<int> out(a.vertex_count(), -1);
  for (int r = 0; r < a.arrow_count(); ++r) out[a.arrow_source(r)] = r;
  std::vector<std::size_t> h;
  for (auto [i, j] : keys) {
    Matrix m = Matrix::identity(x.dim(i));
    int v = i;
    bool alive = true;
    for (int s = 0; s < j && alive; ++s) {
      if (out[v] < 0) {
        alive = false;
        break;
      }
      m = x.arrow(out[v]) * m;
      v = a.arrow_target(out[v]);
    }
    h.push_back(alive ? x.dim(i) - fdrep::rank(m) : x.dim(i));
  }
  return h;
}

class NakayamaMultiplicities {
 public:
  explicit NakayamaMultiplicities(const fdrep::Algebra& a) : ind_(fdrep::enumerate_indecomposables_nakayama(a)) {
    for (const auto& z : ind_) {
      int top = -1;
      for (int v = 0; v < a.vertex_count() && top < 0; ++v) {
        if (z.dim(v) == 0) continue;
        std::size_t incoming = 0;
        for (int r = 0; r < a.arrow_count(); ++r)
          if (a.arrow_target(r) == v) incoming += fdrep::rank(z.arrow(r));
        if (incoming < z.dim(v)) top = v;
      }
      keys_.emplace_back(top, static_cast<int>(z.total_dimension()));
    }
    h_ = Matrix(ind_.size(), ind_.size());
    for (std::size_t c = 0; c < ind_.size(); ++c) {
      auto col = uniserial_hom_counts(ind_[c], keys_);
      for (std::size_t r = 0; r < col.size(); ++r) h_(r, c) = Rational(static_cast<long>(col[r]));
    }
  }

  const std::vector<Module>& indecomposables() const { return ind_; }

  std::vector<Rational> of(const Module& x) const {
    auto counts = uniserial_hom_counts(x, keys_);
    Matrix rhs(counts.size(), 1);
    for (std::size_t r = 0; r < counts.size(); ++r) rhs(r, 0) = Rational(static_cast<long>(counts[r]));
    auto sol = fdrep::solve_right(h_, rhs);
    std::vector<Rational> mult;
    for (std::size_t r = 0; r < ind_.size(); ++r) mult.push_back((*sol)(r, 0));
    return mult;
  }

  // X ∈ add M.
  bool in_add(const Module& x, const Module& m) const {
    auto mx = of(x), mm = of(m);
    for (std::size_t r = 0; r < mx.size(); ++r)
      if (mx[r] != 0 && mm[r] == 0) return false;
    return true;
  }

 private:
  std::vector<Module> ind_;
  std::vector<std::pair<int, int>> keys_;
  Matrix h_;
};

}  // namespace oracle
