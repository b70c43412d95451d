#include "fdrep/scalg.hpp"

#include <mutex>

namespace fdrep {

struct SCAlgebra::Impl {
  std::size_t dim = 0;
  std::vector<SparseVec> table;  // [i * dim + j]
  std::vector<Rational> unit;
  std::vector<std::vector<Rational>> idempotents;
  bool primitive = false;

  mutable std::once_flag radical_once;
  mutable Matrix radical;
  mutable std::string radical_error;

  Impl() = default;
  Impl(const Impl& o) : dim(o.dim), table(o.table), unit(o.unit), idempotents(o.idempotents), primitive(o.primitive) {}
};

SCAlgebra::SCAlgebra(std::size_t dim, std::vector<SparseVec> table, std::vector<Rational> unit) {
  if (table.size() != dim * dim) throw AlgebraError("structure table must have dim^2 entries");
  if (unit.size() != dim) throw AlgebraError("unit vector has the wrong length");
  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->table = std::move(table);
  impl->unit = std::move(unit);
  impl->idempotents = {impl->unit};
  impl->primitive = dim == 0;
  impl_ = std::move(impl);
}

std::size_t SCAlgebra::dimension() const { return impl_->dim; }
const SparseVec& SCAlgebra::product(std::size_t i, std::size_t j) const { return impl_->table[i * impl_->dim + j]; }
const std::vector<Rational>& SCAlgebra::unit() const { return impl_->unit; }

std::vector<Rational> SCAlgebra::multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  const std::size_t d = impl_->dim;
  std::vector<Rational> z(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational s = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) z[k] += s * c;
    }
  }
  return z;
}

SCAlgebra SCAlgebra::opposite() const {
  const std::size_t d = impl_->dim;
  auto impl = std::make_shared<Impl>(*impl_);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) impl->table[i * d + j] = impl_->table[j * d + i];
  return SCAlgebra(std::shared_ptr<const Impl>(std::move(impl)));
}

namespace {
std::vector<Rational> unit_vec(std::size_t d, std::size_t i) {
  std::vector<Rational> v(d);
  v[i] = 1;
  return v;
}
}  // namespace

bool SCAlgebra::is_associative() const {
  const std::size_t d = impl_->dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto l = multiply(multiply(unit_vec(d, i), unit_vec(d, j)), unit_vec(d, k));
        auto r = multiply(unit_vec(d, i), multiply(unit_vec(d, j), unit_vec(d, k)));
        if (l != r) return false;
      }
  return true;
}

bool SCAlgebra::unit_law_holds() const {
  const std::size_t d = impl_->dim;
  for (std::size_t i = 0; i < d; ++i) {
    if (multiply(impl_->unit, unit_vec(d, i)) != unit_vec(d, i)) return false;
    if (multiply(unit_vec(d, i), impl_->unit) != unit_vec(d, i)) return false;
  }
  return true;
}

Matrix SCAlgebra::left_multiplication(const std::vector<Rational>& x) const {
  const std::size_t d = impl_->dim;
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : product(i, j)) m(k, j) += x[i] * c;
  }
  return m;
}

Matrix SCAlgebra::right_multiplication(const std::vector<Rational>& x) const {
  const std::size_t d = impl_->dim;
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& [k, c] : product(i, j)) m(k, i) += x[j] * c;
  }
  return m;
}

Matrix SCAlgebra::trace_form() const {
  const std::size_t d = impl_->dim;
  std::vector<Rational> t(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t m = 0; m < d; ++m)
      for (const auto& [r, c] : product(k, m))
        if (r == static_cast<int>(m)) t[k] += c;
  Matrix form(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : product(i, j)) form(i, j) += c * t[k];
  return form;
}

const Matrix& SCAlgebra::radical() const {
  std::call_once(impl_->radical_once, [this] {
    const std::size_t d = impl_->dim;
    Matrix j = kernel_basis(trace_form());
    // J^k until it vanishes; a stall means the kernel is not nilpotent.
    Matrix power = j;
    while (power.cols() > 0) {
      SpanBuilder next(d);
      for (std::size_t a = 0; a < power.cols(); ++a) {
        std::vector<Rational> x(d);
        for (std::size_t r = 0; r < d; ++r) x[r] = power(r, a);
        for (std::size_t b = 0; b < j.cols(); ++b) {
          std::vector<Rational> y(d);
          for (std::size_t r = 0; r < d; ++r) y[r] = j(r, b);
          next.add(multiply(x, y));
        }
      }
      if (next.dimension() >= power.cols()) {
        impl_->radical_error = "trace-form kernel is not nilpotent";
        break;
      }
      power = next.basis();
    }
    impl_->radical = std::move(j);
  });
  if (!impl_->radical_error.empty()) throw AlgebraError(impl_->radical_error);
  return impl_->radical;
}

std::size_t SCAlgebra::simple_block_count() const {
  const std::size_t d = impl_->dim;
  const Matrix& j = radical();
  Matrix q = j.cols() == 0 ? Matrix::identity(d) : left_kernel_basis(j);  // q v = 0 iff v in J
  std::vector<Matrix> rows;
  for (std::size_t x = 0; x < d; ++x) {
    auto ex = unit_vec(d, x);
    // z |-> z x - x z
    Matrix ad = right_multiplication(ex) - left_multiplication(ex);
    rows.push_back(q * ad);
  }
  Matrix sys = vcat(rows, d);
  return kernel_basis(sys).cols() - j.cols();
}

SCAlgebra SCAlgebra::with_idempotents(std::vector<std::vector<Rational>> idempotents, bool primitive) const {
  const std::size_t d = impl_->dim;
  std::vector<Rational> sum(d);
  for (std::size_t a = 0; a < idempotents.size(); ++a) {
    if (idempotents[a].size() != d) throw AlgebraError("idempotent has the wrong length");
    for (std::size_t b = 0; b < idempotents.size(); ++b) {
      auto p = multiply(idempotents[a], idempotents[b]);
      if (p != (a == b ? idempotents[a] : std::vector<Rational>(d)))
        throw AlgebraError("idempotents are not orthogonal idempotents");
    }
    for (std::size_t k = 0; k < d; ++k) sum[k] += idempotents[a][k];
  }
  if (sum != impl_->unit) throw AlgebraError("idempotents do not sum to the unit");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->idempotents = std::move(idempotents);
  impl->primitive = primitive;
  return SCAlgebra(std::shared_ptr<const Impl>(std::move(impl)));
}

const std::vector<std::vector<Rational>>& SCAlgebra::idempotents() const { return impl_->idempotents; }
bool SCAlgebra::idempotents_primitive() const { return impl_->primitive; }

// ---------------------------------------------------------------- modules

SCModule::SCModule(SCAlgebra algebra, std::vector<Matrix> actions)
    : algebra_(std::move(algebra)), dim_(0), actions_(std::move(actions)) {
  const std::size_t d = algebra_.dimension();
  if (actions_.size() != d) throw AlgebraError("module needs one action matrix per basis element");
  dim_ = d == 0 ? 0 : actions_.front().rows();
  for (const auto& m : actions_)
    if (m.rows() != dim_ || m.cols() != dim_) throw AlgebraError("action matrices must be square of equal size");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix rhs(dim_, dim_);
      for (const auto& [k, c] : algebra_.product(i, j)) rhs += c * actions_[k];
      if (!(actions_[i] * actions_[j] == rhs)) throw AlgebraError("action is not multiplicative");
    }
  if (!act(algebra_.unit()).is_identity()) throw AlgebraError("unit does not act as the identity");
}

SCModule SCModule::trusted(SCAlgebra algebra, std::size_t dim, std::vector<Matrix> actions) {
  return SCModule(std::move(algebra), dim, std::move(actions));
}

Matrix SCModule::act(const std::vector<Rational>& element) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < element.size(); ++i)
    if (sgn(element[i]) != 0) m += element[i] * actions_[i];
  return m;
}

SCModule sc_regular_module(const SCAlgebra& a) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < a.dimension(); ++i) acts.push_back(a.left_multiplication(unit_vec(a.dimension(), i)));
  return SCModule::trusted(a, a.dimension(), std::move(acts));
}

namespace {

// Induced action on span(basis), basis columns assumed invariant.
std::vector<Matrix> restrict_action(const SCModule& x, const Matrix& basis) {
  std::vector<Matrix> acts;
  for (const auto& m : x.actions()) {
    auto r = solve_right(basis, m * basis);
    if (!r) throw AlgebraError("subspace is not a submodule");
    acts.push_back(std::move(*r));
  }
  return acts;
}

Matrix radical_image(const SCModule& x) {
  const SCAlgebra& a = x.algebra();
  const Matrix& j = a.radical();
  std::vector<Matrix> parts;
  for (std::size_t c = 0; c < j.cols(); ++c) {
    std::vector<Rational> v(a.dimension());
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = j(r, c);
    parts.push_back(x.act(v));
  }
  Matrix all = hcat(parts, x.dimension());
  return all.cols() == 0 ? all : image_basis(all);
}

// Basis (as algebra vectors, columns) of A e.
Matrix left_ideal_basis(const SCAlgebra& a, const std::vector<Rational>& e) {
  Matrix m = a.right_multiplication(e);
  return image_basis(m);
}

}  // namespace

SCModule sc_submodule(const SCModule& x, const Matrix& basis) {
  return SCModule::trusted(x.algebra(), basis.cols(), restrict_action(x, basis));
}

SCModule sc_radical_quotient(const SCAlgebra& a) {
  SCModule reg = sc_regular_module(a);
  const Matrix& j = a.radical();
  const std::size_t d = a.dimension();
  Matrix q = j.cols() == 0 ? Matrix::identity(d) : left_kernel_basis(j);
  Matrix s = *solve_right(q, Matrix::identity(q.rows()));
  std::vector<Matrix> acts;
  for (const auto& m : reg.actions()) acts.push_back(q * m * s);
  return SCModule::trusted(a, q.rows(), std::move(acts));
}

SCCover sc_projective_cover(const SCModule& x) {
  const SCAlgebra& a = x.algebra();
  const std::size_t d = a.dimension();
  const std::size_t n = x.dimension();
  SpanBuilder covered(n);
  Matrix jx = radical_image(x);
  for (std::size_t c = 0; c < jx.cols(); ++c) covered.add(jx.column(c));

  const auto& idem = a.idempotents();
  std::vector<Matrix> ideal_basis;
  std::vector<std::vector<Matrix>> ideal_action;  // [idempotent][basis element]
  for (const auto& e : idem) {
    Matrix b = left_ideal_basis(a, e);
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < d; ++i) acts.push_back(*solve_right(b, a.left_multiplication(unit_vec(d, i)) * b));
    ideal_basis.push_back(std::move(b));
    ideal_action.push_back(std::move(acts));
  }

  SCCover cover{SCModule::trusted(a, 0, {}), Matrix(n, 0), {}, {}, {}};
  for (std::size_t j = 0; j < idem.size() && covered.dimension() < n; ++j) {
    Matrix ex = x.act(idem[j]);
    for (std::size_t c = 0; c < n && covered.dimension() < n; ++c) {
      Matrix v = ex.column(c);
      if (v.is_zero() || covered.contains(v)) continue;
      cover.idempotent_of_generator.push_back(j);
      cover.vectors.push_back(v);
      for (std::size_t i = 0; i < d; ++i) covered.add(x.action(i) * v);
    }
  }
  if (covered.dimension() < n) throw AlgebraError("idempotents do not generate the module");

  std::size_t total = 0;
  for (auto j : cover.idempotent_of_generator) {
    cover.offsets.push_back(total);
    total += ideal_basis[j].cols();
  }
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Matrix> blocks;
    for (auto j : cover.idempotent_of_generator) blocks.push_back(ideal_action[j][i]);
    acts.push_back(blocks.empty() ? Matrix(0, 0) : block_diagonal(blocks));
  }
  Matrix map(n, total);
  for (std::size_t g = 0; g < cover.vectors.size(); ++g) {
    const Matrix& b = ideal_basis[cover.idempotent_of_generator[g]];
    for (std::size_t t = 0; t < b.cols(); ++t) {
      std::vector<Rational> u(d);
      for (std::size_t r = 0; r < d; ++r) u[r] = b(r, t);
      map.set_block(0, cover.offsets[g] + t, x.act(u) * cover.vectors[g]);
    }
  }
  cover.projective = SCModule::trusted(a, total, std::move(acts));
  cover.map = std::move(map);
  return cover;
}

SCModule sc_syzygy(const SCModule& x, int n) {
  SCModule cur = x;
  for (int k = 0; k < n; ++k) {
    SCCover c = sc_projective_cover(cur);
    cur = sc_submodule(c.projective, kernel_basis(c.map));
  }
  return cur;
}

namespace {

struct SCHomSystem {
  Matrix matrix;
  std::vector<Matrix> target_bases;  // per generator: basis of e_j Y
  std::vector<std::size_t> offsets;
  std::size_t unknowns = 0;
};

SCHomSystem sc_hom_system(const SCCover& c, const SCModule& y) {
  const SCAlgebra& a = y.algebra();
  const std::size_t d = a.dimension();
  SCHomSystem s;
  std::vector<Matrix> ideal_basis;
  for (const auto& e : a.idempotents()) ideal_basis.push_back(left_ideal_basis(a, e));
  for (auto j : c.idempotent_of_generator) {
    Matrix ey = y.act(a.idempotents()[j]);
    Matrix b = ey.cols() == 0 ? ey : image_basis(ey);
    s.offsets.push_back(s.unknowns);
    s.unknowns += b.cols();
    s.target_bases.push_back(std::move(b));
  }
  Matrix k = kernel_basis(c.map);
  std::vector<Matrix> rows;
  for (std::size_t r = 0; r < k.cols(); ++r) {
    Matrix row(y.dimension(), s.unknowns);
    for (std::size_t g = 0; g < c.idempotent_of_generator.size(); ++g) {
      const Matrix& ib = ideal_basis[c.idempotent_of_generator[g]];
      std::vector<Rational> u(d);
      for (std::size_t t = 0; t < ib.cols(); ++t) {
        const Rational& coef = k(c.offsets[g] + t, r);
        if (sgn(coef) == 0) continue;
        for (std::size_t q = 0; q < d; ++q) u[q] += coef * ib(q, t);
      }
      row.set_block(0, s.offsets[g], y.act(u) * s.target_bases[g]);
    }
    rows.push_back(std::move(row));
  }
  s.matrix = vcat(rows, s.unknowns);
  return s;
}

}  // namespace

std::vector<Matrix> sc_hom_basis(const SCModule& x, const SCModule& y) {
  const SCAlgebra& a = x.algebra();
  const std::size_t d = a.dimension();
  SCCover c = sc_projective_cover(x);
  SCHomSystem s = sc_hom_system(c, y);
  Matrix sol = kernel_basis(s.matrix);
  Matrix section = *solve_right(c.map, Matrix::identity(x.dimension()));
  std::vector<Matrix> ideal_basis;
  for (const auto& e : a.idempotents()) ideal_basis.push_back(left_ideal_basis(a, e));
  std::vector<Matrix> out;
  for (std::size_t col = 0; col < sol.cols(); ++col) {
    Matrix phi(y.dimension(), c.projective.dimension());
    for (std::size_t g = 0; g < c.idempotent_of_generator.size(); ++g) {
      const Matrix& tb = s.target_bases[g];
      Matrix z(tb.cols(), 1);
      for (std::size_t i = 0; i < tb.cols(); ++i) z(i, 0) = sol(s.offsets[g] + i, col);
      Matrix yg = tb * z;
      const Matrix& ib = ideal_basis[c.idempotent_of_generator[g]];
      for (std::size_t t = 0; t < ib.cols(); ++t) {
        std::vector<Rational> u(d);
        for (std::size_t q = 0; q < d; ++q) u[q] = ib(q, t);
        phi.set_block(0, c.offsets[g] + t, y.act(u) * yg);
      }
    }
    out.push_back(phi * section);
  }
  return out;
}

std::size_t sc_hom_dimension(const SCModule& x, const SCModule& y) {
  SCCover c = sc_projective_cover(x);
  SCHomSystem s = sc_hom_system(c, y);
  return s.unknowns - rank(s.matrix);
}

std::size_t sc_ext_dim(int i, const SCModule& x, const SCModule& y) {
  if (i < 1) throw std::invalid_argument("Ext degree must be at least 1");
  SCModule prev = sc_syzygy(x, i - 1);
  SCCover c = sc_projective_cover(prev);
  SCModule next = sc_submodule(c.projective, kernel_basis(c.map));
  std::size_t cover_hom = 0;
  for (auto j : c.idempotent_of_generator) cover_hom += rank(y.act(y.algebra().idempotents()[j]));
  return sc_hom_dimension(next, y) + sc_hom_dimension(prev, y) - cover_hom;
}

bool sc_is_projective(const SCModule& x) {
  SCCover c = sc_projective_cover(x);
  if (c.projective.dimension() == x.dimension()) return true;
  if (x.algebra().idempotents_primitive()) return false;
  // Split test: id_X ∈ span{π ∘ s : s ∈ Hom(X, P)}.
  SpanBuilder span(x.dimension() * x.dimension());
  for (const auto& s : sc_hom_basis(x, c.projective)) span.add((c.map * s).data());
  return span.contains(Matrix::identity(x.dimension()).data());
}

bool gldim_le(const SCAlgebra& a, int n) {
  if (n < 0) throw std::invalid_argument("dimension bound must be non-negative");
  return sc_is_projective(sc_syzygy(sc_radical_quotient(a), n));
}

bool sc_id_le(const SCModule& t, int n) {
  if (n < 0) throw std::invalid_argument("dimension bound must be non-negative");
  return sc_ext_dim(n + 1, sc_radical_quotient(t.algebra()), t) == 0;
}

SCAlgebra sc_end_algebra(const SCModule& x) {
  auto basis = sc_hom_basis(x, x);
  const std::size_t d = basis.size();
  const std::size_t n = x.dimension();
  Matrix flat(n * n, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t e = 0; e < n * n; ++e) flat(e, k) = basis[k].data()[e];
  // coordinates are read off d independent entries
  std::vector<std::size_t> rows = rref(flat.transpose()).pivots;
  if (rows.size() != d) throw AlgebraError("endomorphism basis is not independent");
  Matrix inv = *solve_right(flat.select_rows(rows), Matrix::identity(d));
  auto coords = [&](const Matrix& p) {
    Matrix v(d, 1);
    for (std::size_t r = 0; r < d; ++r) v(r, 0) = p.data()[rows[r]];
    return inv * v;
  };
  std::vector<SparseVec> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix c = coords(basis[i] * basis[j]);
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(c(k, 0)) != 0) table[i * d + j].emplace_back(static_cast<int>(k), c(k, 0));
    }
  Matrix id = coords(Matrix::identity(n));
  std::vector<Rational> unit(d);
  for (std::size_t k = 0; k < d; ++k) unit[k] = id(k, 0);
  return SCAlgebra(d, std::move(table), std::move(unit));
}

std::size_t sc_distinct_summand_count(const SCModule& x) {
  if (x.dimension() == 0) return 0;
  return sc_end_algebra(x).simple_block_count();
}

}  // namespace fdrep
