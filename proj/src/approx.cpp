#include "fdrep/approx.hpp"

#include <functional>
#include <optional>
#include <random>

#include "fdrep/homology.hpp"

namespace fdrep {

SCAlgebra endomorphism_algebra(const HomSpace& end) {
  const auto& basis = end.basis();
  const std::size_t d = basis.size();
  std::vector<SparseVec> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = end.coordinates(compose(basis[i], basis[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(c[k]) != 0) table[i * d + j].emplace_back(static_cast<int>(k), c[k]);
    }
  return SCAlgebra(d, std::move(table), end.coordinates(Morphism::identity(end.source())));
}

std::vector<Morphism> endomorphism_radical(const HomSpace& end) {
  if (end.dimension() == 0) return {};
  const Matrix r = endomorphism_algebra(end).radical();
  std::vector<Morphism> out;
  for (std::size_t c = 0; c < r.cols(); ++c) out.push_back(end.combination(r.column(c).data()));
  return out;
}

namespace {

Morphism power(const Morphism& v, std::size_t n) {
  std::vector<Matrix> maps;
  for (const auto& m : v.maps()) {
    Matrix p = Matrix::identity(m.rows());
    for (std::size_t k = 0; k < n; ++k) p = p * m;
    maps.push_back(std::move(p));
  }
  return Morphism::trusted(v.source(), v.target(), std::move(maps));
}

std::size_t total_rank(const Morphism& f) {
  std::size_t r = 0;
  for (const auto& m : f.maps()) r += rank(m);
  return r;
}

// S = ker v^n ⊕ im v^n for an endomorphism that is neither nilpotent nor invertible.
std::pair<AddPiece, AddPiece> fitting_split(const Morphism& vn) {
  const Module& s = vn.source();
  SubModule k = kernel(vn);
  SubModule i = image(vn);
  std::vector<Matrix> pk, pi;
  for (int v = 0; v < s.algebra().vertex_count(); ++v) {
    const Matrix& kb = k.inclusion.at(v);
    const Matrix& ib = i.inclusion.at(v);
    Matrix inv = *solve_right(hcat(kb, ib), Matrix::identity(s.dim(v)));
    pk.push_back(inv.block(0, 0, kb.cols(), s.dim(v)));
    pi.push_back(inv.block(kb.cols(), 0, ib.cols(), s.dim(v)));
  }
  return {AddPiece{k.module, k.inclusion, Morphism::trusted(s, k.module, std::move(pk))},
          AddPiece{i.module, i.inclusion, Morphism::trusted(s, i.module, std::move(pi))}};
}

// A splitting endomorphism power, if one is found. Candidates are basis
// elements and small random combinations, shifted by small integers.
std::optional<Morphism> find_splitting(const Module& s, const HomSpace& end, const std::vector<Morphism>& rad) {
  const std::size_t n = s.total_dimension();
  const std::size_t d = end.dimension();
  if (d - rad.size() <= 1) return std::nullopt;  // local
  std::vector<std::vector<Rational>> candidates;
  for (std::size_t b = 0; b < d; ++b) {
    std::vector<Rational> c(d);
    c[b] = 1;
    candidates.push_back(c);
  }
  std::mt19937_64 rng(d * 7919 + n);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int t = 0; t < 32; ++t) {
    std::vector<Rational> c(d);
    for (auto& x : c) x = dist(rng);
    candidates.push_back(c);
  }
  const Morphism id = Morphism::identity(s);
  for (const auto& c : candidates) {
    Morphism x = end.combination(c);
    for (int lambda = -4; lambda <= 4; ++lambda) {
      Morphism v = x + Rational(-lambda) * id;
      Morphism vn = power(v, n);
      std::size_t r = total_rank(vn);
      if (r > 0 && r < n) return vn;
    }
  }
  return std::nullopt;
}

void refine(const AddPiece& piece, std::vector<AddPiece>& out) {
  const Module& s = piece.module;
  if (s.is_zero()) return;
  HomSpace end(s, s);
  auto rad = endomorphism_radical(end);
  auto vn = find_splitting(s, end, rad);
  if (!vn) {
    out.push_back(piece);
    return;
  }
  auto [a, b] = fitting_split(*vn);
  for (AddPiece* p : {&a, &b}) {
    p->inclusion = compose(piece.inclusion, p->inclusion);
    p->projection = compose(p->projection, piece.projection);
    refine(*p, out);
  }
}

}  // namespace

struct AddCategory::Impl {
  explicit Impl(Module m) : generator(std::move(m)) {}
  Module generator;
  std::vector<AddPiece> pieces;
  std::vector<std::size_t> piece_class;
  std::vector<Module> classes;
  std::vector<std::vector<std::vector<Morphism>>> radical;  // [from][to]
};

AddCategory::AddCategory(const Module& m) : impl_(std::make_shared<Impl>(m)) {
  Impl& im = *impl_;
  if (!m.is_zero()) {
    auto parts = m.summands();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      AddPiece p = parts.size() == 1
                       ? AddPiece{m, Morphism::identity(m), Morphism::identity(m)}
                       : AddPiece{parts[k], summand_inclusion(m, k), summand_projection(m, k)};
      refine(p, im.pieces);
    }
  }
  for (const auto& p : im.pieces) {
    std::size_t cls = im.classes.size();
    for (std::size_t c = 0; c < im.classes.size(); ++c)
      if (is_isomorphic(p.module, im.classes[c])) {
        cls = c;
        break;
      }
    if (cls == im.classes.size()) im.classes.push_back(p.module);
    im.piece_class.push_back(cls);
  }
  const std::size_t r = im.classes.size();
  im.radical.assign(r, std::vector<std::vector<Morphism>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      im.radical[i][j] = i == j ? endomorphism_radical(HomSpace(im.classes[i], im.classes[i]))
                                : hom_basis(im.classes[i], im.classes[j]);
}

const Module& AddCategory::generator() const { return impl_->generator; }
const std::vector<AddPiece>& AddCategory::pieces() const { return impl_->pieces; }
const std::vector<std::size_t>& AddCategory::piece_class() const { return impl_->piece_class; }
const std::vector<Module>& AddCategory::classes() const { return impl_->classes; }
const std::vector<Morphism>& AddCategory::radical_maps(std::size_t from, std::size_t to) const {
  return impl_->radical[from][to];
}
bool AddCategory::contains(const Module& x) const { return in_add(x, impl_->generator); }

// ---------------------------------------------------------------- approximations

namespace {

ApproximationResult finish_right(Morphism g, bool minimal, std::vector<std::size_t> classes) {
  SubModule k = kernel(g);
  return ApproximationResult{std::move(g), minimal, k.module, k.inclusion, std::move(classes)};
}

ApproximationResult finish_left(Morphism g, bool minimal, std::vector<std::size_t> classes) {
  QuotientModule c = cokernel(g);
  return ApproximationResult{std::move(g), minimal, c.module, c.projection, std::move(classes)};
}

}  // namespace

ApproximationResult right_approximation(const Module& x, const AddCategory& cat, bool minimize) {
  const Algebra& a = x.algebra();
  if (!minimize) {
    const Module& m = cat.generator();
    auto basis = hom_basis(m, x);
    if (basis.empty()) return finish_right(Morphism::zero(Module::zero(a), x), false, {});
    Module src = direct_sum(std::vector<Module>(basis.size(), m));
    return finish_right(row_morphism(basis, src), false, {});
  }
  const auto& classes = cat.classes();
  std::vector<HomSpace> to_x;
  for (const auto& c : classes) to_x.emplace_back(c, x);
  std::vector<Module> parts;
  std::vector<Morphism> maps;
  std::vector<std::size_t> part_class;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const HomSpace& h = to_x[j];
    SpanBuilder covered(h.dimension());
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (const auto& f : to_x[i].basis())
        for (const auto& r : cat.radical_maps(j, i)) covered.add(h.coordinates(compose(f, r)));
    auto end = hom_basis(classes[j], classes[j]);
    for (const auto& f : h.basis()) {
      if (covered.dimension() == h.dimension()) break;
      if (covered.contains(h.coordinates(f))) continue;
      parts.push_back(classes[j]);
      maps.push_back(f);
      part_class.push_back(j);
      for (const auto& e : end) covered.add(h.coordinates(compose(f, e)));
    }
  }
  if (parts.empty()) return finish_right(Morphism::zero(Module::zero(a), x), true, {});
  Module src = direct_sum(parts);
  return finish_right(row_morphism(maps, src), true, std::move(part_class));
}

ApproximationResult right_approximation(const Module& x, const Module& m, bool minimize) {
  return right_approximation(x, AddCategory(m), minimize);
}

ApproximationResult left_approximation(const Module& x, const AddCategory& cat, bool minimize) {
  const Algebra& a = x.algebra();
  if (!minimize) {
    const Module& m = cat.generator();
    auto basis = hom_basis(x, m);
    if (basis.empty()) return finish_left(Morphism::zero(x, Module::zero(a)), false, {});
    Module tgt = direct_sum(std::vector<Module>(basis.size(), m));
    return finish_left(column_morphism(basis, tgt), false, {});
  }
  const auto& classes = cat.classes();
  std::vector<HomSpace> from_x;
  for (const auto& c : classes) from_x.emplace_back(x, c);
  std::vector<Module> parts;
  std::vector<Morphism> maps;
  std::vector<std::size_t> part_class;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const HomSpace& h = from_x[j];
    SpanBuilder covered(h.dimension());
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (const auto& f : from_x[i].basis())
        for (const auto& r : cat.radical_maps(i, j)) covered.add(h.coordinates(compose(r, f)));
    auto end = hom_basis(classes[j], classes[j]);
    for (const auto& f : h.basis()) {
      if (covered.dimension() == h.dimension()) break;
      if (covered.contains(h.coordinates(f))) continue;
      parts.push_back(classes[j]);
      maps.push_back(f);
      part_class.push_back(j);
      for (const auto& e : end) covered.add(h.coordinates(compose(e, f)));
    }
  }
  if (parts.empty()) return finish_left(Morphism::zero(x, Module::zero(a)), true, {});
  Module tgt = direct_sum(parts);
  return finish_left(column_morphism(maps, tgt), true, std::move(part_class));
}

ApproximationResult left_approximation(const Module& x, const Module& m, bool minimize) {
  return left_approximation(x, AddCategory(m), minimize);
}

namespace {

Morphism random_map(const Module& from, const Module& to, std::mt19937_64& rng) {
  HomSpace h(from, to);
  if (h.dimension() == 0) return Morphism::zero(from, to);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<Rational> c(h.dimension());
  for (auto& v : c) v = coef(rng);
  return h.combination(c);
}

}  // namespace

ApproximationResult padded_right_approximation(const Module& x, const AddCategory& cat, std::uint64_t seed) {
  ApproximationResult mini = right_approximation(x, cat, true);
  if (cat.classes().empty()) return mini;
  std::mt19937_64 rng(seed);
  std::vector<Module> parts = {mini.map.source()};
  std::vector<Morphism> maps = {mini.map};
  for (const auto& c : cat.classes()) {
    parts.push_back(c);
    maps.push_back(random_map(c, x, rng));
  }
  Module src = direct_sum(parts);
  return finish_right(row_morphism(maps, src), false, {});
}

ApproximationResult padded_left_approximation(const Module& x, const AddCategory& cat, std::uint64_t seed) {
  ApproximationResult mini = left_approximation(x, cat, true);
  if (cat.classes().empty()) return mini;
  std::mt19937_64 rng(seed);
  std::vector<Module> parts = {mini.map.target()};
  std::vector<Morphism> maps = {mini.map};
  for (const auto& c : cat.classes()) {
    parts.push_back(c);
    maps.push_back(random_map(x, c, rng));
  }
  Module tgt = direct_sum(parts);
  return finish_left(column_morphism(maps, tgt), false, {});
}

bool is_right_approximation(const Morphism& g, const Module& m) {
  HomSpace to_src(m, g.source()), to_x(m, g.target());
  if (to_x.dimension() == 0) return true;
  return rank(postcompose_matrix(to_src, to_x, g)) == to_x.dimension();
}

bool is_left_approximation(const Morphism& g, const Module& m) {
  HomSpace from_tgt(g.target(), m), from_x(g.source(), m);
  if (from_x.dimension() == 0) return true;
  return rank(precompose_matrix(from_tgt, from_x, g)) == from_x.dimension();
}

namespace {

bool annihilator_in_radical(const Module& a, const std::function<Morphism(const Morphism&)>& apply) {
  if (a.is_zero()) return true;
  HomSpace end(a, a);
  std::vector<Matrix> cols;
  std::size_t len = 0;
  for (const auto& v : end.basis()) {
    auto f = apply(v).flatten();
    len = f.size();
    cols.push_back(Matrix::column_vector(f));
  }
  Matrix w = kernel_basis(hcat(cols, len));
  if (w.cols() == 0) return true;
  const Matrix rad = endomorphism_algebra(end).radical();
  return in_column_span(rad, w);
}

}  // namespace

bool is_right_minimal(const Morphism& g) {
  return annihilator_in_radical(g.source(), [&](const Morphism& v) { return compose(g, v); });
}

bool is_left_minimal(const Morphism& g) {
  return annihilator_in_radical(g.target(), [&](const Morphism& v) { return compose(v, g); });
}

}  // namespace fdrep
