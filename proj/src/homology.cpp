#include "fdrep/homology.hpp"

#include <optional>
#include <stdexcept>

namespace fdrep {

Morphism projective_cover(const Module& x) { return presentation(x).epi; }

Morphism injective_envelope(const Module& x) { return injective_resolution(x, 0).differentials.front(); }

Resolution projective_resolution(const Module& x, int depth) {
  if (depth < 0) throw std::invalid_argument("resolution depth must be non-negative");
  Resolution r{Resolution::Flavor::projective, x, {}, {}, {}, {}};
  Module cur = x;
  std::optional<Morphism> incl;
  for (int j = 0; j <= depth; ++j) {
    const Presentation& p = presentation(cur);
    r.terms.push_back(p.cover.module);
    r.differentials.push_back(incl ? compose(*incl, p.epi) : p.epi);
    r.syzygies.push_back(p.syzygy);
    r.syzygy_maps.push_back(p.inclusion);
    incl = p.inclusion;
    cur = p.syzygy;
  }
  return r;
}

Resolution injective_resolution(const Module& x, int depth) {
  Resolution op = projective_resolution(dualize(x), depth);
  Resolution r{Resolution::Flavor::injective, x, {}, {}, {}, {}};
  for (std::size_t j = 0; j < op.terms.size(); ++j) {
    r.terms.push_back(dualize(op.terms[j]));
    r.syzygies.push_back(dualize(op.syzygies[j]));
    r.syzygy_maps.push_back(Morphism::trusted(r.terms[j], r.syzygies[j], dualize(op.syzygy_maps[j]).maps()));
  }
  for (std::size_t j = 0; j < op.differentials.size(); ++j) {
    Morphism d = dualize(op.differentials[j]);
    const Module& src = j == 0 ? x : r.terms[j - 1];
    r.differentials.push_back(Morphism::trusted(src, r.terms[j], d.maps()));
  }
  return r;
}

Module syzygy(const Module& x, int n) {
  Module cur = x;
  for (int j = 0; j < n; ++j) cur = presentation(cur).syzygy;
  return cur;
}

Module cosyzygy(const Module& x, int n) { return dualize(syzygy(dualize(x), n)); }

std::size_t ext_dim(int i, const Module& x, const Module& y) {
  if (i < 1) throw std::invalid_argument("Ext degree must be at least 1");
  Module prev = syzygy(x, i - 1);
  const Presentation& p = presentation(prev);
  std::size_t cover_hom = 0;
  for (int g : p.cover.generators) cover_hom += y.dim(g);
  return hom_dimension(p.syzygy, y) + hom_dimension(prev, y) - cover_hom;
}

Matrix precompose_matrix(const HomSpace& from, const HomSpace& to, const Morphism& d) {
  Matrix m(to.dimension(), from.dimension());
  for (std::size_t j = 0; j < from.dimension(); ++j) {
    auto c = to.coordinates(compose(from.basis()[j], d));
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

Matrix postcompose_matrix(const HomSpace& from, const HomSpace& to, const Morphism& d) {
  Matrix m(to.dimension(), from.dimension());
  for (std::size_t j = 0; j < from.dimension(); ++j) {
    auto c = to.coordinates(compose(d, from.basis()[j]));
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

std::size_t ext_dim_cochain(int i, const Resolution& res, const Module& y) {
  if (i < 1) throw std::invalid_argument("Ext degree must be at least 1");
  if (!res.is_projective_type()) throw std::invalid_argument("ext_dim_cochain needs a projective-type resolution");
  if (res.terms.size() < static_cast<std::size_t>(i) + 2)
    throw std::invalid_argument("resolution too short for the requested degree");
  HomSpace prev(res.terms[i - 1], y), cur(res.terms[i], y), next(res.terms[i + 1], y);
  std::size_t r_out = rank(precompose_matrix(cur, next, res.differentials[i + 1]));
  std::size_t r_in = rank(precompose_matrix(prev, cur, res.differentials[i]));
  return cur.dimension() - r_out - r_in;
}

std::size_t ext_dim_injective(int i, const Module& x, const Resolution& res) {
  if (i < 1) throw std::invalid_argument("Ext degree must be at least 1");
  if (res.is_projective_type()) throw std::invalid_argument("ext_dim_injective needs an injective-type resolution");
  if (res.terms.size() < static_cast<std::size_t>(i) + 2)
    throw std::invalid_argument("resolution too short for the requested degree");
  HomSpace prev(x, res.terms[i - 1]), cur(x, res.terms[i]), next(x, res.terms[i + 1]);
  std::size_t r_out = rank(postcompose_matrix(cur, next, res.differentials[i + 1]));
  std::size_t r_in = rank(postcompose_matrix(prev, cur, res.differentials[i]));
  return cur.dimension() - r_out - r_in;
}

std::size_t ext_dim_dual(int i, const Module& x, const Module& y) { return ext_dim(i, dualize(y), dualize(x)); }

// ---------------------------------------------------------------- transpose

Module transpose(const Module& x) {
  const Algebra op = x.algebra().opposite();
  if (x.has_declared_summands()) {
    std::vector<Module> parts;
    for (const auto& s : x.summands()) {
      Module t = transpose(s);
      if (!t.is_zero()) parts.push_back(t);
    }
    if (parts.empty()) return Module::zero(op);
    return direct_sum(parts);
  }
  const Presentation& p = presentation(x);
  FreeModule f0 = free_module(op, p.cover.generators);
  FreeModule f1 = free_module(op, p.relation_vertices);
  std::vector<Matrix> images;
  for (std::size_t g = 0; g < p.cover.generators.size(); ++g)
    images.emplace_back(f1.module.dim(p.cover.generators[g]), 1);
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const int w = p.relation_vertices[r];
    const Matrix& rel = p.relations[r];
    for (std::size_t k = 0; k < rel.rows(); ++k) {
      if (sgn(rel(k, 0)) == 0) continue;
      auto [g, b] = p.cover.index[w][k];
      images[g](f1.position(p.cover.generators[g], static_cast<int>(r), b), 0) += rel(k, 0);
    }
  }
  Morphism d = map_from_free(f0, f1.module, images);
  return cokernel(d).module;
}

Module dtr(const Module& x) {
  Module t = dualize(transpose(x));
  return x.label().empty() ? t : t.with_label("DTr(" + x.label() + ")");
}

Module trd(const Module& x) {
  Module t = transpose(dualize(x));
  return x.label().empty() ? t : t.with_label("TrD(" + x.label() + ")");
}

// ---------------------------------------------------------------- add

bool in_add(const Module& x, const Module& m) {
  if (x.algebra() != m.algebra()) throw ModuleError("in_add: modules over different algebras");
  if (x.is_zero()) return true;
  if (m.is_zero()) return false;
  HomSpace to_x(m, x), from_x(x, m);
  if (to_x.dimension() == 0 || from_x.dimension() == 0) return false;
  // id_X = g ∘ s for some s: X -> M^k iff id_X lies in span{h ∘ e}.
  SpanBuilder span(Morphism::identity(x).flatten().size());
  for (const auto& h : to_x.basis())
    for (const auto& e : from_x.basis()) span.add(compose(h, e).flatten());
  return span.contains(Morphism::identity(x).flatten());
}

bool is_projective(const Module& x) { return in_add(x, regular_module(x.algebra())); }
bool is_injective(const Module& x) { return in_add(x, dual_regular_module(x.algebra())); }

bool is_selfinjective(const Algebra& a) {
  Module inj = dual_regular_module(a);
  for (int v = 0; v < a.vertex_count(); ++v)
    if (!in_add(projective(a, v), inj)) return false;
  return true;
}

bool pd_le(const Module& x, int n) {
  if (n < 0) throw std::invalid_argument("dimension bound must be non-negative");
  return is_projective(syzygy(x, n));
}

bool id_le(const Module& x, int n) { return pd_le(dualize(x), n); }

// ---------------------------------------------------------------- Ext^1

Ext1Space::Ext1Space(const Module& c, const Module& a)
    : c_(c), a_(a), cocycles_(presentation(c).syzygy, a) {
  const Presentation& p = presentation(c);
  const std::size_t n = cocycles_.dimension();
  SpanBuilder cob(n);
  for (std::size_t g = 0; g < p.cover.generators.size(); ++g) {
    const std::size_t d = a.dim(p.cover.generators[g]);
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Matrix> images;
      for (std::size_t h = 0; h < p.cover.generators.size(); ++h)
        images.emplace_back(a.dim(p.cover.generators[h]), 1);
      images[g](k, 0) = 1;
      Morphism onto = map_from_free(p.cover, a, images);
      cob.add(cocycles_.coordinates(compose(onto, p.inclusion)));
    }
  }
  Matrix b = cob.basis();
  SpanBuilder all = cob;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> e(n);
    e[k] = 1;
    if (all.add(e)) complement_.push_back(k);
  }
  Matrix w(n, n);
  w.set_block(0, 0, b);
  for (std::size_t j = 0; j < complement_.size(); ++j) w(complement_[j], b.cols() + j) = 1;
  Matrix inv = n == 0 ? Matrix() : *solve_right(w, Matrix::identity(n));
  quotient_rows_ = inv.block(b.cols(), 0, complement_.size(), n);
}

std::vector<Rational> Ext1Space::class_of(const Morphism& phi) const {
  auto c = cocycles_.coordinates(phi);
  std::vector<Rational> out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (sgn(c[j]) != 0) out[i] += quotient_rows_(i, j) * c[j];
  return out;
}

bool Ext1Space::is_coboundary(const Morphism& phi) const {
  for (const auto& x : class_of(phi))
    if (sgn(x) != 0) return false;
  return true;
}

Morphism Ext1Space::representative(std::size_t k) const { return cocycles_.basis().at(complement_.at(k)); }

Morphism Ext1Space::representative(const std::vector<Rational>& coords) const {
  if (coords.size() != dimension()) throw std::invalid_argument("Ext^1 class has the wrong length");
  std::vector<Rational> c(cocycles_.dimension());
  for (std::size_t k = 0; k < coords.size(); ++k) c[complement_[k]] = coords[k];
  return cocycles_.combination(c);
}

Morphism Ext1Space::cocycle_of(const ShortExactSequence& eta) const {
  return Morphism::trusted(presentation(c_).syzygy, a_, ext1_cocycle(eta).maps());
}

ShortExactSequence Ext1Space::extension(const Morphism& phi) const {
  const Presentation& p = presentation(c_);
  Biproduct s = biproduct(a_, p.cover.module);
  Morphism minus_phi = Rational(-1) * phi;
  Morphism into = column_morphism({minus_phi, p.inclusion}, s.sum);
  QuotientModule e = cokernel(into);
  Morphism f = compose(e.projection, s.in1);
  Morphism g = descend_through_epi(compose(p.epi, s.out2), e.projection);
  return {f, g};
}

Morphism ext1_cocycle(const ShortExactSequence& eta) {
  const Module& c = eta.right();
  const Presentation& p = presentation(c);
  std::vector<Matrix> lifts;
  for (std::size_t g = 0; g < p.cover.generators.size(); ++g) {
    const int v = p.cover.generators[g];
    auto y = solve_right(eta.g.at(v), p.generator_vectors[g]);
    if (!y) throw ModuleError("ext1_cocycle: right map is not surjective");
    lifts.push_back(std::move(*y));
  }
  Morphism lambda = map_from_free(p.cover, eta.middle(), lifts);
  return lift_through_mono(compose(lambda, p.inclusion), eta.f);
}

Morphism syzygy_lift(const Morphism& f) {
  const Presentation& pm = presentation(f.source());
  const Presentation& pc = presentation(f.target());
  std::vector<Matrix> lifts;
  for (std::size_t g = 0; g < pm.cover.generators.size(); ++g) {
    const int v = pm.cover.generators[g];
    lifts.push_back(pc.sections[v] * (f.at(v) * pm.generator_vectors[g]));
  }
  Morphism alpha = map_from_free(pm.cover, pc.cover.module, lifts);
  Morphism lifted = lift_through_mono(compose(alpha, pm.inclusion), pc.inclusion);
  return Morphism::trusted(pm.syzygy, pc.syzygy, lifted.maps());
}

std::vector<Rational> yoneda_ext1_pairing(const Ext1Space& space, const Morphism& cocycle, const Morphism& f) {
  Morphism beta = syzygy_lift(f);
  Morphism phi = Morphism::trusted(presentation(f.target()).syzygy, space.target(), cocycle.maps());
  return space.class_of(compose(phi, beta));
}

std::vector<Rational> yoneda_ext1_pairing(const ShortExactSequence& eta, const Morphism& f) {
  Ext1Space space(f.source(), eta.left());
  return yoneda_ext1_pairing(space, ext1_cocycle(eta), f);
}

std::vector<Rational> yoneda_ext1_pushforward(const ShortExactSequence& eta, const Morphism& g) {
  Ext1Space space(eta.right(), g.target());
  Morphism phi = ext1_cocycle(eta);
  return space.class_of(compose(g, phi));
}

ShortExactSequence pullback(const ShortExactSequence& eta, const Morphism& f) {
  Biproduct s = biproduct(eta.middle(), f.source());
  Morphism minus_f = Rational(-1) * f;
  Morphism h = row_morphism({eta.g, minus_f}, s.sum);
  SubModule k = kernel(h);
  Morphism into = column_morphism({eta.f, Morphism::zero(eta.left(), f.source())}, s.sum);
  Morphism fp = lift_through_mono(into, k.inclusion);
  Morphism gp = compose(s.out2, k.inclusion);
  return {fp, gp};
}

ShortExactSequence pushout(const ShortExactSequence& eta, const Morphism& g) {
  Biproduct s = biproduct(g.target(), eta.middle());
  Morphism minus_g = Rational(-1) * g;
  Morphism into = column_morphism({minus_g, eta.f}, s.sum);
  QuotientModule q = cokernel(into);
  Morphism fp = compose(q.projection, s.in1);
  Morphism gp = descend_through_epi(compose(eta.g, s.out2), q.projection);
  return {fp, gp};
}

}  // namespace fdrep
