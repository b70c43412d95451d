#include "fdrep/module.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace fdrep {

struct Module::Data {
  Algebra algebra;
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrows;
  std::vector<Module> summands;  // empty when none declared
  std::string label;

  mutable std::mutex mu;
  mutable std::vector<std::shared_ptr<const Matrix>> path_actions;
  mutable std::shared_ptr<const Presentation> pres;

  Data(Algebra a, std::vector<std::size_t> d, std::vector<Matrix> ar)
      : algebra(std::move(a)), dims(std::move(d)), arrows(std::move(ar)) {}
  Data(const Data& o)
      : algebra(o.algebra), dims(o.dims), arrows(o.arrows), summands(o.summands), label(o.label) {}
};

namespace {

void check_shapes(const Algebra& a, const std::vector<std::size_t>& dims, const std::vector<Matrix>& arrows) {
  if (dims.size() != static_cast<std::size_t>(a.vertex_count()))
    throw ModuleError("dimension vector has " + std::to_string(dims.size()) + " entries, expected " +
                      std::to_string(a.vertex_count()));
  if (arrows.size() != static_cast<std::size_t>(a.arrow_count()))
    throw ModuleError("expected " + std::to_string(a.arrow_count()) + " arrow matrices, got " +
                      std::to_string(arrows.size()));
  for (int i = 0; i < a.arrow_count(); ++i) {
    std::size_t r = dims[a.arrow_target(i)], c = dims[a.arrow_source(i)];
    if (arrows[i].rows() != r || arrows[i].cols() != c)
      throw ModuleError("arrow " + a.arrow_name(i) + " has shape " + std::to_string(arrows[i].rows()) + "x" +
                        std::to_string(arrows[i].cols()) + ", expected " + std::to_string(r) + "x" +
                        std::to_string(c));
  }
}

void check_same_algebra(const Module& x, const Module& y, const char* what) {
  if (x.algebra() != y.algebra()) throw ModuleError(std::string(what) + ": modules over different algebras");
}

std::string vertex_label(int v) { return std::to_string(v + 1); }

}  // namespace

Module::Module(Algebra algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows)
    : d_(std::make_shared<Data>(std::move(algebra), std::move(dims), std::move(arrows))) {
  const Algebra& a = d_->algebra;
  check_shapes(a, d_->dims, d_->arrows);
  // X_a X_b must equal the action of b·a for every basis path b.
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    int t = a.basis_target(static_cast<int>(b));
    const Matrix& xb = path_action(static_cast<int>(b));
    for (int ar = 0; ar < a.arrow_count(); ++ar) {
      if (a.arrow_source(ar) != t) continue;
      Matrix lhs = d_->arrows[ar] * xb;
      Matrix rhs(lhs.rows(), lhs.cols());
      for (const auto& [c, coef] : a.extend(static_cast<int>(b), ar)) rhs += coef * path_action(c);
      if (!(lhs == rhs))
        throw ModuleError("representation violates a relation: arrow " + a.arrow_name(ar) +
                          " after basis path " + std::to_string(b));
    }
  }
}

Module Module::trusted(Algebra algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows) {
  auto d = std::make_shared<Data>(std::move(algebra), std::move(dims), std::move(arrows));
  return Module(std::shared_ptr<const Data>(std::move(d)));
}

Module Module::zero(const Algebra& algebra) {
  std::vector<std::size_t> dims(algebra.vertex_count(), 0);
  std::vector<Matrix> arrows(algebra.arrow_count());
  return trusted(algebra, std::move(dims), std::move(arrows));
}

const Algebra& Module::algebra() const { return d_->algebra; }
const std::vector<std::size_t>& Module::dims() const { return d_->dims; }
std::size_t Module::total_dimension() const {
  std::size_t s = 0;
  for (auto x : d_->dims) s += x;
  return s;
}
const Matrix& Module::arrow(int a) const { return d_->arrows[a]; }
const std::vector<Matrix>& Module::arrows() const { return d_->arrows; }

const Matrix& Module::path_action(int b) const {
  {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (d_->path_actions.empty()) d_->path_actions.resize(d_->algebra.dimension());
    if (d_->path_actions[b]) return *d_->path_actions[b];
  }
  const Algebra& a = d_->algebra;
  Path p = a.basis_path(b);
  Matrix m = Matrix::identity(d_->dims[p.source]);
  for (int ar : p.arrows) m = d_->arrows[ar] * m;
  auto ptr = std::make_shared<const Matrix>(std::move(m));
  std::lock_guard<std::mutex> lock(d_->mu);
  if (!d_->path_actions[b]) d_->path_actions[b] = std::move(ptr);
  return *d_->path_actions[b];
}

std::vector<Module> Module::summands() const {
  if (d_->summands.empty()) return {*this};
  return d_->summands;
}

bool Module::has_declared_summands() const { return !d_->summands.empty(); }

Module Module::with_label(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  return Module(std::shared_ptr<const Data>(std::move(d)));
}

const std::string& Module::label() const { return d_->label; }

std::string Module::dim_vector_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d_->dims.size(); ++i) os << (i ? "," : "") << d_->dims[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- morphisms

Morphism::Morphism(Module source, Module target, std::vector<Matrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  check_same_algebra(source_, target_, "morphism");
  const Algebra& a = source_.algebra();
  if (maps_.size() != static_cast<std::size_t>(a.vertex_count()))
    throw ModuleError("morphism needs one matrix per vertex");
  for (int v = 0; v < a.vertex_count(); ++v)
    if (maps_[v].rows() != target_.dim(v) || maps_[v].cols() != source_.dim(v))
      throw ModuleError("morphism matrix at vertex " + vertex_label(v) + " has the wrong shape");
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    int i = a.arrow_source(ar), j = a.arrow_target(ar);
    if (!(target_.arrow(ar) * maps_[i] == maps_[j] * source_.arrow(ar)))
      throw ModuleError("morphism does not commute with arrow " + a.arrow_name(ar));
  }
}

Morphism Morphism::trusted(Module source, Module target, std::vector<Matrix> maps) {
  Morphism m(std::move(source), std::move(target), {}, 0);
  m.maps_ = std::move(maps);
  return m;
}

Morphism::Morphism(Module source, Module target, std::vector<Matrix> maps, int)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {}

Morphism Morphism::identity(const Module& x) {
  std::vector<Matrix> maps;
  for (auto d : x.dims()) maps.push_back(Matrix::identity(d));
  return trusted(x, x, std::move(maps));
}

Morphism Morphism::zero(const Module& source, const Module& target) {
  check_same_algebra(source, target, "zero morphism");
  std::vector<Matrix> maps;
  for (int v = 0; v < source.algebra().vertex_count(); ++v) maps.emplace_back(target.dim(v), source.dim(v));
  return trusted(source, target, std::move(maps));
}

bool Morphism::is_zero() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool Morphism::is_mono() const {
  for (const auto& m : maps_)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool Morphism::is_epi() const {
  for (const auto& m : maps_)
    if (rank(m) != m.rows()) return false;
  return true;
}

bool Morphism::is_iso() const {
  for (const auto& m : maps_)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

std::vector<Rational> Morphism::flatten() const {
  std::vector<Rational> out;
  for (const auto& m : maps_) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (source_.dims() != o.source_.dims() || target_.dims() != o.target_.dims())
    throw ModuleError("adding morphisms between different modules");
  for (std::size_t v = 0; v < maps_.size(); ++v) maps_[v] += o.maps_[v];
  return *this;
}

Morphism& Morphism::operator*=(const Rational& s) {
  for (auto& m : maps_) m *= s;
  return *this;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  check_same_algebra(f.source(), g.target(), "compose");
  if (f.target().dims() != g.source().dims()) throw ModuleError("compose: target of f is not the source of g");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(g.at(static_cast<int>(v)) * f.at(static_cast<int>(v)));
  return Morphism::trusted(f.source(), g.target(), std::move(maps));
}

void ShortExactSequence::validate() const {
  if (f.target().dims() != g.source().dims()) throw ModuleError("sequence: middle terms differ");
  if (!f.is_mono()) throw ModuleError("sequence: left map is not injective");
  if (!g.is_epi()) throw ModuleError("sequence: right map is not surjective");
  if (!compose(g, f).is_zero()) throw ModuleError("sequence: composite is not zero");
  if (left().total_dimension() + right().total_dimension() != middle().total_dimension())
    throw ModuleError("sequence: not exact in the middle");
}

bool ShortExactSequence::is_valid() const {
  try {
    validate();
    return true;
  } catch (const ModuleError&) {
    return false;
  }
}

// ---------------------------------------------------------------- free modules

std::size_t FreeModule::position(int w, int gen, int basis) const {
  const auto& idx = index[w];
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k].first == gen && idx[k].second == basis) return k;
  throw ModuleError("free module: no such coordinate");
}

FreeModule free_module(const Algebra& algebra, std::vector<int> generator_vertices) {
  const int n = algebra.vertex_count();
  struct {
    std::vector<int> generators;
    std::vector<std::vector<std::pair<int, int>>> index;
  } f;
  f.generators = std::move(generator_vertices);
  f.index.assign(n, {});
  std::vector<std::map<std::pair<int, int>, std::size_t>> pos(n);
  for (int w = 0; w < n; ++w)
    for (std::size_t g = 0; g < f.generators.size(); ++g)
      for (int b : algebra.basis_between(f.generators[g], w)) {
        pos[w][{static_cast<int>(g), b}] = f.index[w].size();
        f.index[w].emplace_back(static_cast<int>(g), b);
      }
  std::vector<std::size_t> dims(n);
  for (int w = 0; w < n; ++w) dims[w] = f.index[w].size();
  std::vector<Matrix> arrows;
  for (int a = 0; a < algebra.arrow_count(); ++a) {
    int s = algebra.arrow_source(a), t = algebra.arrow_target(a);
    Matrix m(dims[t], dims[s]);
    for (std::size_t k = 0; k < f.index[s].size(); ++k) {
      auto [g, b] = f.index[s][k];
      for (const auto& [c, coef] : algebra.extend(b, a)) m(pos[t].at({g, c}), k) += coef;
    }
    arrows.push_back(std::move(m));
  }
  return FreeModule{std::move(f.generators), std::move(f.index),
                    Module::trusted(algebra, std::move(dims), std::move(arrows))};
}

Morphism map_from_free(const FreeModule& free, const Module& target, const std::vector<Matrix>& images) {
  const Algebra& a = target.algebra();
  if (images.size() != free.generators.size()) throw ModuleError("map_from_free: one image per generator");
  std::vector<Matrix> maps;
  for (int w = 0; w < a.vertex_count(); ++w) {
    Matrix m(target.dim(w), free.index[w].size());
    for (std::size_t k = 0; k < free.index[w].size(); ++k) {
      auto [g, b] = free.index[w][k];
      m.set_block(0, k, target.path_action(b) * images[g]);
    }
    maps.push_back(std::move(m));
  }
  return Morphism::trusted(free.module, target, std::move(maps));
}

namespace {

// Lifts of a basis of X / rad X, grouped per vertex.
std::vector<Matrix> top_generators(const Module& x) {
  auto rad = radical_power_bases(x, 1);
  std::vector<Matrix> gens;
  for (int v = 0; v < x.algebra().vertex_count(); ++v) {
    SpanBuilder span(x.dim(v));
    for (std::size_t c = 0; c < rad[v].cols(); ++c) span.add(rad[v].column(c));
    std::vector<std::size_t> picked;
    for (std::size_t k = 0; k < x.dim(v) && span.dimension() < x.dim(v); ++k) {
      std::vector<Rational> e(x.dim(v));
      e[k] = 1;
      if (span.add(e)) picked.push_back(k);
    }
    Matrix g(x.dim(v), picked.size());
    for (std::size_t j = 0; j < picked.size(); ++j) g(picked[j], j) = 1;
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

const Presentation& presentation(const Module& x) {
  {
    std::lock_guard<std::mutex> lock(x.d_->mu);
    if (x.d_->pres) return *x.d_->pres;
  }
  const Algebra& a = x.algebra();
  const int n = a.vertex_count();
  auto gens = top_generators(x);
  std::vector<int> gen_vertices;
  std::vector<Matrix> images;
  for (int v = 0; v < n; ++v)
    for (std::size_t j = 0; j < gens[v].cols(); ++j) {
      gen_vertices.push_back(v);
      images.push_back(gens[v].column(j));
    }
  FreeModule cover = free_module(a, gen_vertices);
  Morphism epi = map_from_free(cover, x, images);
  std::vector<Matrix> sections;
  for (int v = 0; v < n; ++v) {
    auto s = solve_right(epi.at(v), Matrix::identity(x.dim(v)));
    if (!s) throw ModuleError("presentation: top generators do not generate");
    sections.push_back(std::move(*s));
  }
  SubModule k = kernel(epi);
  auto kgens = top_generators(k.module);
  std::vector<int> rel_vertices;
  std::vector<Matrix> relations;
  for (int v = 0; v < n; ++v)
    for (std::size_t j = 0; j < kgens[v].cols(); ++j) {
      rel_vertices.push_back(v);
      relations.push_back(k.inclusion.at(v) * kgens[v].column(j));
    }
  auto p = std::make_shared<const Presentation>(Presentation{std::move(images), std::move(cover), std::move(epi),
                                                             std::move(sections), k.module, k.inclusion,
                                                             std::move(rel_vertices), std::move(relations)});
  std::lock_guard<std::mutex> lock(x.d_->mu);
  if (!x.d_->pres) x.d_->pres = std::move(p);
  return *x.d_->pres;
}

// ---------------------------------------------------------------- Hom

namespace {

struct HomSystem {
  Matrix matrix;
  std::vector<std::size_t> offsets;  // per generator, into the unknown vector
  std::size_t unknowns = 0;
};

HomSystem hom_system(const Presentation& p, const Module& y) {
  HomSystem s;
  const auto& gens = p.cover.generators;
  for (int g : gens) {
    s.offsets.push_back(s.unknowns);
    s.unknowns += y.dim(g);
  }
  std::size_t rows = 0;
  for (int w : p.relation_vertices) rows += y.dim(w);
  s.matrix = Matrix(rows, s.unknowns);
  std::size_t r0 = 0;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    int w = p.relation_vertices[r];
    const Matrix& rel = p.relations[r];
    for (std::size_t k = 0; k < rel.rows(); ++k) {
      if (sgn(rel(k, 0)) == 0) continue;
      auto [g, b] = p.cover.index[w][k];
      Matrix block = rel(k, 0) * y.path_action(b);
      Matrix cur = s.matrix.block(r0, s.offsets[g], block.rows(), block.cols());
      s.matrix.set_block(r0, s.offsets[g], cur + block);
    }
    r0 += y.dim(w);
  }
  return s;
}

Morphism morphism_from_generators(const Presentation& p, const Module& x, const Module& y,
                                  const std::vector<Rational>& values, const std::vector<std::size_t>& offsets) {
  const Algebra& a = x.algebra();
  std::vector<Matrix> images;
  for (std::size_t g = 0; g < p.cover.generators.size(); ++g) {
    std::size_t d = y.dim(p.cover.generators[g]);
    Matrix col(d, 1);
    for (std::size_t i = 0; i < d; ++i) col(i, 0) = values[offsets[g] + i];
    images.push_back(std::move(col));
  }
  Morphism phi = map_from_free(p.cover, y, images);
  std::vector<Matrix> maps;
  for (int w = 0; w < a.vertex_count(); ++w) maps.push_back(phi.at(w) * p.sections[w]);
  return Morphism::trusted(x, y, std::move(maps));
}

}  // namespace

HomSpace::HomSpace(const Module& x, const Module& y) : x_(x), y_(y) {
  check_same_algebra(x, y, "Hom");
  const Presentation& p = presentation(x);
  HomSystem s = hom_system(p, y);
  NullSpace ns = null_space(s.matrix);
  free_ = ns.free;
  for (std::size_t j = 0; j < ns.basis.cols(); ++j) {
    std::vector<Rational> v(s.unknowns);
    for (std::size_t i = 0; i < s.unknowns; ++i) v[i] = ns.basis(i, j);
    basis_.push_back(morphism_from_generators(p, x, y, v, s.offsets));
  }
}

std::vector<Rational> HomSpace::coordinates(const Morphism& f) const {
  const Presentation& p = presentation(x_);
  std::vector<Rational> y;
  for (std::size_t g = 0; g < p.cover.generators.size(); ++g) {
    Matrix v = f.at(p.cover.generators[g]) * p.generator_vectors[g];
    for (std::size_t i = 0; i < v.rows(); ++i) y.push_back(v(i, 0));
  }
  std::vector<Rational> c;
  for (auto k : free_) c.push_back(y[k]);
  return c;
}

Morphism HomSpace::combination(const std::vector<Rational>& coefficients) const {
  if (coefficients.size() != basis_.size()) throw ModuleError("Hom combination: wrong number of coefficients");
  Morphism f = Morphism::zero(x_, y_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (sgn(coefficients[i]) != 0) f += coefficients[i] * basis_[i];
  return f;
}

std::vector<Morphism> hom_basis(const Module& x, const Module& y) { return HomSpace(x, y).basis(); }

std::size_t hom_dimension(const Module& x, const Module& y) {
  check_same_algebra(x, y, "Hom");
  const Presentation& p = presentation(x);
  HomSystem s = hom_system(p, y);
  return s.unknowns - rank(s.matrix);
}

// ---------------------------------------------------------------- standard modules

Module projective(const Algebra& a, int vertex) {
  if (vertex < 0 || vertex >= a.vertex_count()) throw ModuleError("vertex out of range");
  return free_module(a, {vertex}).module.with_label("P(" + vertex_label(vertex) + ")");
}

Module injective(const Algebra& a, int vertex) {
  return dualize(projective(a.opposite(), vertex)).with_label("I(" + vertex_label(vertex) + ")");
}

Module simple(const Algebra& a, int vertex) {
  if (vertex < 0 || vertex >= a.vertex_count()) throw ModuleError("vertex out of range");
  std::vector<std::size_t> dims(a.vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> arrows;
  for (int ar = 0; ar < a.arrow_count(); ++ar) arrows.emplace_back(dims[a.arrow_target(ar)], dims[a.arrow_source(ar)]);
  return Module::trusted(a, std::move(dims), std::move(arrows)).with_label("S(" + vertex_label(vertex) + ")");
}

Module regular_module(const Algebra& a) {
  std::vector<Module> parts;
  for (int v = 0; v < a.vertex_count(); ++v) parts.push_back(projective(a, v));
  return direct_sum(parts).with_label("Lambda");
}

Module dual_regular_module(const Algebra& a) {
  std::vector<Module> parts;
  for (int v = 0; v < a.vertex_count(); ++v) parts.push_back(injective(a, v));
  return direct_sum(parts).with_label("D(Lambda)");
}

// ---------------------------------------------------------------- direct sums

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw ModuleError("direct sum of no modules");
  const Algebra& a = parts.front().algebra();
  for (const auto& p : parts) check_same_algebra(parts.front(), p, "direct sum");
  std::vector<std::size_t> dims(a.vertex_count(), 0);
  for (const auto& p : parts)
    for (int v = 0; v < a.vertex_count(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix> arrows;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.arrow(ar));
    arrows.push_back(block_diagonal(blocks));
  }
  auto d = std::make_shared<Module::Data>(a, std::move(dims), std::move(arrows));
  std::string label;
  for (const auto& p : parts) {
    for (const auto& s : p.summands())
      if (!s.is_zero()) d->summands.push_back(s);
    if (!p.label().empty()) label += (label.empty() ? "" : " + ") + p.label();
  }
  d->label = label;
  if (d->summands.size() <= 1) d->summands.clear();
  return Module(std::shared_ptr<const Module::Data>(std::move(d)));
}

Module direct_sum(const Module& a, const Module& b) { return direct_sum(std::vector<Module>{a, b}); }

namespace {

std::vector<std::size_t> summand_offsets(const Module& sum, std::size_t k, int v) {
  auto parts = sum.summands();
  if (k >= parts.size()) throw ModuleError("summand index out of range");
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i) off += parts[i].dim(v);
  return {off, parts[k].dim(v)};
}

}  // namespace

Morphism summand_inclusion(const Module& sum, std::size_t k) {
  Module part = sum.summands().at(k);
  std::vector<Matrix> maps;
  for (int v = 0; v < sum.algebra().vertex_count(); ++v) {
    auto o = summand_offsets(sum, k, v);
    Matrix m(sum.dim(v), o[1]);
    for (std::size_t i = 0; i < o[1]; ++i) m(o[0] + i, i) = 1;
    maps.push_back(std::move(m));
  }
  return Morphism::trusted(part, sum, std::move(maps));
}

Morphism summand_projection(const Module& sum, std::size_t k) {
  Module part = sum.summands().at(k);
  std::vector<Matrix> maps;
  for (int v = 0; v < sum.algebra().vertex_count(); ++v) {
    auto o = summand_offsets(sum, k, v);
    Matrix m(o[1], sum.dim(v));
    for (std::size_t i = 0; i < o[1]; ++i) m(i, o[0] + i) = 1;
    maps.push_back(std::move(m));
  }
  return Morphism::trusted(sum, part, std::move(maps));
}

Morphism row_morphism(const std::vector<Morphism>& maps, const Module& source_sum) {
  if (maps.empty()) throw ModuleError("row morphism of no maps");
  const Module& target = maps.front().target();
  std::vector<Matrix> out;
  for (int v = 0; v < target.algebra().vertex_count(); ++v) {
    std::vector<Matrix> parts;
    for (const auto& f : maps) parts.push_back(f.at(v));
    out.push_back(hcat(parts, target.dim(v)));
    if (out.back().cols() != source_sum.dim(v)) throw ModuleError("row morphism: source sum does not match");
  }
  return Morphism::trusted(source_sum, target, std::move(out));
}

Morphism column_morphism(const std::vector<Morphism>& maps, const Module& target_sum) {
  if (maps.empty()) throw ModuleError("column morphism of no maps");
  const Module& source = maps.front().source();
  std::vector<Matrix> out;
  for (int v = 0; v < source.algebra().vertex_count(); ++v) {
    std::vector<Matrix> parts;
    for (const auto& f : maps) parts.push_back(f.at(v));
    out.push_back(vcat(parts, source.dim(v)));
    if (out.back().rows() != target_sum.dim(v)) throw ModuleError("column morphism: target sum does not match");
  }
  return Morphism::trusted(source, target_sum, std::move(out));
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
  Module s = direct_sum(f.source(), g.source());
  Module t = direct_sum(f.target(), g.target());
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(block_diagonal({f.maps()[v], g.maps()[v]}));
  return Morphism::trusted(s, t, std::move(maps));
}

Biproduct biproduct(const Module& a, const Module& b) {
  Module s = direct_sum(a, b);
  const int n = a.algebra().vertex_count();
  std::vector<Matrix> i1, i2, p1, p2;
  for (int v = 0; v < n; ++v) {
    std::size_t da = a.dim(v), db = b.dim(v);
    Matrix x(da + db, da), y(da + db, db);
    for (std::size_t i = 0; i < da; ++i) x(i, i) = 1;
    for (std::size_t i = 0; i < db; ++i) y(da + i, i) = 1;
    p1.push_back(x.transpose());
    p2.push_back(y.transpose());
    i1.push_back(std::move(x));
    i2.push_back(std::move(y));
  }
  return {s, Morphism::trusted(a, s, std::move(i1)), Morphism::trusted(b, s, std::move(i2)),
          Morphism::trusted(s, a, std::move(p1)), Morphism::trusted(s, b, std::move(p2))};
}

Morphism lift_through_mono(const Morphism& h, const Morphism& mono) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < h.maps().size(); ++v) {
    auto k = solve_right(mono.maps()[v], h.maps()[v]);
    if (!k) throw ModuleError("morphism does not factor through the given monomorphism");
    maps.push_back(std::move(*k));
  }
  return Morphism::trusted(h.source(), mono.source(), std::move(maps));
}

Morphism descend_through_epi(const Morphism& h, const Morphism& epi) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < h.maps().size(); ++v) {
    const Matrix& e = epi.maps()[v];
    auto r = solve_right(e, Matrix::identity(e.rows()));
    if (!r) throw ModuleError("descend_through_epi: map is not surjective");
    maps.push_back(h.maps()[v] * *r);
  }
  return Morphism::trusted(epi.target(), h.target(), std::move(maps));
}

// ---------------------------------------------------------------- sub and quotient

SubModule submodule(const Module& x, const std::vector<Matrix>& bases) {
  const Algebra& a = x.algebra();
  std::vector<Matrix> b;
  std::vector<std::size_t> dims;
  for (int v = 0; v < a.vertex_count(); ++v) {
    b.push_back(bases[v].cols() == 0 ? Matrix(x.dim(v), 0) : image_basis(bases[v]));
    dims.push_back(b.back().cols());
  }
  std::vector<Matrix> arrows;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    int i = a.arrow_source(ar), j = a.arrow_target(ar);
    auto m = solve_right(b[j], x.arrow(ar) * b[i]);
    if (!m) throw ModuleError("submodule: subspaces not closed under arrow " + a.arrow_name(ar));
    arrows.push_back(std::move(*m));
  }
  Module sub = Module::trusted(a, std::move(dims), std::move(arrows));
  return {sub, Morphism::trusted(sub, x, std::move(b))};
}

QuotientModule quotient(const Module& x, const std::vector<Matrix>& bases) {
  const Algebra& a = x.algebra();
  std::vector<Matrix> q, s;
  std::vector<std::size_t> dims;
  for (int v = 0; v < a.vertex_count(); ++v) {
    Matrix qv = bases[v].cols() == 0 ? Matrix::identity(x.dim(v)) : left_kernel_basis(bases[v]);
    auto sv = solve_right(qv, Matrix::identity(qv.rows()));
    dims.push_back(qv.rows());
    s.push_back(std::move(*sv));
    q.push_back(std::move(qv));
  }
  std::vector<Matrix> arrows;
  for (int ar = 0; ar < a.arrow_count(); ++ar) {
    int i = a.arrow_source(ar), j = a.arrow_target(ar);
    arrows.push_back(q[j] * x.arrow(ar) * s[i]);
  }
  Module quo = Module::trusted(a, std::move(dims), std::move(arrows));
  return {quo, Morphism::trusted(x, quo, std::move(q))};
}

SubModule kernel(const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& m : f.maps()) bases.push_back(kernel_basis(m));
  return submodule(f.source(), bases);
}

SubModule image(const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& m : f.maps()) bases.push_back(m.cols() == 0 ? Matrix(m.rows(), 0) : image_basis(m));
  return submodule(f.target(), bases);
}

QuotientModule cokernel(const Morphism& f) {
  std::vector<Matrix> bases;
  for (const auto& m : f.maps()) bases.push_back(m.cols() == 0 ? Matrix(m.rows(), 0) : image_basis(m));
  return quotient(f.target(), bases);
}

SubModule generated_submodule(const Module& x, const std::vector<Matrix>& vectors) {
  const Algebra& a = x.algebra();
  const int n = a.vertex_count();
  std::vector<SpanBuilder> spans;
  for (int v = 0; v < n; ++v) spans.emplace_back(x.dim(v));
  std::vector<std::pair<int, Matrix>> queue;
  for (int v = 0; v < n; ++v)
    for (std::size_t c = 0; c < vectors[v].cols(); ++c) {
      Matrix col = vectors[v].column(c);
      if (spans[v].add(col)) queue.emplace_back(v, std::move(col));
    }
  while (!queue.empty()) {
    auto [v, col] = std::move(queue.back());
    queue.pop_back();
    for (int ar = 0; ar < a.arrow_count(); ++ar) {
      if (a.arrow_source(ar) != v) continue;
      int t = a.arrow_target(ar);
      Matrix img = x.arrow(ar) * col;
      if (spans[t].add(img)) queue.emplace_back(t, std::move(img));
    }
  }
  std::vector<Matrix> bases;
  for (int v = 0; v < n; ++v) bases.push_back(spans[v].basis());
  return submodule(x, bases);
}

// ---------------------------------------------------------------- radical layers

std::vector<Matrix> radical_power_bases(const Module& x, int k) {
  const Algebra& a = x.algebra();
  const int n = a.vertex_count();
  std::vector<Matrix> cur;
  for (int v = 0; v < n; ++v) cur.push_back(Matrix::identity(x.dim(v)));
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<Matrix>> parts(n);
    for (int ar = 0; ar < a.arrow_count(); ++ar) {
      int i = a.arrow_source(ar), j = a.arrow_target(ar);
      if (cur[i].cols() > 0) parts[j].push_back(x.arrow(ar) * cur[i]);
    }
    std::vector<Matrix> next;
    for (int v = 0; v < n; ++v) {
      Matrix all = hcat(parts[v], x.dim(v));
      next.push_back(all.cols() == 0 ? all : image_basis(all));
    }
    cur = std::move(next);
  }
  return cur;
}

QuotientModule radical_quotient(const Module& x, int k) { return quotient(x, radical_power_bases(x, k)); }

SubModule socle(const Module& x) {
  const Algebra& a = x.algebra();
  std::vector<Matrix> bases;
  for (int v = 0; v < a.vertex_count(); ++v) {
    std::vector<Matrix> out;
    for (int ar = 0; ar < a.arrow_count(); ++ar)
      if (a.arrow_source(ar) == v) out.push_back(x.arrow(ar));
    Matrix stacked = vcat(out, x.dim(v));
    bases.push_back(kernel_basis(stacked));
  }
  return submodule(x, bases);
}

QuotientModule top(const Module& x) { return radical_quotient(x, 1); }

// ---------------------------------------------------------------- duality

Module dualize(const Module& x) {
  std::string label = x.label().empty() ? "" : "D(" + x.label() + ")";
  if (x.has_declared_summands()) {
    std::vector<Module> parts;
    for (const auto& s : x.summands()) parts.push_back(dualize(s));
    return direct_sum(parts).with_label(label);
  }
  std::vector<Matrix> arrows;
  for (const auto& m : x.arrows()) arrows.push_back(m.transpose());
  return Module::trusted(x.algebra().opposite(), x.dims(), std::move(arrows)).with_label(label);
}

Morphism dualize(const Morphism& f) {
  std::vector<Matrix> maps;
  for (const auto& m : f.maps()) maps.push_back(m.transpose());
  return Morphism::trusted(dualize(f.target()), dualize(f.source()), std::move(maps));
}

// ---------------------------------------------------------------- isomorphism

bool is_isomorphic(const Module& x, const Module& y, const IsoOptions& options) {
  if (x.algebra() != y.algebra() || x.dims() != y.dims()) return false;
  if (x.total_dimension() == 0) return true;
  HomSpace h(x, y);
  const std::size_t d = h.dimension();
  if (d == 0) return false;
  auto try_coeffs = [&](const std::vector<Rational>& c) { return h.combination(c).is_iso(); };
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> dist(-options.coefficient_range, options.coefficient_range);
  for (int s = 0; s < options.samples; ++s) {
    std::vector<Rational> c(d);
    for (auto& v : c) v = dist(rng);
    if (try_coeffs(c)) return true;
  }
  // Exhaustive pass over {-1,0,1}^d, capped.
  std::size_t total = 1;
  for (std::size_t i = 0; i < d && total <= options.fallback_limit; ++i) total *= 3;
  total = std::min(total, options.fallback_limit);
  std::vector<int> digits(d, -1);
  for (std::size_t it = 0; it < total; ++it) {
    std::vector<Rational> c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = digits[i];
    if (try_coeffs(c)) return true;
    for (std::size_t i = 0; i < d; ++i) {
      if (++digits[i] <= 1) break;
      digits[i] = -1;
    }
  }
  return false;
}

std::vector<Module> enumerate_indecomposables_nakayama(const Algebra& a) {
  if (!is_nakayama(a)) throw ModuleError("algebra is not Nakayama");
  std::vector<Module> out;
  for (int v = 0; v < a.vertex_count(); ++v) {
    Module p = projective(a, v);
    int loewy = 0;
    while (true) {
      auto r = radical_power_bases(p, loewy);
      std::size_t dim = 0;
      for (const auto& m : r) dim += m.cols();
      if (dim == 0) break;
      ++loewy;
    }
    for (int j = 1; j <= loewy; ++j) {
      if (j == loewy)
        out.push_back(p);
      else
        out.push_back(radical_quotient(p, j).module.with_label(p.label() + "/rad^" + std::to_string(j)));
    }
  }
  return out;
}

}  // namespace fdrep
