#include "fdrep/path_algebra.hpp"

#include <algorithm>
#include <set>

namespace fdrep {

void Quiver::validate() const {
  if (vertex_count <= 0) throw PresentationError("quiver needs at least one vertex");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (a.source < 0 || a.source >= vertex_count || a.target < 0 || a.target >= vertex_count)
      throw PresentationError("arrow '" + a.name + "' has an endpoint out of range");
    if (a.name.empty()) throw PresentationError("arrow with empty name");
    if (!names.insert(a.name).second) throw PresentationError("duplicate arrow name '" + a.name + "'");
  }
}

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

Path concat(const Path& p, const Path& q) {
  if (p.target != q.source) throw std::invalid_argument("concat: paths do not compose");
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (int v = 0; v < q.vertex_count; ++v) layer.push_back(Path::trivial(v));
  for (int len = 0; len <= max_len; ++len) {
    std::sort(layer.begin(), layer.end(), [](const Path& a, const Path& b) {
      if (a.arrows != b.arrows) return a.arrows < b.arrows;
      return a.source < b.source;
    });
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& p : layer)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == p.target) {
          Path n = p;
          n.arrows.push_back(static_cast<int>(a));
          n.target = q.arrows[a].target;
          next.push_back(std::move(n));
        }
    layer = std::move(next);
  }
  return out;
}

struct Algebra::Impl {
  AlgebraPresentation presentation;
  int n = 1;
  std::vector<Path> paths;  // all paths of length < n
  std::map<Path, int> path_index;
  std::vector<int> basis;                  // path indices of basis elements
  std::vector<SparseVec> path_coordinates;  // per path index
  std::vector<int> trivial;                 // basis index of e_v
  std::vector<std::vector<std::vector<int>>> between;  // [from][to]
  std::vector<std::vector<SparseVec>> ext_right, ext_left, mult;
  SparseVec empty;

  SparseVec forward_coordinates(const Path& p) const {
    if (static_cast<int>(p.length()) >= n) return {};
    auto it = path_index.find(p);
    if (it == path_index.end()) throw std::invalid_argument("coordinates: not a path of the quiver");
    return path_coordinates[it->second];
  }
};

namespace {

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw PresentationError("empty relation");
  const Path& first = r.terms.front().path;
  for (const auto& t : r.terms) {
    if (t.path.length() < 2) throw PresentationError("inadmissible relation: term of length < 2");
    if (t.path.source != first.source || t.path.target != first.target)
      throw PresentationError("relation terms are not parallel");
    int at = t.path.source;
    for (int a : t.path.arrows) {
      if (a < 0 || a >= static_cast<int>(q.arrows.size())) throw PresentationError("relation uses unknown arrow");
      if (q.arrows[a].source != at) throw PresentationError("relation term is not a path");
      at = q.arrows[a].target;
    }
    if (at != t.path.target) throw PresentationError("relation term endpoints inconsistent");
  }
}

// Elements u·r·v of the two-sided ideal with every term of length <= max_len
// (truncate = false) or with terms of length > max_len dropped (truncate = true).
std::vector<std::map<Path, Rational>> ideal_elements(const Quiver& q, const std::vector<Relation>& rels,
                                                     int max_len, bool truncate) {
  auto all = enumerate_paths(q, max_len);
  std::vector<std::map<Path, Rational>> out;
  for (const auto& r : rels) {
    std::size_t lo = r.terms.front().path.length(), hi = lo;
    for (const auto& t : r.terms) {
      lo = std::min(lo, t.path.length());
      hi = std::max(hi, t.path.length());
    }
    const std::size_t need = truncate ? lo : hi;
    const int s = r.terms.front().path.source, tg = r.terms.front().path.target;
    for (const auto& u : all) {
      if (u.target != s || u.length() + need > static_cast<std::size_t>(max_len)) continue;
      for (const auto& v : all) {
        if (v.source != tg || u.length() + v.length() + need > static_cast<std::size_t>(max_len)) continue;
        std::map<Path, Rational> e;
        for (const auto& t : r.terms) {
          Path p = concat(concat(u, t.path), v);
          if (static_cast<int>(p.length()) > max_len) continue;
          e[p] += t.coefficient;
        }
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

void verify_nilpotency(const AlgebraPresentation& p) {
  const int n = p.nilpotency_bound;
  std::size_t spread = 0;
  for (const auto& r : p.relations) {
    std::size_t lo = r.terms.front().path.length(), hi = lo;
    for (const auto& t : r.terms) {
      lo = std::min(lo, t.path.length());
      hi = std::max(hi, t.path.length());
    }
    spread = std::max(spread, hi - lo);
  }
  std::vector<Path> targets;
  for (auto& path : enumerate_paths(p.quiver, n))
    if (static_cast<int>(path.length()) == n) targets.push_back(path);
  if (targets.empty()) return;
  // Untruncated ideal elements are genuine members of I; success for some
  // degree cap certifies that all length-n paths lie in I.
  const int cap = n + static_cast<int>(2 * spread);
  for (int len = n; len <= cap; ++len) {
    auto all = enumerate_paths(p.quiver, len);
    std::map<Path, std::size_t> col;
    for (std::size_t i = 0; i < all.size(); ++i) col[all[i]] = i;
    SpanBuilder span(all.size());
    for (const auto& e : ideal_elements(p.quiver, p.relations, len, false)) {
      std::vector<Rational> v(all.size());
      for (const auto& [path, c] : e) v[col.at(path)] = c;
      span.add(v);
    }
    bool ok = true;
    for (const auto& t : targets) {
      std::vector<Rational> v(all.size());
      v[col.at(t)] = 1;
      if (!span.contains(v)) {
        ok = false;
        break;
      }
    }
    if (ok) return;
  }
  throw PresentationError("nilpotency bound " + std::to_string(n) +
                          " not verified: some path of that length is not in the ideal");
}

}  // namespace

Algebra::Algebra(const AlgebraPresentation& presentation) {
  auto impl = std::make_shared<Impl>();
  impl->presentation = presentation;
  const Quiver& q = presentation.quiver;
  q.validate();
  if (presentation.nilpotency_bound < 1) throw PresentationError("nilpotency bound must be positive");
  for (const auto& r : presentation.relations) validate_relation(q, r);
  if (!presentation.truncated) verify_nilpotency(presentation);

  const int n = presentation.nilpotency_bound;
  impl->n = n;
  impl->paths = enumerate_paths(q, n - 1);
  for (std::size_t i = 0; i < impl->paths.size(); ++i) impl->path_index[impl->paths[i]] = static_cast<int>(i);
  const std::size_t np = impl->paths.size();

  // Columns in reverse enumeration order so pivots fall on longer paths and
  // the surviving (basis) paths are the shortest possible.
  auto col_of = [np](std::size_t path) { return np - 1 - path; };
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : ideal_elements(q, presentation.relations, n - 1, true)) {
    std::vector<Rational> row(np);
    bool nz = false;
    for (const auto& [path, c] : e) {
      if (sgn(c) == 0) continue;
      row[col_of(impl->path_index.at(path))] = c;
      nz = true;
    }
    if (nz) rows.push_back(std::move(row));
  }
  Matrix gens(rows.size(), np);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < np; ++j) gens(i, j) = rows[i][j];
  auto rr = rref(gens);
  std::vector<int> pivot_row_of_path(np, -1);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    pivot_row_of_path[np - 1 - rr.pivots[i]] = static_cast<int>(i);

  std::vector<int> basis_of_path(np, -1);
  for (std::size_t p = 0; p < np; ++p)
    if (pivot_row_of_path[p] < 0) {
      basis_of_path[p] = static_cast<int>(impl->basis.size());
      impl->basis.push_back(static_cast<int>(p));
    }
  impl->path_coordinates.resize(np);
  for (std::size_t p = 0; p < np; ++p) {
    if (basis_of_path[p] >= 0) {
      impl->path_coordinates[p] = {{basis_of_path[p], Rational(1)}};
      continue;
    }
    const int r = pivot_row_of_path[p];
    SparseVec v;
    for (std::size_t b = 0; b < impl->basis.size(); ++b) {
      const Rational& x = rr.form(r, col_of(impl->basis[b]));
      if (sgn(x) != 0) v.emplace_back(static_cast<int>(b), -x);
    }
    impl->path_coordinates[p] = std::move(v);
  }

  const int nv = q.vertex_count;
  impl->trivial.assign(nv, -1);
  impl->between.assign(nv, std::vector<std::vector<int>>(nv));
  for (std::size_t b = 0; b < impl->basis.size(); ++b) {
    const Path& p = impl->paths[impl->basis[b]];
    if (p.length() == 0) impl->trivial[p.source] = static_cast<int>(b);
    impl->between[p.source][p.target].push_back(static_cast<int>(b));
  }
  for (int v = 0; v < nv; ++v)
    if (impl->trivial[v] < 0) throw PresentationError("trivial path lies in the ideal");

  const std::size_t d = impl->basis.size();
  const std::size_t na = q.arrows.size();
  impl->ext_right.assign(d, std::vector<SparseVec>(na));
  impl->ext_left.assign(d, std::vector<SparseVec>(na));
  impl->mult.assign(d, std::vector<SparseVec>(d));
  for (std::size_t b = 0; b < d; ++b) {
    const Path& p = impl->paths[impl->basis[b]];
    for (std::size_t a = 0; a < na; ++a) {
      Path arrow{q.arrows[a].source, q.arrows[a].target, {static_cast<int>(a)}};
      if (p.target == arrow.source) impl->ext_right[b][a] = impl->forward_coordinates(concat(p, arrow));
      if (arrow.target == p.source) impl->ext_left[b][a] = impl->forward_coordinates(concat(arrow, p));
    }
    for (std::size_t c = 0; c < d; ++c) {
      const Path& pc = impl->paths[impl->basis[c]];
      if (p.target == pc.source) impl->mult[b][c] = impl->forward_coordinates(concat(p, pc));
    }
  }
  impl_ = std::move(impl);
}

const AlgebraPresentation& Algebra::presentation() const { return impl_->presentation; }
int Algebra::vertex_count() const { return impl_->presentation.quiver.vertex_count; }
int Algebra::arrow_count() const { return static_cast<int>(impl_->presentation.quiver.arrows.size()); }
int Algebra::arrow_source(int a) const {
  const auto& ar = impl_->presentation.quiver.arrows.at(a);
  return op_ ? ar.target : ar.source;
}
int Algebra::arrow_target(int a) const {
  const auto& ar = impl_->presentation.quiver.arrows.at(a);
  return op_ ? ar.source : ar.target;
}
const std::string& Algebra::arrow_name(int a) const { return impl_->presentation.quiver.arrows.at(a).name; }
std::size_t Algebra::dimension() const { return impl_->basis.size(); }

int Algebra::basis_source(int b) const {
  const Path& p = impl_->paths[impl_->basis.at(b)];
  return op_ ? p.target : p.source;
}
int Algebra::basis_target(int b) const {
  const Path& p = impl_->paths[impl_->basis.at(b)];
  return op_ ? p.source : p.target;
}
std::size_t Algebra::basis_length(int b) const { return impl_->paths[impl_->basis.at(b)].length(); }

Path Algebra::basis_path(int b) const {
  Path p = impl_->paths[impl_->basis.at(b)];
  if (op_) {
    std::reverse(p.arrows.begin(), p.arrows.end());
    std::swap(p.source, p.target);
  }
  return p;
}

int Algebra::trivial_basis_index(int v) const { return impl_->trivial.at(v); }

const std::vector<int>& Algebra::basis_between(int from, int to) const {
  return op_ ? impl_->between.at(to).at(from) : impl_->between.at(from).at(to);
}

const SparseVec& Algebra::extend(int b, int a) const {
  return op_ ? impl_->ext_left.at(b).at(a) : impl_->ext_right.at(b).at(a);
}

const SparseVec& Algebra::product(int b, int c) const {
  return op_ ? impl_->mult.at(c).at(b) : impl_->mult.at(b).at(c);
}

SparseVec Algebra::coordinates(const Path& p) const {
  if (!op_) return impl_->forward_coordinates(p);
  Path r = p;
  std::reverse(r.arrows.begin(), r.arrows.end());
  std::swap(r.source, r.target);
  return impl_->forward_coordinates(r);
}

std::vector<Rational> Algebra::multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  const std::size_t d = dimension();
  if (x.size() != d || y.size() != d) throw std::invalid_argument("multiply: coordinate length mismatch");
  std::vector<Rational> z(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      for (const auto& [k, c] : product(static_cast<int>(i), static_cast<int>(j))) z[k] += x[i] * y[j] * c;
    }
  }
  return z;
}

AlgebraPresentation truncated_presentation(std::string name, Quiver q, int n) {
  AlgebraPresentation p;
  p.name = std::move(name);
  p.quiver = std::move(q);
  p.nilpotency_bound = n;
  p.truncated = true;
  return p;
}

AlgebraPresentation cyclic_nakayama(int vertices, int n) {
  Quiver q;
  q.vertex_count = vertices;
  for (int i = 0; i < vertices; ++i)
    q.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % vertices});
  return truncated_presentation("cyclic" + std::to_string(vertices) + "_N" + std::to_string(n), q, n);
}

AlgebraPresentation linear_nakayama(int vertices, int n) {
  Quiver q;
  q.vertex_count = vertices;
  for (int i = 0; i + 1 < vertices; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return truncated_presentation("linear" + std::to_string(vertices) + "_N" + std::to_string(n), q, n);
}

bool is_nakayama(const Algebra& a) {
  std::vector<int> in(a.vertex_count()), out(a.vertex_count());
  for (int i = 0; i < a.arrow_count(); ++i) {
    ++out[a.arrow_source(i)];
    ++in[a.arrow_target(i)];
  }
  for (int v = 0; v < a.vertex_count(); ++v)
    if (in[v] > 1 || out[v] > 1) return false;
  return true;
}

}  // namespace fdrep
