#include "fdrep/relhom.hpp"

#include <stdexcept>

namespace fdrep {

std::string SubBifunctor::name() const {
  std::string label = module.label().empty() ? module.dim_vector_string() : module.label();
  return (kind == Kind::covariant ? "FM:" : "F^M:") + label;
}

bool is_F_exact(const ShortExactSequence& eta, const SubBifunctor& f) {
  const Module& m = f.module;
  if (f.kind == SubBifunctor::Kind::covariant) {
    HomSpace to_b(m, eta.middle()), to_c(m, eta.right());
    if (to_c.dimension() == 0) return true;
    return rank(postcompose_matrix(to_b, to_c, eta.g)) == to_c.dimension();
  }
  HomSpace from_b(eta.middle(), m), from_a(eta.left(), m);
  if (from_a.dimension() == 0) return true;
  return rank(precompose_matrix(from_b, from_a, eta.f)) == from_a.dimension();
}

bool is_F_exact_by_count(const ShortExactSequence& eta, const SubBifunctor& f) {
  const Module& m = f.module;
  if (f.kind == SubBifunctor::Kind::covariant)
    return hom_dimension(m, eta.middle()) == hom_dimension(m, eta.left()) + hom_dimension(m, eta.right());
  return hom_dimension(eta.middle(), m) == hom_dimension(eta.left(), m) + hom_dimension(eta.right(), m);
}

namespace {
bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}
}  // namespace

bool is_F_exact_by_pairing(const ShortExactSequence& eta, const SubBifunctor& f) {
  const Module& m = f.module;
  if (f.kind == SubBifunctor::Kind::covariant) {
    Ext1Space space(m, eta.left());
    if (space.dimension() == 0) return true;
    Morphism cocycle = ext1_cocycle(eta);
    for (const auto& h : hom_basis(m, eta.right()))
      if (!all_zero(yoneda_ext1_pairing(space, cocycle, h))) return false;
    return true;
  }
  for (const auto& h : hom_basis(eta.left(), m))
    if (!all_zero(yoneda_ext1_pushforward(eta, h))) return false;
  return true;
}

std::size_t F_subgroup_dim(const Module& c, const Module& a, const SubBifunctor& f) {
  Ext1Space ext(c, a);
  if (ext.dimension() == 0) return 0;
  const Module& m = f.module;
  const auto& cocycles = ext.cocycles().basis();
  // Columns: image of each cocycle basis element under the pairing map.
  std::vector<std::vector<Rational>> columns(cocycles.size());
  if (f.kind == SubBifunctor::Kind::covariant) {
    Ext1Space target(m, a);
    if (target.dimension() == 0) return ext.dimension();
    for (const auto& h : hom_basis(m, c)) {
      Morphism lift = syzygy_lift(h);
      for (std::size_t k = 0; k < cocycles.size(); ++k) {
        auto cls = target.class_of(compose(cocycles[k], lift));
        columns[k].insert(columns[k].end(), cls.begin(), cls.end());
      }
    }
  } else {
    Ext1Space target(c, m);
    if (target.dimension() == 0) return ext.dimension();
    for (const auto& g : hom_basis(a, m))
      for (std::size_t k = 0; k < cocycles.size(); ++k) {
        auto cls = target.class_of(compose(g, cocycles[k]));
        columns[k].insert(columns[k].end(), cls.begin(), cls.end());
      }
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  if (rows == 0) return ext.dimension();
  Matrix l(rows, cocycles.size());
  for (std::size_t k = 0; k < cocycles.size(); ++k)
    for (std::size_t r = 0; r < rows; ++r) l(r, k) = columns[k][r];
  return ext.dimension() - rank(l);
}

Module relative_projective_generator(const SubBifunctor& f) {
  const Module lam = regular_module(f.module.algebra());
  return direct_sum(lam, f.kind == SubBifunctor::Kind::covariant ? f.module : trd(f.module));
}

Module relative_injective_cogenerator(const SubBifunctor& f) {
  const Module dlam = dual_regular_module(f.module.algebra());
  return direct_sum(dlam, f.kind == SubBifunctor::Kind::covariant ? dtr(f.module) : f.module);
}

bool in_F_projectives(const Module& x, const SubBifunctor& f) { return in_add(x, relative_projective_generator(f)); }
bool in_F_injectives(const Module& x, const SubBifunctor& f) { return in_add(x, relative_injective_cogenerator(f)); }

namespace {

Resolution f_projective_resolution(const Module& x, const AddCategory& cat, int depth, bool minimize) {
  if (depth < 0) throw std::invalid_argument("resolution depth must be non-negative");
  Resolution r{Resolution::Flavor::f_projective, x, {}, {}, {}, {}};
  Module cur = x;
  std::optional<Morphism> incl;
  for (int j = 0; j <= depth; ++j) {
    ApproximationResult ap = minimize ? right_approximation(cur, cat, true) : padded_right_approximation(cur, cat, j);
    if (!ap.map.is_epi()) throw std::logic_error("relative projective approximation is not epi");
    r.terms.push_back(ap.map.source());
    r.differentials.push_back(incl ? compose(*incl, ap.map) : ap.map);
    r.syzygies.push_back(ap.complement);
    r.syzygy_maps.push_back(ap.complement_map);
    incl = ap.complement_map;
    cur = ap.complement;
  }
  return r;
}

Resolution f_injective_resolution(const Module& x, const AddCategory& cat, int depth, bool minimize) {
  if (depth < 0) throw std::invalid_argument("resolution depth must be non-negative");
  Resolution r{Resolution::Flavor::f_injective, x, {}, {}, {}, {}};
  Module cur = x;
  std::optional<Morphism> proj;
  for (int j = 0; j <= depth; ++j) {
    ApproximationResult ap = minimize ? left_approximation(cur, cat, true) : padded_left_approximation(cur, cat, j);
    if (!ap.map.is_mono()) throw std::logic_error("relative injective approximation is not mono");
    r.terms.push_back(ap.map.target());
    r.differentials.push_back(proj ? compose(ap.map, *proj) : ap.map);
    r.syzygies.push_back(ap.complement);
    r.syzygy_maps.push_back(ap.complement_map);
    proj = ap.complement_map;
    cur = ap.complement;
  }
  return r;
}

}  // namespace

Resolution F_projective_resolution(const Module& x, const SubBifunctor& f, int depth, bool minimize) {
  return f_projective_resolution(x, AddCategory(relative_projective_generator(f)), depth, minimize);
}

Resolution F_injective_resolution(const Module& x, const SubBifunctor& f, int depth, bool minimize) {
  return f_injective_resolution(x, AddCategory(relative_injective_cogenerator(f)), depth, minimize);
}

std::vector<ShortExactSequence> resolution_steps(const Resolution& r) {
  std::vector<ShortExactSequence> out;
  for (std::size_t j = 0; j < r.terms.size(); ++j) {
    if (r.is_projective_type()) {
      Morphism g = j == 0 ? r.differentials[0] : lift_through_mono(r.differentials[j], r.syzygy_maps[j - 1]);
      out.push_back({r.syzygy_maps[j], g});
    } else {
      Morphism f = j == 0 ? r.differentials[0] : descend_through_epi(r.differentials[j], r.syzygy_maps[j - 1]);
      out.push_back({f, r.syzygy_maps[j]});
    }
  }
  return out;
}

std::vector<std::size_t> ext_F_dims(const Module& c, const Module& a, const SubBifunctor& f, int max_degree) {
  if (max_degree < 1) return {};
  Resolution r = F_projective_resolution(c, f, max_degree - 1, true);
  std::vector<std::size_t> out;
  std::size_t prev_hom = hom_dimension(c, a);
  for (int i = 1; i <= max_degree; ++i) {
    std::size_t k_hom = hom_dimension(r.syzygies[i - 1], a);
    out.push_back(k_hom + prev_hom - hom_dimension(r.terms[i - 1], a));
    prev_hom = k_hom;
  }
  return out;
}

std::size_t ext_F_dim(int i, const Module& c, const Module& a, const SubBifunctor& f) {
  if (i < 1) throw std::invalid_argument("Ext degree must be at least 1");
  return ext_F_dims(c, a, f, i).back();
}

std::size_t ext_F_dim_cochain(int i, const Resolution& f_projective, const Module& a) {
  return ext_dim_cochain(i, f_projective, a);
}

std::size_t ext_F_dim_injective(int i, const Module& c, const Resolution& f_injective) {
  return ext_dim_injective(i, c, f_injective);
}

bool pd_F_le(const Module& x, const SubBifunctor& f, int n, bool minimize) {
  if (n < 0) throw std::invalid_argument("dimension bound must be non-negative");
  AddCategory cat(relative_projective_generator(f));
  Module cur = x;
  for (int j = 0; j < n && !cur.is_zero(); ++j)
    cur = (minimize ? right_approximation(cur, cat, true) : padded_right_approximation(cur, cat, j)).complement;
  return cat.contains(cur);
}

bool id_F_le(const Module& x, const SubBifunctor& f, int n, bool minimize) {
  if (n < 0) throw std::invalid_argument("dimension bound must be non-negative");
  AddCategory cat(relative_injective_cogenerator(f));
  Module cur = x;
  for (int j = 0; j < n && !cur.is_zero(); ++j)
    cur = (minimize ? left_approximation(cur, cat, true) : padded_left_approximation(cur, cat, j)).complement;
  return cat.contains(cur);
}

bool gldim_F_le(const SubBifunctor& f, int n, const std::vector<Module>& witnesses) {
  if (witnesses.empty()) throw std::invalid_argument("gldim_F_le needs at least one witness");
  if (n < 0) throw std::invalid_argument("dimension bound must be non-negative");
  AddCategory cat(relative_projective_generator(f));
  for (const auto& w : witnesses) {
    Module cur = w;
    for (int j = 0; j < n && !cur.is_zero(); ++j) cur = right_approximation(cur, cat, true).complement;
    if (!cat.contains(cur)) return false;
  }
  return true;
}

std::vector<Module> default_witnesses(const Algebra& a) { return enumerate_indecomposables_nakayama(a); }

bool ext_orthogonal(const Module& x, const Module& y, int k) {
  for (int i = 1; i <= k; ++i)
    if (ext_dim(i, x, y) != 0) return false;
  return true;
}

AgreementReport check_absolute_relative_agreement(const Module& m2, const Module& m1, int k,
                                                  const std::vector<Module>& sample) {
  AgreementReport rep;
  const Algebra& a = m1.algebra();
  rep.generator = in_add(regular_module(a), m2);
  rep.cogenerator = in_add(dual_regular_module(a), m1);
  rep.orthogonal = ext_orthogonal(m2, m1, k);
  rep.covariant_agrees = true;
  rep.contravariant_agrees = true;
  if (k <= 0) return rep;

  auto describe = [](const Module& x) { return x.label().empty() ? x.dim_vector_string() : x.label(); };
  std::vector<Module> cs = sample, ds = sample;
  cs.push_back(m2);
  ds.push_back(m1);

  const SubBifunctor lower = SubBifunctor::lower(m2);
  for (const auto& c : cs) {
    auto rel = ext_F_dims(c, m1, lower, k);
    for (int i = 1; i <= k; ++i) {
      std::size_t abs = ext_dim(i, c, m1);
      if (rel[i - 1] != abs) {
        rep.covariant_agrees = false;
        rep.counterexamples.push_back("Ext^" + std::to_string(i) + "(" + describe(c) + ", M1): relative " +
                                      std::to_string(rel[i - 1]) + ", absolute " + std::to_string(abs));
      }
    }
  }
  // Ext_{F^{M1}}^i(M2, D) from an F^{M1}-injective coresolution of D.
  const SubBifunctor upper = SubBifunctor::upper(m1);
  for (const auto& d : ds) {
    Resolution r = F_injective_resolution(d, upper, k + 1, true);
    for (int i = 1; i <= k; ++i) {
      std::size_t rel = ext_F_dim_injective(i, m2, r);
      std::size_t abs = ext_dim(i, m2, d);
      if (rel != abs) {
        rep.contravariant_agrees = false;
        rep.counterexamples.push_back("Ext^" + std::to_string(i) + "(M2, " + describe(d) + "): relative " +
                                      std::to_string(rel) + ", absolute " + std::to_string(abs));
      }
    }
  }
  return rep;
}

}  // namespace fdrep
