#include "fdrep/endo.hpp"

#include <stdexcept>

#include "fdrep/homology.hpp"

namespace fdrep {

EndAlgebra end_algebra(const Module& m) {
  HomSpace space(m, m);
  SCAlgebra alg = endomorphism_algebra(space);
  if (space.dimension() == 0) return {space, alg};
  AddCategory cat(m);
  std::vector<std::vector<Rational>> idem;
  for (const auto& piece : cat.pieces()) idem.push_back(space.coordinates(compose(piece.inclusion, piece.projection)));
  return {space, alg.with_idempotents(std::move(idem), true)};
}

namespace {

// Action matrices of the basis of End on Hom(M2, M1), one column per Hom basis element.
template <class Act>
SCModule hom_bimodule_side(const HomSpace& h, const EndAlgebra& end, const SCAlgebra& alg, Act act) {
  const std::size_t n = h.dimension();
  std::vector<Matrix> actions;
  for (const auto& e : end.space.basis()) {
    Matrix a(n, n);
    for (std::size_t b = 0; b < n; ++b) {
      auto c = h.coordinates(act(e, h.basis()[b]));
      for (std::size_t r = 0; r < n; ++r) a(r, b) = c[r];
    }
    actions.push_back(std::move(a));
  }
  return SCModule::trusted(alg, n, std::move(actions));
}

}  // namespace

SCModule hom_over_target_end(const Module& m2, const Module& m1, const EndAlgebra& end_m1) {
  HomSpace h(m2, m1);
  return hom_bimodule_side(h, end_m1, end_m1.algebra,
                           [](const Morphism& g, const Morphism& f) { return compose(g, f); });
}

SCModule hom_over_source_end_op(const Module& m2, const Module& m1, const EndAlgebra& end_m2) {
  HomSpace h(m2, m1);
  return hom_bimodule_side(h, end_m2, end_m2.algebra.opposite(),
                           [](const Morphism& d, const Morphism& f) { return compose(f, d); });
}

bool is_generator_cogenerator(const Module& m) {
  const Algebra& a = m.algebra();
  for (int v = 0; v < a.vertex_count(); ++v)
    if (!in_add(projective(a, v), m) || !in_add(injective(a, v), m)) return false;
  return true;
}

bool is_l_selforthogonal(const Module& m, int l) { return ext_orthogonal(m, m, l); }

MaxOrthoReport check_maximal_orthogonal(const Module& m, int l, MaxOrthoMode mode,
                                        const std::vector<Module>& witnesses) {
  if (l < 0) throw std::invalid_argument("orthogonality degree must be non-negative");
  MaxOrthoReport rep;
  rep.mode = mode;
  if (mode == MaxOrthoMode::corollary) {
    rep.generator_cogenerator = is_generator_cogenerator(m);
    rep.selforthogonal = is_l_selforthogonal(m, l);
    rep.gldim_bound = gldim_le(end_algebra(m).algebra, l + 2);
    rep.holds = rep.generator_cogenerator && rep.selforthogonal && rep.gldim_bound;
    return rep;
  }
  std::vector<Module> list = witnesses;
  if (list.empty()) {
    if (!is_nakayama(m.algebra()))
      throw std::invalid_argument("enumeration mode needs a Nakayama algebra or an explicit witness list");
    list = enumerate_indecomposables_nakayama(m.algebra());
  }
  for (const auto& x : list) {
    const bool in = in_add(x, m);
    const bool right = ext_orthogonal(m, x, l);  // x ∈ M^{⊥_l}
    const bool left = ext_orthogonal(x, m, l);   // x ∈ ^{⊥_l}M
    ++rep.witnesses_checked;
    if (in != right || in != left) {
      std::string name = x.label().empty() ? x.dim_vector_string() : x.label();
      rep.violations.push_back(name + ": in add M = " + (in ? "yes" : "no") + ", in M^perp = " +
                               (right ? "yes" : "no") + ", in ^perp M = " + (left ? "yes" : "no"));
    }
  }
  rep.holds = rep.violations.empty();
  return rep;
}

namespace {

bool all_zero(const std::vector<std::size_t>& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

// Condition (3) of (co)tilting along a resolution whose terms should lie in add T.
void check_witness(RelativeTiltingReport& rep, const Resolution& r, const Module& t, const SubBifunctor& f,
                   int bound) {
  rep.resolution_condition = false;
  auto steps = resolution_steps(r);
  for (int j = 0; j < bound; ++j) {
    if (!in_add(r.terms[j], t)) {
      rep.failure = "term " + std::to_string(j) + " is not in add T";
      return;
    }
    if (!is_F_exact(steps[j], f)) {
      rep.failure = "step " + std::to_string(j) + " is not " + f.name() + "-exact";
      return;
    }
  }
  if (!in_add(r.syzygies[bound - 1], t)) {
    rep.failure = "syzygy " + std::to_string(bound - 1) + " is not in add T";
    return;
  }
  rep.resolution_condition = true;
}

}  // namespace

RelativeTiltingReport check_F_cotilting(const Module& t, const SubBifunctor& f, int bound) {
  if (bound < 0) throw std::invalid_argument("dimension bound must be non-negative");
  RelativeTiltingReport rep;
  rep.ext_dims = ext_F_dims(t, t, f, bound);
  rep.selforthogonal = all_zero(rep.ext_dims);
  rep.dimension_bound = id_F_le(t, f, bound);
  const Module c = relative_injective_cogenerator(f);
  if (bound == 0) {
    rep.resolution_condition = in_add(c, t);
    if (!rep.resolution_condition) rep.failure = "relative injectives are not in add T";
    return rep;
  }
  try {
    Resolution r = F_projective_resolution(c, SubBifunctor::lower(t), bound - 1, true);
    check_witness(rep, r, t, f, bound);
    rep.witness = std::move(r);
  } catch (const std::logic_error&) {
    rep.failure = "add T does not cover the relative injectives";
  }
  return rep;
}

RelativeTiltingReport check_F_tilting(const Module& t, const SubBifunctor& f, int bound) {
  if (bound < 0) throw std::invalid_argument("dimension bound must be non-negative");
  RelativeTiltingReport rep;
  rep.ext_dims = ext_F_dims(t, t, f, bound);
  rep.selforthogonal = all_zero(rep.ext_dims);
  rep.dimension_bound = pd_F_le(t, f, bound);
  const Module p = relative_projective_generator(f);
  if (bound == 0) {
    rep.resolution_condition = in_add(p, t);
    if (!rep.resolution_condition) rep.failure = "relative projectives are not in add T";
    return rep;
  }
  try {
    Resolution r = F_injective_resolution(p, SubBifunctor::upper(t), bound - 1, true);
    check_witness(rep, r, t, f, bound);
    rep.witness = std::move(r);
  } catch (const std::logic_error&) {
    rep.failure = "add T does not cogenerate the relative projectives";
  }
  return rep;
}

SCCotiltingReport check_sc_cotilting(const SCModule& t, int bound) {
  if (bound < 0) throw std::invalid_argument("dimension bound must be non-negative");
  SCCotiltingReport rep;
  for (int i = 1; i <= bound; ++i) rep.ext_dims.push_back(sc_ext_dim(i, t, t));
  rep.selforthogonal = all_zero(rep.ext_dims);
  rep.injective_dimension = sc_id_le(t, bound);
  rep.summands = sc_distinct_summand_count(t);
  rep.simples = t.algebra().simple_block_count();
  rep.summand_count = rep.summands == rep.simples;
  return rep;
}

std::vector<std::string> TheoremReport::failed_hypotheses() const {
  std::vector<std::string> out;
  if (!m1_generator_cogenerator) out.push_back("M1 is not a generator-cogenerator");
  if (!m2_generator_cogenerator) out.push_back("M2 is not a generator-cogenerator");
  if (!m1_gldim_bound) out.push_back("gldim End(M1) > l+2");
  if (!m2_gldim_bound) out.push_back("gldim End(M2) > l+2");
  return out;
}

TheoremReport verify_theorem(const Module& m1, const Module& m2, int l) {
  if (l < 1) throw std::invalid_argument("the degree l must be positive");
  TheoremReport rep;
  rep.l = l;
  rep.m1_generator_cogenerator = is_generator_cogenerator(m1);
  rep.m2_generator_cogenerator = is_generator_cogenerator(m2);
  EndAlgebra e1 = end_algebra(m1);
  EndAlgebra e2 = end_algebra(m2);
  rep.m1_gldim_bound = gldim_le(e1.algebra, l + 2);
  rep.m2_gldim_bound = gldim_le(e2.algebra, l + 2);
  if (!rep.hypotheses_hold()) return rep;

  const SubBifunctor upper = SubBifunctor::upper(m1);
  const SubBifunctor lower = SubBifunctor::lower(m2);

  rep.ext_upper = ext_F_dims(m2, m2, upper, l);
  rep.ext_lower = ext_F_dims(m1, m1, lower, l);
  rep.a = all_zero(rep.ext_upper) && all_zero(rep.ext_lower);

  rep.b_detail = check_F_cotilting(m2, upper, l);
  rep.b = rep.b_detail->holds();

  rep.c_detail = check_F_cotilting(m1, lower, l);
  rep.c = rep.c_detail->holds();

  rep.d_over_end_m1 = check_sc_cotilting(hom_over_target_end(m2, m1, e1), l + 2);
  rep.d_over_end_m2_op = check_sc_cotilting(hom_over_source_end_op(m2, m1, e2), l + 2);
  rep.d = rep.d_over_end_m1->holds() && rep.d_over_end_m2_op->holds();
  return rep;
}

IyamaReport check_iyama_orthogonality(const Module& m1, const Module& m2, int k, int l) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  IyamaReport rep;
  rep.preconditions = k <= l && l <= 2 * k + 1 &&
                      check_maximal_orthogonal(m1, l, MaxOrthoMode::corollary).holds &&
                      check_maximal_orthogonal(m2, l, MaxOrthoMode::corollary).holds;
  for (int i = 1; i <= k; ++i) rep.absolute_dims.push_back(ext_dim(i, m2, m1));
  rep.hypothesis = all_zero(rep.absolute_dims);
  rep.lower_vanishes = all_zero(ext_F_dims(m1, m1, SubBifunctor::lower(m2), l));
  rep.upper_vanishes = all_zero(ext_F_dims(m2, m2, SubBifunctor::upper(m1), l));
  return rep;
}

ExchangeResult search_exchange_sequence(const Module& n, const Module& x1, const Module& x2, int max_len,
                                        std::uint64_t seed) {
  if (!is_generator_cogenerator(n)) throw std::invalid_argument("N must be a generator-cogenerator");
  if (in_add(x1, n) || in_add(x2, n)) throw std::invalid_argument("X1 and X2 must not lie in add N");
  IsoOptions iso;
  iso.seed = seed;
  ExchangeResult res;
  if (is_isomorphic(x1, x2, iso)) {
    res.found = res.trivial = true;
    res.exact = res.left_minimal = res.right_minimal = res.upper_exact = res.lower_exact = true;
    res.reason = "X1 and X2 are isomorphic";
    return res;
  }
  AddCategory cat(n);
  Module cur = x2;
  bool reached = false;
  for (int j = 0; j <= max_len; ++j) {
    ApproximationResult ap = left_approximation(cur, cat, true);
    res.terms.push_back(ap.map.target());
    res.maps.push_back(res.steps.empty() ? ap.map : compose(ap.map, res.steps.back().g));
    res.steps.push_back({ap.map, ap.complement_map});
    cur = ap.complement;
    if (cur.is_zero()) break;
    if (is_isomorphic(cur, x1, iso)) {
      reached = true;
      break;
    }
  }
  if (!reached) {
    res.reason = "no cokernel isomorphic to X1 within " + std::to_string(max_len + 1) + " terms";
    return res;
  }
  res.maps.push_back(res.steps.back().g);
  res.found = true;

  const SubBifunctor upper = SubBifunctor::upper(direct_sum(n, x1));
  const SubBifunctor lower = SubBifunctor::lower(direct_sum(n, x2));
  res.exact = res.left_minimal = res.right_minimal = res.upper_exact = res.lower_exact = true;
  for (const auto& s : res.steps) {
    res.exact = res.exact && s.is_valid();
    res.left_minimal = res.left_minimal && is_left_approximation(s.f, n) && is_left_minimal(s.f);
    res.right_minimal = res.right_minimal && is_right_approximation(s.g, n) && is_right_minimal(s.g);
    res.upper_exact = res.upper_exact && is_F_exact(s, upper);
    res.lower_exact = res.lower_exact && is_F_exact(s, lower);
  }
  if (!res.conditions_hold()) res.reason = "candidate sequence fails a defining condition";
  return res;
}

}  // namespace fdrep
