#pragma once

#include <string>
#include <vector>

#include "fdrep/approx.hpp"
#include "fdrep/homology.hpp"

namespace fdrep {

/// F_M (sequences on which Hom(M, -) stays exact) or F^M (same for Hom(-, M)).
struct SubBifunctor {
  enum class Kind { covariant, contravariant };
  Kind kind;
  Module module;

  static SubBifunctor lower(Module m) { return {Kind::covariant, std::move(m)}; }
  static SubBifunctor upper(Module m) { return {Kind::contravariant, std::move(m)}; }
  /// "FM:<label>" or "F^M:<label>".
  std::string name() const;
};

/// Rank test on Hom(M, B) -> Hom(M, C) (F_M) or Hom(B, M) -> Hom(A, M) (F^M).
bool is_F_exact(const ShortExactSequence& eta, const SubBifunctor& f);
/// Dimension count: dim Hom(M, B) = dim Hom(M, A) + dim Hom(M, C), and dually.
bool is_F_exact_by_count(const ShortExactSequence& eta, const SubBifunctor& f);
/// Every pullback along M -> C (F_M) or pushout along A -> M (F^M) splits.
bool is_F_exact_by_pairing(const ShortExactSequence& eta, const SubBifunctor& f);

/// dim F(C, A) inside Ext^1(C, A).
std::size_t F_subgroup_dim(const Module& c, const Module& a, const SubBifunctor& f);

/// add of this module is the class of relative projectives:
/// Λ ⊕ M for F_M, Λ ⊕ TrD M for F^M.
Module relative_projective_generator(const SubBifunctor& f);
/// add of this module is the class of relative injectives:
/// DΛ ⊕ DTr M for F_M, DΛ ⊕ M for F^M.
Module relative_injective_cogenerator(const SubBifunctor& f);

bool in_F_projectives(const Module& x, const SubBifunctor& f);
bool in_F_injectives(const Module& x, const SubBifunctor& f);

/// Resolution by right approximations with relative projectives (flavor
/// f_projective), terms 0 .. depth. Without `minimize` each step uses the
/// padded approximation.
Resolution F_projective_resolution(const Module& x, const SubBifunctor& f, int depth, bool minimize = true);
/// Coresolution by left approximations with relative injectives.
Resolution F_injective_resolution(const Module& x, const SubBifunctor& f, int depth, bool minimize = true);

/// The short exact sequences 0 -> K_j -> Q_j -> K_{j-1} -> 0 of a resolution
/// (K_{-1} = target), or 0 -> K_{j-1} -> J_j -> K_j -> 0 for coresolutions.
std::vector<ShortExactSequence> resolution_steps(const Resolution& r);

/// dim Ext_F^i(C, A), by dimension shifting along a minimal F-projective resolution of C.
std::size_t ext_F_dim(int i, const Module& c, const Module& a, const SubBifunctor& f);
/// dim Ext_F^i(C, A) for i = 1 .. max_degree from one resolution.
std::vector<std::size_t> ext_F_dims(const Module& c, const Module& a, const SubBifunctor& f, int max_degree);
/// Same, as cohomology of Hom(Q_•, A) for the given F-projective resolution.
std::size_t ext_F_dim_cochain(int i, const Resolution& f_projective, const Module& a);
/// Same, as cohomology of Hom(C, J^•) for an F-injective coresolution of A.
std::size_t ext_F_dim_injective(int i, const Module& c, const Resolution& f_injective);

/// pd_F X <= n: the n-th F-syzygy lies in add of the relative projectives.
bool pd_F_le(const Module& x, const SubBifunctor& f, int n, bool minimize = true);
bool id_F_le(const Module& x, const SubBifunctor& f, int n, bool minimize = true);
/// pd_F_le(w, f, n) for every witness.
bool gldim_F_le(const SubBifunctor& f, int n, const std::vector<Module>& witnesses);
/// Witness list for gldim_F_le: all indecomposables of a Nakayama algebra.
std::vector<Module> default_witnesses(const Algebra& a);

/// X ⊥_k Y: Ext^i(X, Y) = 0 for 0 < i <= k.
bool ext_orthogonal(const Module& x, const Module& y, int k);

struct AgreementReport {
  bool generator = false;      // Λ ∈ add M2
  bool cogenerator = false;    // DΛ ∈ add M1
  bool orthogonal = false;     // M2 ⊥_k M1
  bool covariant_agrees = false;      // Ext_{F_{M2}}^i(C, M1) = Ext^i(C, M1)
  bool contravariant_agrees = false;  // Ext_{F^{M1}}^i(M2, D) = Ext^i(M2, D)
  std::vector<std::string> counterexamples;
  bool hypotheses_hold() const { return generator && cogenerator; }
  /// The three statements have equal truth values.
  bool equivalent() const { return orthogonal == covariant_agrees && orthogonal == contravariant_agrees; }
};

/// Compares relative and absolute Ext in degrees 1..k over the sample.
AgreementReport check_absolute_relative_agreement(const Module& m2, const Module& m1, int k,
                                                  const std::vector<Module>& sample);

}  // namespace fdrep
