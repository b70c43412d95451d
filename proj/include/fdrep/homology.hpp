#pragma once

#include <vector>

#include "fdrep/module.hpp"

namespace fdrep {

/// A resolution of `target`.
///
/// Projective-type (projective, F-projective):
///   ... -> terms[1] -> terms[0] -> target -> 0
///   differentials[0]: terms[0] -> target, differentials[j]: terms[j] -> terms[j-1]
///   syzygies[j] = ker differentials[j], syzygy_maps[j]: syzygies[j] -> terms[j]
/// Injective-type (injective, F-injective):
///   0 -> target -> terms[0] -> terms[1] -> ...
///   differentials[0]: target -> terms[0], differentials[j]: terms[j-1] -> terms[j]
///   syzygies[j] = coker differentials[j], syzygy_maps[j]: terms[j] -> syzygies[j]
struct Resolution {
  enum class Flavor { projective, injective, f_projective, f_injective };
  Flavor flavor = Flavor::projective;
  Module target;
  std::vector<Module> terms;
  std::vector<Morphism> differentials;
  std::vector<Module> syzygies;
  std::vector<Morphism> syzygy_maps;

  bool is_projective_type() const { return flavor == Flavor::projective || flavor == Flavor::f_projective; }
  std::size_t length() const { return terms.size(); }
};

/// Epi P -> X with P = ⊕ P_i^{m_i}, m_i = dim top(X)_i.
Morphism projective_cover(const Module& x);
/// Mono X -> I, dual to the projective cover of D X.
Morphism injective_envelope(const Module& x);

/// Minimal projective resolution with terms P_0 .. P_depth.
Resolution projective_resolution(const Module& x, int depth);
/// Minimal injective resolution with terms I_0 .. I_depth.
Resolution injective_resolution(const Module& x, int depth);

/// Ω^n X (n = 0 gives X).
Module syzygy(const Module& x, int n);
/// Ω^{-n} X = D Ω^n D X.
Module cosyzygy(const Module& x, int n);

/// dim Ext^i(X, Y) from the dimension count along 0 -> Ω^i -> P_{i-1} -> Ω^{i-1} -> 0.
std::size_t ext_dim(int i, const Module& x, const Module& y);
/// dim Ext^i(X, Y) as cohomology of Hom(P_•, Y) for the given projective resolution.
std::size_t ext_dim_cochain(int i, const Resolution& projective_res, const Module& y);
/// dim Ext^i(X, Y) as cohomology of Hom(X, I^•) for an injective resolution of Y.
std::size_t ext_dim_injective(int i, const Module& x, const Resolution& injective_res);
/// ext_dim over the opposite algebra: Ext^i(D Y, D X).
std::size_t ext_dim_dual(int i, const Module& x, const Module& y);

/// Matrix of h |-> h ∘ d from Hom(d.target, Y) to Hom(d.source, Y), in HomSpace coordinates.
Matrix precompose_matrix(const HomSpace& from, const HomSpace& to, const Morphism& d);
/// Matrix of h |-> d ∘ h from Hom(X, d.source) to Hom(X, d.target).
Matrix postcompose_matrix(const HomSpace& from, const HomSpace& to, const Morphism& d);

/// Tr X over the opposite algebra, from the minimal presentation of X.
/// Declared summands are transposed one by one.
Module transpose(const Module& x);
Module dtr(const Module& x);
Module trd(const Module& x);

/// X ∈ add M: the canonical map M^k -> X (k = dim Hom(M, X)) splits.
bool in_add(const Module& x, const Module& m);
bool is_projective(const Module& x);
bool is_injective(const Module& x);
bool is_selfinjective(const Algebra& a);

/// pd X <= n, via projectivity of Ω^n X.
bool pd_le(const Module& x, int n);
/// id X <= n, via pd of D X over the opposite algebra.
bool id_le(const Module& x, int n);

/// Ext^1(C, A) realized as Hom(Ω C, A) modulo maps factoring through the cover.
class Ext1Space {
 public:
  Ext1Space(const Module& c, const Module& a);

  const Module& source() const { return c_; }
  const Module& target() const { return a_; }
  std::size_t dimension() const { return quotient_rows_.rows(); }
  const HomSpace& cocycles() const { return cocycles_; }

  /// Class of a cocycle φ: Ω C -> A in the fixed quotient basis.
  std::vector<Rational> class_of(const Morphism& phi) const;
  bool is_coboundary(const Morphism& phi) const;
  /// Cocycle representing the k-th quotient basis vector.
  Morphism representative(std::size_t k) const;
  Morphism representative(const std::vector<Rational>& class_coordinates) const;

  /// Cocycle of a short exact sequence 0 -> A -> B -> C -> 0.
  Morphism cocycle_of(const ShortExactSequence& eta) const;
  /// Pushout of 0 -> Ω C -> P_0 -> C -> 0 along φ.
  ShortExactSequence extension(const Morphism& phi) const;

 private:
  Module c_, a_;
  HomSpace cocycles_;
  std::vector<std::size_t> complement_;  // cocycle coordinates spanning a complement
  Matrix quotient_rows_;                 // class = quotient_rows_ * cocycle coordinates
};

/// Cocycle Ω C -> A of 0 -> A -> B -> C -> 0 (lift the cover of C into B,
/// restrict to Ω C, pull back along A -> B).
Morphism ext1_cocycle(const ShortExactSequence& eta);

/// Lift of f: M -> C to the syzygies, Ω M -> Ω C.
Morphism syzygy_lift(const Morphism& f);

/// Class in Ext^1(M, A) of the pullback of eta along f: M -> C.
std::vector<Rational> yoneda_ext1_pairing(const ShortExactSequence& eta, const Morphism& f);
/// Same, with Ext^1(M, A) supplied.
std::vector<Rational> yoneda_ext1_pairing(const Ext1Space& space, const Morphism& cocycle, const Morphism& f);
/// Class in Ext^1(C, M) of the pushout of eta along g: A -> M.
std::vector<Rational> yoneda_ext1_pushforward(const ShortExactSequence& eta, const Morphism& g);

/// The pullback sequence 0 -> A -> B ×_C M -> M -> 0.
ShortExactSequence pullback(const ShortExactSequence& eta, const Morphism& f);
/// The pushout sequence 0 -> M -> M ⊔_A B -> C -> 0.
ShortExactSequence pushout(const ShortExactSequence& eta, const Morphism& g);

}  // namespace fdrep
