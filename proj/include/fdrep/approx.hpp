#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "fdrep/module.hpp"
#include "fdrep/scalg.hpp"

namespace fdrep {

/// End(X) as a structure-constant algebra on the basis of `end`
/// (product = composition, x·y = x ∘ y).
SCAlgebra endomorphism_algebra(const HomSpace& end);

/// Basis of rad End(X) as morphisms.
std::vector<Morphism> endomorphism_radical(const HomSpace& end);

/// One indecomposable piece of a module, with its split inclusion and projection.
struct AddPiece {
  Module module;
  Morphism inclusion;   // piece -> generator
  Morphism projection;  // generator -> piece
};

/// add M, with M split into indecomposable pieces (declared summands first,
/// then Fitting splits along non-nilpotent non-invertible endomorphisms) and
/// the pieces grouped into isomorphism classes.
class AddCategory {
 public:
  explicit AddCategory(const Module& m);

  const Module& generator() const;
  const std::vector<AddPiece>& pieces() const;
  /// Isomorphism class index of each piece.
  const std::vector<std::size_t>& piece_class() const;
  /// One representative module per isomorphism class.
  const std::vector<Module>& classes() const;
  /// rad(M_i, M_j) for class representatives: all maps when i != j, rad End when i == j.
  const std::vector<Morphism>& radical_maps(std::size_t from, std::size_t to) const;

  bool contains(const Module& x) const;

  struct Impl;

 private:
  std::shared_ptr<Impl> impl_;
};

struct ApproximationResult {
  Morphism map;        // right: A -> X, left: X -> A, with A ∈ add M
  bool minimal = false;
  Module complement;   // right: ker map, left: coker map
  Morphism complement_map;  // right: ker -> A, left: A -> coker
  /// Class index (in the AddCategory) of each declared summand of the source/target;
  /// empty for canonical approximations.
  std::vector<std::size_t> summand_classes;
};

/// Right add-M-approximation A -> X. Canonical: A = M^k, k = dim Hom(M, X),
/// one copy per basis map. Minimal: one copy of M_j per element of a basis of
/// the top of Hom(M_j, X) over End(M_j).
ApproximationResult right_approximation(const Module& x, const AddCategory& m, bool minimize);
ApproximationResult right_approximation(const Module& x, const Module& m, bool minimize);
/// Left add-M-approximation X -> A, dual.
ApproximationResult left_approximation(const Module& x, const AddCategory& m, bool minimize);
ApproximationResult left_approximation(const Module& x, const Module& m, bool minimize);

/// The minimal right approximation with one extra copy of every indecomposable
/// of add M attached by a random map (seeded). A non-minimal approximation of
/// bounded size, unlike the canonical one whose source grows with Hom(M, X).
ApproximationResult padded_right_approximation(const Module& x, const AddCategory& m, std::uint64_t seed);
ApproximationResult padded_left_approximation(const Module& x, const AddCategory& m, std::uint64_t seed);

/// Every map M -> X factors through g (rank test on Hom(M, g)).
bool is_right_approximation(const Morphism& g, const Module& m);
/// Every map X -> M factors through g.
bool is_left_approximation(const Morphism& g, const Module& m);

/// g: A -> X is right minimal: {v ∈ End A : g ∘ v = 0} ⊆ rad End A.
bool is_right_minimal(const Morphism& g);
/// g: X -> A is left minimal: {v ∈ End A : v ∘ g = 0} ⊆ rad End A.
bool is_left_minimal(const Morphism& g);

}  // namespace fdrep
