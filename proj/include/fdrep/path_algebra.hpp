#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdrep/matrix.hpp"
#include "fdrep/rational.hpp"

namespace fdrep {

/// Raised for malformed presentations: inadmissible relations, unverifiable
/// nilpotency bounds, out-of-range vertices.
class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  /// Throws PresentationError on out-of-range endpoints or duplicate names.
  void validate() const;
  int arrow_index(const std::string& name) const;  // -1 if absent
};

/// A path. Composition convention: p·q traverses p first, then q, so the
/// product is defined when target(p) == source(q).
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;  // empty: the trivial path at `source`

  std::size_t length() const { return arrows.size(); }
  static Path trivial(int v) { return Path{v, v, {}}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Appends q to p. Requires p.target == q.source.
Path concat(const Path& p, const Path& q);

struct RelationTerm {
  Rational coefficient;
  Path path;
};

/// A linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

struct AlgebraPresentation {
  std::string name;
  Quiver quiver;
  std::vector<Relation> relations;
  /// Every path of this length lies in the ideal.
  int nilpotency_bound = 1;
  /// True when the ideal contains all paths of length nilpotency_bound by
  /// declaration (monomial truncation), not just by derivation.
  bool truncated = false;
};

/// All paths of length <= max_len, ordered by length, then lexicographically
/// by arrow index sequence, then by source vertex (for trivial paths).
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

/// Sparse coordinate vector in the algebra basis.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Lambda = KQ/I with an explicit basis of paths. A lightweight handle: the
/// computed basis is shared and immutable, and the handle also knows whether
/// it views the algebra or its opposite (arrows and paths reversed).
class Algebra {
 public:
  /// Computes the path basis. Throws PresentationError when relations are
  /// inadmissible or the nilpotency bound cannot be verified.
  explicit Algebra(const AlgebraPresentation& presentation);

  Algebra opposite() const { return Algebra(impl_, !op_); }
  bool is_opposite() const { return op_; }
  const AlgebraPresentation& presentation() const;  // of the underlying (non-opposite) algebra

  int vertex_count() const;
  int arrow_count() const;
  int arrow_source(int a) const;
  int arrow_target(int a) const;
  const std::string& arrow_name(int a) const;

  std::size_t dimension() const;
  int basis_source(int b) const;
  int basis_target(int b) const;
  std::size_t basis_length(int b) const;
  /// The basis path as a path of this view's quiver.
  Path basis_path(int b) const;
  int trivial_basis_index(int v) const;
  /// Basis indices of paths from `from` to `to`, in basis order.
  const std::vector<int>& basis_between(int from, int to) const;

  /// Coordinates of (basis b)·(arrow a) in this view.
  const SparseVec& extend(int b, int a) const;
  /// Coordinates of (basis b)·(basis c) in this view; empty if not composable.
  const SparseVec& product(int b, int c) const;
  /// Coordinates of an arbitrary path of this view's quiver.
  SparseVec coordinates(const Path& p) const;
  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.impl_ == b.impl_ && a.op_ == b.op_; }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

  struct Impl;

 private:
  Algebra(std::shared_ptr<const Impl> impl, bool op) : impl_(std::move(impl)), op_(op) {}
  std::shared_ptr<const Impl> impl_;
  bool op_ = false;
};

/// Monomial presentation KQ / (paths of length n).
AlgebraPresentation truncated_presentation(std::string name, Quiver q, int n);
/// Cyclic quiver 1 -> 2 -> ... -> k -> 1, truncated at n.
AlgebraPresentation cyclic_nakayama(int vertices, int n);
/// Linear quiver 1 -> 2 -> ... -> k, truncated at n.
AlgebraPresentation linear_nakayama(int vertices, int n);

/// True when every vertex has at most one incoming and one outgoing arrow.
bool is_nakayama(const Algebra& a);

}  // namespace fdrep
