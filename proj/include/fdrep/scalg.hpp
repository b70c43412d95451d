#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "fdrep/matrix.hpp"
#include "fdrep/path_algebra.hpp"

namespace fdrep {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional algebra given by structure constants:
/// e_i e_j = Σ_k c_ij^k e_k. Immutable handle.
///
/// The algebra may carry a complete set of orthogonal idempotents (summing
/// to the unit). When they are primitive, projective covers built from them
/// are minimal; otherwise the single idempotent 1 is used and covers are free.
class SCAlgebra {
 public:
  SCAlgebra(std::size_t dim, std::vector<SparseVec> table, std::vector<Rational> unit);

  std::size_t dimension() const;
  const SparseVec& product(std::size_t i, std::size_t j) const;
  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  const std::vector<Rational>& unit() const;

  /// Same basis, c_ij^k of the opposite is c_ji^k.
  SCAlgebra opposite() const;

  bool is_associative() const;
  bool unit_law_holds() const;

  /// d x d matrix of y |-> x y.
  Matrix left_multiplication(const std::vector<Rational>& x) const;
  Matrix right_multiplication(const std::vector<Rational>& x) const;
  /// T(e_i, e_j) = trace of left multiplication by e_i e_j.
  Matrix trace_form() const;
  /// Columns span the radical (trace-form kernel). Throws AlgebraError if
  /// the kernel is not nilpotent.
  const Matrix& radical() const;
  /// dim of the centre of A / rad A: the number of simple blocks.
  std::size_t simple_block_count() const;
  bool is_semisimple() const { return radical().cols() == 0; }

  /// Replaces the idempotent set. Checks orthogonality and completeness.
  SCAlgebra with_idempotents(std::vector<std::vector<Rational>> idempotents, bool primitive) const;
  const std::vector<std::vector<Rational>>& idempotents() const;
  bool idempotents_primitive() const;

  struct Impl;

 private:
  explicit SCAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A left module over an SCAlgebra: one action matrix per basis element.
class SCModule {
 public:
  /// Validates that the action is multiplicative and unital.
  SCModule(SCAlgebra algebra, std::vector<Matrix> actions);
  static SCModule trusted(SCAlgebra algebra, std::size_t dim, std::vector<Matrix> actions);

  const SCAlgebra& algebra() const { return algebra_; }
  std::size_t dimension() const { return dim_; }
  const Matrix& action(std::size_t basis) const { return actions_[basis]; }
  const std::vector<Matrix>& actions() const { return actions_; }
  Matrix act(const std::vector<Rational>& element) const;

 private:
  SCModule(SCAlgebra algebra, std::size_t dim, std::vector<Matrix> actions)
      : algebra_(std::move(algebra)), dim_(dim), actions_(std::move(actions)) {}
  SCAlgebra algebra_;
  std::size_t dim_;
  std::vector<Matrix> actions_;
};

SCModule sc_regular_module(const SCAlgebra& a);
/// A / rad A as a left module.
SCModule sc_radical_quotient(const SCAlgebra& a);
/// Submodule spanned by the columns of `basis` (assumed invariant).
SCModule sc_submodule(const SCModule& x, const Matrix& basis);

/// Projective cover ⊕ A e_{j(g)} -> X built from the algebra's idempotents.
struct SCCover {
  SCModule projective;
  Matrix map;                       // dim X x dim P
  std::vector<std::size_t> idempotent_of_generator;
  std::vector<std::size_t> offsets;  // block start of each generator in P
  std::vector<Matrix> vectors;       // generator images in X
};
SCCover sc_projective_cover(const SCModule& x);
SCModule sc_syzygy(const SCModule& x, int n = 1);

/// Basis of Hom_A(X, Y) as dim Y x dim X matrices.
std::vector<Matrix> sc_hom_basis(const SCModule& x, const SCModule& y);
std::size_t sc_hom_dimension(const SCModule& x, const SCModule& y);
std::size_t sc_ext_dim(int i, const SCModule& x, const SCModule& y);
bool sc_is_projective(const SCModule& x);

/// gldim A <= n, via projectivity of the n-th syzygy of A / rad A.
bool gldim_le(const SCAlgebra& a, int n);
/// id_A T <= n, via Ext^{n+1}(A / rad A, T) = 0.
bool sc_id_le(const SCModule& t, int n);
/// Number of pairwise non-isomorphic indecomposable summands of X, as the
/// number of simple blocks of End_A(X).
std::size_t sc_distinct_summand_count(const SCModule& x);
/// End_A(X) with composition as product, on the basis sc_hom_basis(X, X).
SCAlgebra sc_end_algebra(const SCModule& x);

}  // namespace fdrep
