#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdrep/matrix.hpp"
#include "fdrep/path_algebra.hpp"

namespace fdrep {

/// Raised when a representation violates a relation, a morphism fails to
/// commute, or operands live over different algebras.
class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Presentation;

/// A finite-dimensional representation of the bound quiver of an Algebra:
/// one vector space per vertex and one matrix per arrow (for a: i -> j the
/// matrix is dims[j] x dims[i]). Immutable handle; copies are cheap.
///
/// A module may carry a declared decomposition into summands, recorded by
/// direct_sum. Nothing else inspects or guesses decompositions.
class Module {
 public:
  /// Validates shapes and that the action factors through the algebra.
  Module(Algebra algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows);

  /// Skips the relation check; for modules that are valid by construction
  /// (kernels, cokernels, sums of valid modules).
  static Module trusted(Algebra algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows);
  static Module zero(const Algebra& algebra);

  const Algebra& algebra() const;
  const std::vector<std::size_t>& dims() const;
  std::size_t dim(int v) const { return dims()[v]; }
  std::size_t total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }
  const Matrix& arrow(int a) const;
  const std::vector<Matrix>& arrows() const;

  /// Action of basis element b, a dims[target(b)] x dims[source(b)] matrix.
  const Matrix& path_action(int b) const;

  /// The declared summands (a single entry, *this, when none were declared).
  std::vector<Module> summands() const;
  bool has_declared_summands() const;

  /// Attaches a human-readable label (e.g. "P(3)/rad^2"); purely cosmetic.
  Module with_label(std::string label) const;
  const std::string& label() const;

  std::string dim_vector_string() const;

  /// Identity of the underlying data, for caches.
  const void* identity() const { return d_.get(); }

  struct Data;

 private:
  friend Module direct_sum(const std::vector<Module>& parts);
  friend const Presentation& presentation(const Module& x);
  explicit Module(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A commuting family of vertex maps.
class Morphism {
 public:
  Morphism(Module source, Module target, std::vector<Matrix> maps);
  /// Skips the commutation check; for maps that commute by construction.
  static Morphism trusted(Module source, Module target, std::vector<Matrix> maps);

  static Morphism identity(const Module& x);
  static Morphism zero(const Module& source, const Module& target);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& at(int v) const { return maps_[v]; }
  const std::vector<Matrix>& maps() const { return maps_; }

  bool is_zero() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;

  /// All vertex matrices flattened row-major and stacked into one column.
  std::vector<Rational> flatten() const;

  Morphism& operator+=(const Morphism& o);
  Morphism& operator*=(const Rational& s);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator*(const Rational& s, Morphism a) { return a *= s; }

 private:
  Morphism(Module source, Module target, std::vector<Matrix> maps, int unchecked);
  Module source_;
  Module target_;
  std::vector<Matrix> maps_;
};

/// g ∘ f.
Morphism compose(const Morphism& g, const Morphism& f);

/// 0 -> A -f-> B -g-> C -> 0.
struct ShortExactSequence {
  Morphism f;
  Morphism g;

  const Module& left() const { return f.source(); }
  const Module& middle() const { return f.target(); }
  const Module& right() const { return g.target(); }

  /// Mono, epi, im f = ker g; throws ModuleError describing the failure.
  void validate() const;
  bool is_valid() const;
};

/// A direct sum of indecomposable projectives, one per generator, with
/// coordinates at vertex w indexed by (generator, basis path from the
/// generator's vertex to w).
struct FreeModule {
  std::vector<int> generators;
  std::vector<std::vector<std::pair<int, int>>> index;  // [w] -> (gen, basis)
  Module module;

  std::size_t position(int w, int gen, int basis) const;
};

FreeModule free_module(const Algebra& algebra, std::vector<int> generator_vertices);

/// The morphism F -> Y sending generator g to images[g] (a column vector in
/// Y at the generator's vertex).
Morphism map_from_free(const FreeModule& free, const Module& target, const std::vector<Matrix>& images);

/// Minimal projective presentation data, computed once per module.
struct Presentation {
  std::vector<Matrix> generator_vectors;  // top lifts, columns in X_v
  FreeModule cover;
  Morphism epi;                  // cover -> X, a projective cover
  std::vector<Matrix> sections;  // per vertex: epi_v * sections_v = id
  Module syzygy;
  Morphism inclusion;            // syzygy -> cover
  std::vector<int> relation_vertices;
  std::vector<Matrix> relations;  // top generators of the syzygy, as cover vectors
};

const Presentation& presentation(const Module& x);

/// Hom_Lambda(X, Y) with a fixed basis. Solved on the presentation of X:
/// a morphism is fixed by the images of the top generators, subject to the
/// relations.
class HomSpace {
 public:
  HomSpace(const Module& x, const Module& y);

  const Module& source() const { return x_; }
  const Module& target() const { return y_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Morphism>& basis() const { return basis_; }
  std::vector<Rational> coordinates(const Morphism& f) const;
  Morphism combination(const std::vector<Rational>& coefficients) const;

 private:
  Module x_, y_;
  std::vector<Morphism> basis_;
  std::vector<std::size_t> free_;
};

std::vector<Morphism> hom_basis(const Module& x, const Module& y);
std::size_t hom_dimension(const Module& x, const Module& y);

// Standard modules.
Module projective(const Algebra& a, int vertex);
Module injective(const Algebra& a, int vertex);
Module simple(const Algebra& a, int vertex);
Module regular_module(const Algebra& a);  // ⊕ P_i with declared summands
Module dual_regular_module(const Algebra& a);  // ⊕ I_i with declared summands

Module direct_sum(const std::vector<Module>& parts);
Module direct_sum(const Module& a, const Module& b);
Morphism summand_inclusion(const Module& sum, std::size_t k);
Morphism summand_projection(const Module& sum, std::size_t k);
/// [f_0 f_1 ...]: ⊕ sources -> common target.
Morphism row_morphism(const std::vector<Morphism>& maps, const Module& source_sum);
/// [g_0; g_1; ...]: common source -> ⊕ targets.
Morphism column_morphism(const std::vector<Morphism>& maps, const Module& target_sum);
Morphism direct_sum(const Morphism& f, const Morphism& g);

/// A ⊕ B with its four structure maps (blocks in the given order).
struct Biproduct {
  Module sum;
  Morphism in1, in2, out1, out2;
};
Biproduct biproduct(const Module& a, const Module& b);

/// k with mono ∘ k = h; throws ModuleError if h does not factor.
Morphism lift_through_mono(const Morphism& h, const Morphism& mono);
/// k with k ∘ epi = h, assuming h vanishes on ker epi.
Morphism descend_through_epi(const Morphism& h, const Morphism& epi);

struct SubModule {
  Module module;
  Morphism inclusion;
};
struct QuotientModule {
  Module module;
  Morphism projection;
};

/// Per-vertex subspace bases (columns), assumed closed under the arrows.
SubModule submodule(const Module& x, const std::vector<Matrix>& bases);
QuotientModule quotient(const Module& x, const std::vector<Matrix>& bases);

SubModule kernel(const Morphism& f);
QuotientModule cokernel(const Morphism& f);
SubModule image(const Morphism& f);

/// Closure of the given per-vertex vectors under the arrow maps.
SubModule generated_submodule(const Module& x, const std::vector<Matrix>& vectors);

/// rad^k X, where rad X is the sum of the images of the arrow maps.
std::vector<Matrix> radical_power_bases(const Module& x, int k);
QuotientModule radical_quotient(const Module& x, int k);
SubModule socle(const Module& x);
QuotientModule top(const Module& x);

/// Vector-space dual over the opposite algebra.
Module dualize(const Module& x);
/// D f : D target -> D source.
Morphism dualize(const Morphism& f);

struct IsoOptions {
  std::uint64_t seed = 0;
  int samples = 32;
  int coefficient_range = 8;
  /// Cap on the exhaustive fallback grid over coefficients {-1, 0, 1}.
  std::size_t fallback_limit = 1u << 16;
};

/// Randomized search for an invertible element of Hom(X, Y); a false answer
/// is only given after an exhaustive pass over a bounded coefficient grid.
bool is_isomorphic(const Module& x, const Module& y, const IsoOptions& options = {});

/// P_i / rad^j P_i for every vertex i and every 1 <= j <= Loewy length.
/// Throws ModuleError if the algebra is not Nakayama.
std::vector<Module> enumerate_indecomposables_nakayama(const Algebra& a);

}  // namespace fdrep
