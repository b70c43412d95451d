#include "doctest.h"
#include "example.hpp"
#include "oracles.hpp"

#include <random>

#include "fdrep/approx.hpp"
#include "fdrep/scalg.hpp"

using namespace fdrep;

namespace {

SCAlgebra scalars(int n) {
  std::vector<SparseVec> table(n * n);
  std::vector<Rational> unit(n, Rational(1));
  for (int i = 0; i < n; ++i) table[i * n + i].emplace_back(i, Rational(1));
  return SCAlgebra(n, std::move(table), std::move(unit));
}

std::vector<Rational> e(std::size_t d, std::size_t i) {
  std::vector<Rational> v(d);
  v[i] = 1;
  return v;
}

// Diagonal idempotents of the upper-triangular algebra.
SCAlgebra triangular_with_idempotents(int n) {
  SCAlgebra a = oracle::upper_triangular(n);
  std::vector<std::vector<Rational>> idem;
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    idem.push_back(e(a.dimension(), pos));
    pos += n - i;
  }
  return a.with_idempotents(idem, true);
}

}  // namespace

TEST_CASE("structure constants: axioms and radicals") {
  SCAlgebra s = scalars(3);
  CHECK(s.is_associative());
  CHECK(s.unit_law_holds());
  CHECK(s.radical().cols() == 0);
  CHECK(s.simple_block_count() == 3);

  SCAlgebra t = oracle::upper_triangular(2);
  CHECK(t.is_associative());
  CHECK(t.unit_law_holds());
  CHECK(t.radical().cols() == 1);
  CHECK(t.simple_block_count() == 2);
  CHECK(t.opposite().radical().cols() == 1);

  SCAlgebra t3 = oracle::upper_triangular(3);
  CHECK(t3.radical().cols() == 3);
}

TEST_CASE("structure constants: radical is a nilpotent ideal with semisimple quotient") {
  for (int n = 1; n <= 4; ++n) {
    SCAlgebra a = oracle::upper_triangular(n);
    const Matrix& j = a.radical();
    const std::size_t d = a.dimension();
    for (std::size_t c = 0; c < j.cols(); ++c)
      for (std::size_t b = 0; b < d; ++b) {
        auto x = j.column(c).data();
        CHECK(in_column_span(j, Matrix::column_vector(a.multiply(x, e(d, b)))));
        CHECK(in_column_span(j, Matrix::column_vector(a.multiply(e(d, b), x))));
      }
    // J^n = 0
    std::vector<std::vector<Rational>> pw;
    for (std::size_t c = 0; c < j.cols(); ++c) pw.push_back(j.column(c).data());
    for (int k = 1; k < n; ++k) {
      std::vector<std::vector<Rational>> next;
      for (const auto& x : pw)
        for (std::size_t c = 0; c < j.cols(); ++c) next.push_back(a.multiply(x, j.column(c).data()));
      pw = next;
    }
    for (const auto& x : pw) CHECK(Matrix::column_vector(x).is_zero());
    // quotient trace form is nondegenerate: rank of the form equals d - dim J
    CHECK(rank(a.trace_form()) == d - j.cols());
  }
}

TEST_CASE("structure constants: invalid inputs") {
  CHECK_THROWS_AS(SCAlgebra(2, std::vector<SparseVec>(3), {1, 1}), AlgebraError);
  SCAlgebra s = scalars(2);
  CHECK_THROWS_AS(s.with_idempotents({e(2, 0)}, true), AlgebraError);
  CHECK_THROWS_AS(SCModule(s, {Matrix::identity(1)}), AlgebraError);
  // e_0 acting as identity and e_1 as zero violates the unit law
  CHECK_THROWS_AS(SCModule(s, {Matrix::identity(1), Matrix::identity(1)}), AlgebraError);
  CHECK_NOTHROW(SCModule(s, {Matrix::identity(1), Matrix(1, 1)}));
}

TEST_CASE("structure constants: Hom and Ext over triangular algebras") {
  for (bool idem : {false, true}) {
    SCAlgebra a = idem ? triangular_with_idempotents(2) : oracle::upper_triangular(2);
    SCModule reg = sc_regular_module(a);
    SCModule top = sc_radical_quotient(a);
    CHECK(top.dimension() == 2);
    CHECK(sc_hom_dimension(reg, reg) == 3);
    CHECK(sc_hom_dimension(top, top) == oracle::sc_hom_dimension(top, top));
    CHECK(sc_hom_dimension(reg, top) == oracle::sc_hom_dimension(reg, top));
    CHECK(sc_hom_dimension(top, reg) == oracle::sc_hom_dimension(top, reg));
    CHECK(sc_is_projective(reg));
    CHECK_FALSE(sc_is_projective(top));
    CHECK(sc_ext_dim(1, top, top) == 1);
    CHECK(sc_ext_dim(2, top, top) == 0);
    CHECK_FALSE(gldim_le(a, 0));
    CHECK(gldim_le(a, 1));
    CHECK(sc_id_le(reg, 1));
    CHECK_FALSE(sc_id_le(reg, 0));
    CHECK(sc_distinct_summand_count(reg) == 2);
    CHECK(sc_distinct_summand_count(top) == 2);
  }
  SCAlgebra t3 = triangular_with_idempotents(3);
  CHECK(gldim_le(t3, 1));
  CHECK_FALSE(gldim_le(t3, 0));
  CHECK(gldim_le(scalars(2), 0));
}

TEST_CASE("structure constants: hom basis elements are module maps") {
  SCAlgebra a = triangular_with_idempotents(3);
  SCModule reg = sc_regular_module(a);
  SCModule top = sc_radical_quotient(a);
  SCModule om = sc_syzygy(top);
  for (const auto* x : {&reg, &top, &om})
    for (const auto* y : {&reg, &top, &om}) {
      auto basis = sc_hom_basis(*x, *y);
      CHECK(basis.size() == oracle::sc_hom_dimension(*x, *y));
      for (const auto& f : basis)
        for (std::size_t b = 0; b < a.dimension(); ++b) CHECK(y->action(b) * f == f * x->action(b));
    }
}

TEST_CASE("endomorphism algebras of the example") {
  HomSpace s1(ex::S(1), ex::S(1));
  CHECK(endomorphism_algebra(s1).dimension() == 1);
  Module s12 = direct_sum(ex::S(1), ex::S(2));
  SCAlgebra e12 = endomorphism_algebra(HomSpace(s12, s12));
  CHECK(e12.dimension() == 2);
  CHECK(e12.radical().cols() == 0);
  CHECK(e12.simple_block_count() == 2);

  Module lam = regular_module(ex::algebra());
  SCAlgebra el = endomorphism_algebra(HomSpace(lam, lam));
  CHECK(el.dimension() == 15);
  CHECK(el.is_associative());
  CHECK(el.unit_law_holds());
  CHECK(el.simple_block_count() == 3);
  CHECK(el.radical().cols() == 12);

  SCAlgebra ep1 = endomorphism_algebra(HomSpace(ex::P(1), ex::P(1)));
  CHECK(ep1.dimension() == 2);
  CHECK(ep1.radical().cols() == 1);
}

TEST_CASE("structure constants: SC Hom agrees with module Hom through the Yoneda embedding") {
  // Hom_Λ(Λ, X) as a right End(Λ)-module; Hom over End(Λ)^op between such
  // modules equals Hom_Λ.
  const auto& a = ex::algebra();
  Module lam = regular_module(a);
  HomSpace end(lam, lam);
  SCAlgebra gop = endomorphism_algebra(end).opposite();
  auto as_module = [&](const Module& x) {
    HomSpace h(lam, x);
    std::vector<Matrix> acts;
    for (const auto& g : end.basis()) {
      Matrix m(h.dimension(), h.dimension());
      for (std::size_t k = 0; k < h.dimension(); ++k) {
        auto c = h.coordinates(compose(h.basis()[k], g));
        for (std::size_t r = 0; r < c.size(); ++r) m(r, k) = c[r];
      }
      acts.push_back(std::move(m));
    }
    return SCModule(gop, std::move(acts));
  };
  auto mods = enumerate_indecomposables_nakayama(a);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, mods.size() - 1);
  for (int t = 0; t < 12; ++t) {
    const Module& x = mods[pick(rng)];
    const Module& y = mods[pick(rng)];
    CHECK(sc_hom_dimension(as_module(x), as_module(y)) == hom_dimension(x, y));
  }
}
