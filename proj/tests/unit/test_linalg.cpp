#include "doctest.h"
#include "fdrep/matrix.hpp"

#include <random>

using namespace fdrep;

TEST_CASE("rref of identity, zero and a rank-one matrix") {
  auto r = rref(Matrix::identity(3));
  CHECK(r.form.is_identity());
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  r = rref(Matrix(2, 3));
  CHECK(r.form.is_zero());
  CHECK(r.pivots.empty());

  r = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(r.form == Matrix{{1, 2}, {0, 0}});
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::identity(4)).cols() == 0);
  CHECK(kernel_basis(Matrix(3, 3)).is_identity());
  Matrix k = kernel_basis(Matrix{{1, 1}});
  REQUIRE(k.cols() == 1);
  CHECK((Matrix{{1, 1}} * k).is_zero());
  CHECK(sgn(k(0, 0)) != 0);
}

TEST_CASE("solve_right") {
  Matrix b{{1, 2}, {3, 4}};
  auto x = solve_right(Matrix::identity(2), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve_right(Matrix{{1}, {0}}, Matrix{{0}, {1}}));
  x = solve_right(Matrix{{2}}, Matrix{{1}});
  REQUIRE(x);
  CHECK((*x)(0, 0) == Rational(1, 2));
  CHECK_THROWS_AS(solve_right(Matrix(2, 2), Matrix(3, 1)), std::invalid_argument);
}

TEST_CASE("parse_rational normalizes") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+2/6").get_den() == 3);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/-2"));
}

namespace {
Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density) {
  std::uniform_int_distribution<int> val(-5, 5), keep(0, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) < density) {
        m(i, j) = Rational(val(rng), den(rng));
        m(i, j).canonicalize();
      }
  return m;
}
}  // namespace

TEST_CASE("property: rank-nullity, rref idempotence, exact solve") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> sz(0, 7), dens(1, 10);
  for (int it = 0; it < 300; ++it) {
    Matrix m = random_matrix(rng, sz(rng), sz(rng), dens(rng));
    auto r = rref(m);
    Matrix k = kernel_basis(m);
    CHECK(r.pivots.size() + k.cols() == m.cols());
    CHECK((m * k).is_zero());
    CHECK(rref(r.form).form == r.form);
    CHECK(rank(m.transpose()) == r.pivots.size());
    CHECK(free_columns(m).size() == k.cols());
    Matrix lk = left_kernel_basis(m);
    CHECK((lk * m).is_zero());
    CHECK(lk.rows() + r.pivots.size() == m.rows());
    Matrix im = image_basis(m);
    CHECK(im.cols() == r.pivots.size());
    CHECK(in_column_span(im, m));
    // b in the image is always solvable, exactly.
    Matrix x0 = random_matrix(rng, m.cols(), 2, 6);
    Matrix b = m * x0;
    auto x = solve_right(m, b);
    REQUIRE(x);
    CHECK(m * *x == b);
  }
}

TEST_CASE("SpanBuilder tracks a subspace") {
  SpanBuilder s(3);
  CHECK(s.add(std::vector<Rational>{1, 2, 3}));
  CHECK_FALSE(s.add(std::vector<Rational>{2, 4, 6}));
  CHECK(s.contains(std::vector<Rational>{-1, -2, -3}));
  CHECK_FALSE(s.contains(std::vector<Rational>{0, 0, 1}));
  CHECK(s.add(std::vector<Rational>{0, 0, 1}));
  CHECK(s.dimension() == 2);
  CHECK(s.basis().cols() == 2);
  CHECK(s.contains(std::vector<Rational>{1, 2, 7}));
}
