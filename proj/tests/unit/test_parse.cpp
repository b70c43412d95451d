#include "doctest.h"
#include "example.hpp"

#include "fdrep/parse.hpp"

using namespace fdrep;

namespace {

bool same_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.name != b.name || a.nilpotency_bound != b.nilpotency_bound || a.truncated != b.truncated) return false;
  if (a.quiver.vertex_count != b.quiver.vertex_count || a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
  for (std::size_t i = 0; i < a.quiver.arrows.size(); ++i) {
    const auto &x = a.quiver.arrows[i], &y = b.quiver.arrows[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t r = 0; r < a.relations.size(); ++r) {
    const auto &x = a.relations[r].terms, &y = b.relations[r].terms;
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].coefficient != y[t].coefficient || !(x[t].path == y[t].path)) return false;
  }
  return true;
}

const char* example_file = R"(# three-cycle
[meta]
name = cyclic3_N5
[quiver]
vertices = 3
alpha: 1 -> 2
beta: 2 -> 3   # second arrow
gamma: 3 -> 1
[relations]
truncate = 5
)";

}  // namespace

TEST_CASE("algebra files: the example") {
  AlgebraPresentation p = parse_algebra_file(example_file);
  CHECK(p.name == "cyclic3_N5");
  CHECK(p.quiver.vertex_count == 3);
  REQUIRE(p.quiver.arrows.size() == 3);
  CHECK(p.quiver.arrows[2].source == 2);
  CHECK(p.quiver.arrows[2].target == 0);
  CHECK(p.truncated);
  CHECK(p.nilpotency_bound == 5);
  Algebra a(p);
  CHECK(a.dimension() == 15);
}

TEST_CASE("algebra files: explicit relations") {
  const char* square = R"([meta]
name = square
[quiver]
vertices = 4
a: 1 -> 2
b: 2 -> 4
c: 1 -> 3
d: 3 -> 4
[relations]
rel = a.b - c.d
)";
  AlgebraPresentation p = parse_algebra_file(square);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].terms[0].coefficient == 1);
  CHECK(p.relations[0].terms[1].coefficient == -1);
  CHECK(p.relations[0].terms[1].path.arrows == std::vector<int>{2, 3});
  CHECK_FALSE(p.truncated);
  CHECK(p.nilpotency_bound == 3);
  CHECK(Algebra(p).dimension() == 4 + 4 + 1);

  AlgebraPresentation q = parse_algebra_file(
      "[quiver]\nvertices = 2\nx: 1 -> 2\ny: 2 -> 1\n[relations]\nrel = 2*x.y + -1/2*x.y.x.y\nrel = y.x\n");
  CHECK(q.relations[0].terms[0].coefficient == 2);
  CHECK(q.relations[0].terms[1].coefficient == Rational(-1, 2));
  CHECK(q.relations[1].terms.size() == 1);
}

TEST_CASE("algebra files: round trip") {
  std::vector<AlgebraPresentation> ps = {parse_algebra_file(example_file), cyclic_nakayama(2, 4), linear_nakayama(3, 2)};
  ps.push_back(parse_algebra_file(
      "[meta]\nname = sq\n[quiver]\nvertices = 4\na: 1 -> 2\nb: 2 -> 4\nc: 1 -> 3\nd: 3 -> 4\n"
      "[relations]\nrel = 3/2*a.b - 7*c.d\n"));
  ps.push_back(parse_algebra_file("[quiver]\nvertices = 2\nx: 1 -> 2\ny: 2 -> 1\n[relations]\nrel = -x.y\nbound = 3\n"));
  for (const auto& p : ps) {
    std::string text = write_algebra_file(p);
    AlgebraPresentation back = parse_algebra_file(text);
    CHECK(same_presentation(p, back));
    CHECK(write_algebra_file(back) == text);
  }
}

TEST_CASE("algebra files: errors carry a location") {
  auto line_of = [](const char* text) {
    try {
      parse_algebra_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("[quiver]\nvertices = 2\na: 1 -> 3\n") == 3);
  CHECK(line_of("[quiver]\nvertices = 2\na: 1 -> 2\n[relations]\nrel = a.q\n") == 5);
  CHECK(line_of("[bogus]\n") == 1);
  CHECK(line_of("name = x\n") == 1);
  CHECK(line_of("[quiver]\nvertices = x\n") == 2);
  CHECK(line_of("[quiver]\nvertices = 2\na: 1 -> 2\nb: 2 -> 1\n[relations]\nrel = a.a\n") == 6);
  CHECK_THROWS_AS(parse_algebra_file("[quiver]\nvertices = 1\nl: 1 -> 1\n"), ParseError);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.alg"), ParseError);
}

TEST_CASE("module expressions") {
  const Algebra& a = ex::algebra();
  Module m1 = parse_module_expr(a, "P(1)+P(2)+P(3)+S(1)+P(3)/rad^2");
  CHECK(m1.summands().size() == 5);
  CHECK(is_isomorphic(m1, ex::M1()));
  CHECK(m1.summands()[4].label() == "P(3)/rad^2");
  CHECK(parse_module_expr(a, " P(1) / rad ").dim_vector_string() == "(1,0,0)");
  CHECK(is_isomorphic(parse_module_expr(a, "I(2)"), ex::I(2)));
  CHECK(parse_module_expr(a, "S(3)").dim_vector_string() == "(0,0,1)");

  auto column_of = [&](const char* text) {
    try {
      parse_module_expr(a, text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return -1;
  };
  CHECK(column_of("P(4)") == 3);
  CHECK(column_of("P(1)+") == 6);
  CHECK(column_of("Q(1)") == 1);
  CHECK(column_of("P(1) P(2)") == 6);
  CHECK(column_of("P(1)/rod") == 6);
}

TEST_CASE("functor syntax") {
  const Algebra& a = ex::algebra();
  SubBifunctor lo = parse_functor(a, "FM:P(1)+S(1)");
  CHECK(lo.kind == SubBifunctor::Kind::covariant);
  CHECK(lo.module.summands().size() == 2);
  SubBifunctor up = parse_functor(a, "F^M:S(2)");
  CHECK(up.kind == SubBifunctor::Kind::contravariant);
  CHECK_THROWS_AS(parse_functor(a, "G:S(2)"), ParseError);
}
