#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fdrep/module.hpp"
#include "fdrep/path_algebra.hpp"
#include "fdrep/relhom.hpp"

namespace fdrep {

/// Malformed input, with a 1-based line and column (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Algebra file:
///
///   [meta]       name = <text>
///   [quiver]     vertices = <n>
///                <arrow>: <src> -> <tgt>        (vertices 1..n)
///   [relations]  truncate = <N>                 (all paths of length N vanish)
///                bound = <N>                    (nilpotency bound, verified)
///                rel = <c1>*<a.b.c> + <c2>*<d.e> ...
///
/// `#` starts a comment. Without `truncate` or `bound` the smallest bound
/// the relations support is searched for.
AlgebraPresentation parse_algebra_file(std::string_view text);
AlgebraPresentation load_algebra_file(const std::string& path);
/// Re-parses to an identical presentation.
std::string write_algebra_file(const AlgebraPresentation& p);

/// `P(i)`, `I(i)`, `S(i)`, optionally followed by `/rad^k` (`/rad` is k = 1),
/// joined by `+`. Vertices are 1-based.
Module parse_module_expr(const Algebra& a, std::string_view expr);

/// `FM:<expr>` or `F^M:<expr>`.
SubBifunctor parse_functor(const Algebra& a, std::string_view text);

}  // namespace fdrep
