#include "fdrep/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fdrep/homology.hpp"

namespace fdrep {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                        message
                                  : (column > 0 ? "column " + std::to_string(column) + ": " + message : message)),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, int line, int column) {
  s = trim(s);
  if (s.empty()) throw ParseError("expected an integer", line, column);
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected an integer, got '" + std::string(s) + "'", line, column);
    v = v * 10 + (c - '0');
    if (v > 1000000) throw ParseError("integer out of range", line, column);
  }
  return v;
}

Path parse_path(const Quiver& q, std::string_view text, int line, int column) {
  Path p;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string id(trim(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start)));
    int a = q.arrow_index(id);
    if (a < 0) throw ParseError("unknown arrow '" + id + "'", line, column);
    if (p.arrows.empty()) {
      p.source = q.arrows[a].source;
    } else if (q.arrows[p.arrows.back()].target != q.arrows[a].source) {
      throw ParseError("arrows do not compose at '" + id + "'", line, column);
    }
    p.arrows.push_back(a);
    p.target = q.arrows[a].target;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return p;
}

Relation parse_relation(const Quiver& q, std::string_view text, int line, int column) {
  Relation r;
  std::size_t i = 0;
  bool first = true;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    Rational sign = 1;
    if (!first) {
      if (text[i] != '+' && text[i] != '-') throw ParseError("expected '+' or '-'", line, column + static_cast<int>(i));
      if (text[i] == '-') sign = -1;
      ++i;
    }
    first = false;
    std::size_t end = i;
    while (end < text.size() && text[end] != '+' && !(text[end] == '-' && end > i && trim(text.substr(i, end - i)).size() > 0))
      ++end;
    std::string_view term = trim(text.substr(i, end - i));
    if (term.empty()) throw ParseError("empty relation term", line, column + static_cast<int>(i));
    Rational coef = 1;
    if (term.front() == '-') {
      coef = -1;
      term = trim(term.substr(1));
    }
    std::size_t star = term.find('*');
    if (star != std::string_view::npos) {
      try {
        coef *= parse_rational(trim(term.substr(0, star)));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad coefficient '" + std::string(term.substr(0, star)) + "'", line, column + static_cast<int>(i));
      }
      term = term.substr(star + 1);
    }
    r.terms.push_back({sign * coef, parse_path(q, term, line, column + static_cast<int>(i))});
    i = end;
  }
  if (r.terms.empty()) throw ParseError("empty relation", line, column);
  return r;
}

}  // namespace

AlgebraPresentation parse_algebra_file(std::string_view text) {
  AlgebraPresentation p;
  std::string section;
  int truncate = 0, bound = 0;
  bool have_vertices = false;
  std::vector<std::pair<int, std::string>> rel_lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view l = raw;
    if (auto h = l.find('#'); h != std::string_view::npos) l = l.substr(0, h);
    l = trim(l);
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') throw ParseError("unterminated section header", line, 1);
      section = std::string(trim(l.substr(1, l.size() - 2)));
      if (section != "meta" && section != "quiver" && section != "relations")
        throw ParseError("unknown section [" + section + "]", line, 1);
      continue;
    }
    const int col = static_cast<int>(raw.find(l.front())) + 1;
    if (section.empty()) throw ParseError("content before the first section", line, col);
    std::size_t eq = l.find('=');
    if (section == "quiver" && eq == std::string_view::npos) {
      std::size_t colon = l.find(':');
      std::size_t arrow = l.find("->");
      if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon)
        throw ParseError("expected '<arrow>: <src> -> <tgt>'", line, col);
      if (!have_vertices) throw ParseError("arrows must follow 'vertices ='", line, col);
      Arrow a;
      a.name = std::string(trim(l.substr(0, colon)));
      if (a.name.empty()) throw ParseError("empty arrow name", line, col);
      a.source = parse_int(l.substr(colon + 1, arrow - colon - 1), line, col) - 1;
      a.target = parse_int(l.substr(arrow + 2), line, col) - 1;
      if (a.source < 0 || a.target < 0 || a.source >= p.quiver.vertex_count || a.target >= p.quiver.vertex_count)
        throw ParseError("vertex out of range in arrow '" + a.name + "'", line, col);
      if (p.quiver.arrow_index(a.name) >= 0) throw ParseError("duplicate arrow '" + a.name + "'", line, col);
      p.quiver.arrows.push_back(std::move(a));
      continue;
    }
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line, col);
    std::string key(trim(l.substr(0, eq)));
    std::string_view value = trim(l.substr(eq + 1));
    const int vcol = col + static_cast<int>(eq) + 1;
    if (section == "meta") {
      if (key != "name") throw ParseError("unknown key '" + key + "' in [meta]", line, col);
      p.name = std::string(value);
    } else if (section == "quiver") {
      if (key != "vertices") throw ParseError("unknown key '" + key + "' in [quiver]", line, col);
      if (have_vertices) throw ParseError("vertices given twice", line, col);
      p.quiver.vertex_count = parse_int(value, line, vcol);
      if (p.quiver.vertex_count < 1) throw ParseError("need at least one vertex", line, vcol);
      have_vertices = true;
    } else {
      if (key == "truncate") {
        truncate = parse_int(value, line, vcol);
        if (truncate < 1) throw ParseError("truncation length must be positive", line, vcol);
      } else if (key == "bound") {
        bound = parse_int(value, line, vcol);
        if (bound < 1) throw ParseError("nilpotency bound must be positive", line, vcol);
      } else if (key == "rel") {
        rel_lines.emplace_back(line, std::string(value));
      } else {
        throw ParseError("unknown key '" + key + "' in [relations]", line, col);
      }
    }
  }
  if (!have_vertices) throw ParseError("missing [quiver] vertices", 0, 0);
  if (truncate && bound) throw ParseError("give either 'truncate' or 'bound', not both", 0, 0);
  for (const auto& [ln, text] : rel_lines) p.relations.push_back(parse_relation(p.quiver, text, ln, 1));

  auto check = [&](const AlgebraPresentation& candidate) {
    try {
      Algebra alg(candidate);
      return true;
    } catch (const PresentationError&) {
      return false;
    }
  };
  if (truncate) {
    p.nilpotency_bound = truncate;
    p.truncated = true;
    try {
      Algebra alg(p);
    } catch (const PresentationError& e) {
      throw ParseError(e.what(), 0, 0);
    }
  } else if (bound) {
    p.nilpotency_bound = bound;
    try {
      Algebra alg(p);
    } catch (const PresentationError& e) {
      throw ParseError(e.what(), 0, 0);
    }
  } else {
    if (p.relations.empty() && !p.quiver.arrows.empty())
      throw ParseError("no relations: give 'truncate = N' or relations", 0, 0);
    bool found = false;
    for (int n = 2; n <= 32 && !found; ++n) {
      p.nilpotency_bound = n;
      found = check(p);
    }
    if (!found) throw ParseError("could not verify that the relations bound path length", 0, 0);
  }
  return p;
}

AlgebraPresentation load_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_algebra_file(ss.str());
}

std::string write_algebra_file(const AlgebraPresentation& p) {
  std::ostringstream out;
  out << "[meta]\nname = " << p.name << "\n\n[quiver]\nvertices = " << p.quiver.vertex_count << "\n";
  for (const auto& a : p.quiver.arrows) out << a.name << ": " << a.source + 1 << " -> " << a.target + 1 << "\n";
  out << "\n[relations]\n" << (p.truncated ? "truncate = " : "bound = ") << p.nilpotency_bound << "\n";
  for (const auto& r : p.relations) {
    out << "rel =";
    for (std::size_t t = 0; t < r.terms.size(); ++t) {
      const Rational& c = r.terms[t].coefficient;
      if (t == 0)
        out << " " << to_string(c);
      else
        out << (sgn(c) < 0 ? " - " : " + ") << to_string(abs(c));
      out << "*";
      for (std::size_t k = 0; k < r.terms[t].path.arrows.size(); ++k)
        out << (k ? "." : "") << p.quiver.arrows[r.terms[t].path.arrows[k]].name;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

struct ExprParser {
  const Algebra& a;
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, static_cast<int>(i) + 1); }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s.substr(i, tok.size()) == tok) {
      i += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  int number() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected a number");
    if (i - start > 6) fail("number out of range");
    return std::stoi(std::string(s.substr(start, i - start)));
  }
  Module atom() {
    skip();
    if (i >= s.size()) fail("expected P(i), I(i) or S(i)");
    char kind = s[i];
    if (kind != 'P' && kind != 'I' && kind != 'S') fail("expected P(i), I(i) or S(i)");
    ++i;
    expect("(");
    const std::size_t at = i;
    int v = number();
    expect(")");
    if (v < 1 || v > a.vertex_count()) {
      i = at;
      fail("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(a.vertex_count()));
    }
    std::string label = std::string(1, kind) + "(" + std::to_string(v) + ")";
    Module m = kind == 'P' ? projective(a, v - 1) : kind == 'I' ? injective(a, v - 1) : simple(a, v - 1);
    m = m.with_label(label);
    while (eat("/")) {
      expect("rad");
      int k = 1;
      if (eat("^")) k = number();
      if (k < 1) fail("radical power must be positive");
      m = radical_quotient(m, k).module.with_label(label + "/rad^" + std::to_string(k));
      label = m.label();
    }
    return m;
  }
  Module parse() {
    std::vector<Module> parts{atom()};
    while (eat("+")) parts.push_back(atom());
    skip();
    if (i != s.size()) fail("unexpected '" + std::string(s.substr(i, 1)) + "'");
    return parts.size() == 1 ? parts[0] : direct_sum(parts);
  }
};

}  // namespace

Module parse_module_expr(const Algebra& a, std::string_view expr) { return ExprParser{a, expr}.parse(); }

SubBifunctor parse_functor(const Algebra& a, std::string_view text) {
  text = trim(text);
  if (text.substr(0, 4) == "F^M:") return SubBifunctor::upper(parse_module_expr(a, text.substr(4)));
  if (text.substr(0, 3) == "FM:") return SubBifunctor::lower(parse_module_expr(a, text.substr(3)));
  throw ParseError("functor must start with 'FM:' or 'F^M:'", 0, 1);
}

}  // namespace fdrep
