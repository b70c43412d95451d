// Command-line front end for the relative homology library.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "fdrep/endo.hpp"
#include "fdrep/parse.hpp"

using namespace fdrep;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kParse = 2, kViolation = 3, kHypothesis = 4 };

// Human lines first, then the `## key = value` machine block.
class Report {
 public:
  explicit Report(std::string command) { kv("command", std::move(command)); }
  void line(const std::string& s) { human_.push_back(s); }
  void kv(const std::string& key, const std::string& value) { machine_.emplace_back(key, value); }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
  void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
  void kv(const std::string& key, int value) { kv(key, std::to_string(value)); }
  int finish(int code) {
    kv("exit", code);
    for (const auto& h : human_) std::cout << h << "\n";
    for (const auto& [k, v] : machine_) std::cout << "## " << k << " = " << v << "\n";
    return code;
  }

 private:
  std::vector<std::string> human_;
  std::vector<std::pair<std::string, std::string>> machine_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Inputs {
  std::string algebra_file;
  std::uint64_t seed = 0;
};

Algebra load(const Inputs& in) { return Algebra(load_algebra_file(in.algebra_file)); }

Module expr(const Algebra& a, const std::string& text, const std::string& what) {
  try {
    return parse_module_expr(a, text);
  } catch (const ParseError& e) {
    throw ParseError(what + " '" + text + "': " + e.what(), 0, 0);
  }
}

int cmd_check_maxortho(const Inputs& in, const std::string& m_expr, int l, const std::string& mode) {
  Algebra a = load(in);
  Module m = expr(a, m_expr, "module");
  Report r("check-maxortho");
  const MaxOrthoMode md = mode == "enumeration" ? MaxOrthoMode::enumeration : MaxOrthoMode::corollary;
  MaxOrthoReport rep = check_maximal_orthogonal(m, l, md);
  r.line("maximal " + std::to_string(l) + "-orthogonality of " + m_expr + " (" + mode + " mode)");
  r.kv("l", l);
  r.kv("mode", mode);
  if (md == MaxOrthoMode::corollary) {
    r.line("  generator-cogenerator: " + yes(rep.generator_cogenerator));
    r.line("  " + std::to_string(l) + "-selforthogonal: " + yes(rep.selforthogonal));
    r.line("  gldim End(M) <= " + std::to_string(l + 2) + ": " + yes(rep.gldim_bound));
    r.kv("generator_cogenerator", rep.generator_cogenerator);
    r.kv("selforthogonal", rep.selforthogonal);
    r.kv("gldim_end_bound", rep.gldim_bound);
    std::string failed;
    if (!rep.generator_cogenerator) failed += "generator-cogenerator,";
    if (!rep.selforthogonal) failed += "selforthogonal,";
    if (!rep.gldim_bound) failed += "gldim-end,";
    if (!failed.empty()) failed.pop_back();
    r.kv("failed_clauses", failed.empty() ? std::string("none") : failed);
  } else {
    r.line("  indecomposables checked: " + std::to_string(rep.witnesses_checked));
    for (const auto& v : rep.violations) r.line("  violation: " + v);
    r.kv("witnesses", rep.witnesses_checked);
    r.kv("violations", rep.violations.size());
  }
  r.line("verdict: " + std::string(rep.holds ? "maximal orthogonal" : "not maximal orthogonal"));
  r.kv("verdict", rep.holds);
  return r.finish(rep.holds ? kTrue : kFalse);
}

int cmd_ext(const Inputs& in, const std::string& x_expr, const std::string& y_expr, int max_degree,
            const std::string& functor) {
  if (max_degree < 1) throw ParseError("--max-degree must be at least 1", 0, 0);
  Algebra a = load(in);
  Module x = expr(a, x_expr, "X"), y = expr(a, y_expr, "Y");
  Report r("ext");
  std::vector<std::size_t> dims;
  if (functor.empty()) {
    for (int i = 1; i <= max_degree; ++i) dims.push_back(ext_dim(i, x, y));
    r.line("dim Ext^i(" + x_expr + ", " + y_expr + ")");
    r.kv("functor", std::string("absolute"));
  } else {
    SubBifunctor f = parse_functor(a, functor);
    dims = ext_F_dims(x, y, f, max_degree);
    r.line("dim Ext_F^i(" + x_expr + ", " + y_expr + ") for F = " + functor);
    r.kv("functor", functor);
  }
  for (int i = 1; i <= max_degree; ++i) {
    r.line("  i = " + std::to_string(i) + ": " + std::to_string(dims[i - 1]));
    r.kv("ext_" + std::to_string(i), dims[i - 1]);
  }
  bool all_zero = true;
  for (auto d : dims) all_zero = all_zero && d == 0;
  r.kv("all_zero", all_zero);
  return r.finish(kTrue);
}

void tilting_lines(Report& r, const std::string& key, const RelativeTiltingReport& t) {
  r.line("    relative Ext dims: " + join(t.ext_dims) + ", selforthogonal: " + yes(t.selforthogonal));
  r.line("    relative injective dimension bounded: " + yes(t.dimension_bound));
  r.line("    relative injectives resolved by add T: " + yes(t.resolution_condition) +
         (t.failure.empty() ? "" : " (" + t.failure + ")"));
  r.kv(key + "_selforthogonal", t.selforthogonal);
  r.kv(key + "_dimension_bound", t.dimension_bound);
  r.kv(key + "_resolution", t.resolution_condition);
}

void sc_lines(Report& r, const std::string& side, const std::string& key, const SCCotiltingReport& t) {
  r.line("    over " + side + ": Ext dims " + join(t.ext_dims) + ", id bounded: " + yes(t.injective_dimension) +
         ", summand classes " + std::to_string(t.summands) + " / simples " + std::to_string(t.simples));
  r.kv(key + "_selforthogonal", t.selforthogonal);
  r.kv(key + "_injective_dimension", t.injective_dimension);
  r.kv(key + "_summands", t.summands);
  r.kv(key + "_simples", t.simples);
}

int cmd_verify_theorem(const Inputs& in, const std::string& m1_expr, const std::string& m2_expr, int l) {
  if (l < 1) throw ParseError("--l must be positive", 0, 0);
  Algebra a = load(in);
  Module m1 = expr(a, m1_expr, "M1"), m2 = expr(a, m2_expr, "M2");
  Report r("verify-theorem");
  r.kv("l", l);
  TheoremReport t = verify_theorem(m1, m2, l);
  r.line("hypotheses (M1 = " + m1_expr + ", M2 = " + m2_expr + ", l = " + std::to_string(l) + ")");
  r.line("  M1 generator-cogenerator: " + yes(t.m1_generator_cogenerator));
  r.line("  M2 generator-cogenerator: " + yes(t.m2_generator_cogenerator));
  r.line("  gldim End(M1) <= l+2: " + yes(t.m1_gldim_bound));
  r.line("  gldim End(M2) <= l+2: " + yes(t.m2_gldim_bound));
  r.kv("m1_generator_cogenerator", t.m1_generator_cogenerator);
  r.kv("m2_generator_cogenerator", t.m2_generator_cogenerator);
  r.kv("m1_gldim_bound", t.m1_gldim_bound);
  r.kv("m2_gldim_bound", t.m2_gldim_bound);
  r.kv("hypotheses", t.hypotheses_hold());
  if (!t.hypotheses_hold()) {
    std::string failed;
    for (const auto& h : t.failed_hypotheses()) {
      r.line("hypothesis failure: " + h);
      failed += (failed.empty() ? "" : "; ") + h;
    }
    r.kv("failed_hypotheses", failed);
    return r.finish(kHypothesis);
  }
  r.line("condition (a): relative Ext vanishing in degrees 1..l: " + yes(*t.a));
  r.line("    Ext_{F^M1}(M2, M2) dims: " + join(t.ext_upper));
  r.line("    Ext_{F_M2}(M1, M1) dims: " + join(t.ext_lower));
  r.line("condition (b): M2 is F^{M1}-cotilting: " + yes(*t.b));
  tilting_lines(r, "b", *t.b_detail);
  r.line("condition (c): M1 is F_{M2}-cotilting: " + yes(*t.c));
  tilting_lines(r, "c", *t.c_detail);
  r.line("condition (d): Hom(M2, M1) is a cotilting bimodule: " + yes(*t.d));
  sc_lines(r, "End(M1)", "d_end_m1", *t.d_over_end_m1);
  sc_lines(r, "End(M2)^op", "d_end_m2_op", *t.d_over_end_m2_op);
  r.kv("a", *t.a);
  r.kv("b", *t.b);
  r.kv("c", *t.c);
  r.kv("d", *t.d);
  r.kv("consistent", t.consistent());
  if (!t.consistent()) {
    r.line("EQUIVALENCE VIOLATION: the four conditions disagree");
    return r.finish(kViolation);
  }
  r.line(std::string("verdict: all four conditions ") + (t.all_true() ? "hold" : "fail"));
  return r.finish(t.all_true() ? kTrue : kFalse);
}

int cmd_exchange(const Inputs& in, const std::string& n_expr, const std::string& x1_expr, const std::string& x2_expr,
                 int max_len) {
  Algebra a = load(in);
  Module n = expr(a, n_expr, "N"), x1 = expr(a, x1_expr, "X1"), x2 = expr(a, x2_expr, "X2");
  Report r("exchange");
  r.kv("max_len", max_len);
  ExchangeResult e;
  try {
    e = search_exchange_sequence(n, x1, x2, max_len, in.seed);
  } catch (const std::invalid_argument& ex) {
    r.line(std::string("hypothesis failure: ") + ex.what());
    r.kv("failed_hypotheses", std::string(ex.what()));
    return r.finish(kHypothesis);
  }
  r.kv("found", e.found);
  r.kv("trivial", e.trivial);
  if (!e.found) {
    r.line("no exchange sequence: " + e.reason);
    r.kv("reason", e.reason);
    return r.finish(kFalse);
  }
  if (e.trivial) {
    r.line("trivial exchange sequence: X1 and X2 are isomorphic");
    return r.finish(kTrue);
  }
  std::string dims = x2.dim_vector_string();
  for (const auto& t : e.terms) dims += " -> " + t.dim_vector_string();
  dims += " -> " + x1.dim_vector_string();
  r.line("exchange sequence (dimension vectors): 0 -> " + dims + " -> 0");
  for (std::size_t j = 0; j < e.terms.size(); ++j) r.kv("term_" + std::to_string(j), e.terms[j].dim_vector_string());
  r.kv("middle_terms", e.terms.size());
  r.line("  exact: " + yes(e.exact));
  r.line("  minimal left add N-approximations: " + yes(e.left_minimal));
  r.line("  minimal right add N-approximations: " + yes(e.right_minimal));
  r.line("  F^{N+X1}-exact: " + yes(e.upper_exact));
  r.line("  F_{N+X2}-exact: " + yes(e.lower_exact));
  r.kv("exact", e.exact);
  r.kv("left_minimal", e.left_minimal);
  r.kv("right_minimal", e.right_minimal);
  r.kv("upper_exact", e.upper_exact);
  r.kv("lower_exact", e.lower_exact);
  r.kv("conditions_hold", e.conditions_hold());
  return r.finish(e.conditions_hold() ? kTrue : kFalse);
}

int cmd_dtr(const Inputs& in, const std::string& x_expr) {
  Algebra a = load(in);
  Module x = expr(a, x_expr, "X");
  Report r("dtr");
  Module t = dtr(x), s = trd(x);
  r.line("X     = " + x.dim_vector_string());
  r.line("DTr X = " + t.dim_vector_string());
  r.line("TrD X = " + s.dim_vector_string());
  r.kv("x", x.dim_vector_string());
  r.kv("dtr", t.dim_vector_string());
  r.kv("trd", s.dim_vector_string());
  return r.finish(kTrue);
}

int cmd_gldim_endo(const Inputs& in, const std::string& m_expr, int bound) {
  if (bound < 0) throw ParseError("--bound must be non-negative", 0, 0);
  Algebra a = load(in);
  Module m = expr(a, m_expr, "module");
  Report r("gldim-endo");
  EndAlgebra e = end_algebra(m);
  const bool ok = gldim_le(e.algebra, bound);
  r.line("dim End(M) = " + std::to_string(e.algebra.dimension()) + ", dim rad End(M) = " +
         std::to_string(e.algebra.radical().cols()));
  r.line("gldim End(M) <= " + std::to_string(bound) + ": " + yes(ok));
  r.kv("end_dimension", e.algebra.dimension());
  r.kv("bound", bound);
  r.kv("verdict", ok);
  return r.finish(ok ? kTrue : kFalse);
}

int cmd_relexact(const Inputs& in, const std::string& c_expr, const std::string& a_expr,
                 const std::string& class_text, const std::string& functor) {
  Algebra alg = load(in);
  Module c = expr(alg, c_expr, "C"), a = expr(alg, a_expr, "A");
  SubBifunctor f = parse_functor(alg, functor);
  Ext1Space space(c, a);
  std::vector<Rational> coords;
  std::stringstream ss(class_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      coords.push_back(parse_rational(tok));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad class coordinate '" + tok + "'", 0, 0);
    }
  }
  if (coords.size() != space.dimension())
    throw ParseError("class needs " + std::to_string(space.dimension()) + " coordinates (dim Ext^1(C, A))", 0, 0);
  ShortExactSequence eta = space.extension(space.representative(coords));
  Report r("relexact");
  const bool ex = is_F_exact(eta, f);
  const bool by_count = is_F_exact_by_count(eta, f);
  const bool by_pairing = is_F_exact_by_pairing(eta, f);
  r.line("0 -> " + a.dim_vector_string() + " -> " + eta.middle().dim_vector_string() + " -> " + c.dim_vector_string() +
         " -> 0, class (" + class_text + ") in Ext^1(C, A) of dimension " + std::to_string(space.dimension()));
  r.line(functor + "-exact: " + yes(ex) + " (rank test), " + yes(by_count) + " (dimension count), " + yes(by_pairing) +
         " (pairing)");
  r.kv("ext1_dimension", space.dimension());
  r.kv("middle", eta.middle().dim_vector_string());
  r.kv("f_exact", ex);
  r.kv("f_exact_by_count", by_count);
  r.kv("f_exact_by_pairing", by_pairing);
  if (ex != by_count || ex != by_pairing) {
    r.line("EQUIVALENCE VIOLATION: the exactness tests disagree");
    return r.finish(kViolation);
  }
  return r.finish(ex ? kTrue : kFalse);
}

int cmd_prop_gldim(const Inputs& in, const std::string& m_expr, int l) {
  if (l < 0) throw ParseError("--l must be non-negative", 0, 0);
  Algebra a = load(in);
  Module m = expr(a, m_expr, "module");
  Report r("prop-gldim");
  if (!is_generator_cogenerator(m)) {
    r.line("hypothesis failure: M is not a generator-cogenerator");
    r.kv("failed_hypotheses", std::string("generator-cogenerator"));
    return r.finish(kHypothesis);
  }
  if (!is_nakayama(a)) throw ParseError("prop-gldim enumerates witnesses and needs a Nakayama algebra", 0, 0);
  std::vector<Module> witnesses = default_witnesses(a);
  const bool g = gldim_le(end_algebra(m).algebra, l + 2);
  const bool lo = gldim_F_le(SubBifunctor::lower(m), l, witnesses);
  const bool up = gldim_F_le(SubBifunctor::upper(m), l, witnesses);
  r.line("witnesses: all " + std::to_string(witnesses.size()) + " indecomposables");
  r.line("gldim End(M) <= l+2: " + yes(g));
  r.line("gldim F_M <= l (on witnesses): " + yes(lo));
  r.line("gldim F^M <= l (on witnesses): " + yes(up));
  r.kv("witnesses", witnesses.size());
  r.kv("gldim_end", g);
  r.kv("gldim_lower", lo);
  r.kv("gldim_upper", up);
  const bool agree = g == lo && g == up;
  r.kv("agree", agree);
  if (!agree) {
    r.line("EQUIVALENCE VIOLATION: the three bounds disagree");
    return r.finish(kViolation);
  }
  return r.finish(g ? kTrue : kFalse);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative homological algebra over path algebras of quivers"};
  app.require_subcommand(1);
  Inputs in;
  app.add_option("--seed", in.seed, "seed for randomized isomorphism tests")->default_val(0);

  std::string m, x, y, n, x1, x2, functor, mode = "corollary", cls;
  int l = 2, max_degree = 4, max_len = -1, bound = 4;

  auto* c1 = app.add_subcommand("check-maxortho", "maximal l-orthogonality of a module");
  c1->add_option("algebra", in.algebra_file)->required();
  c1->add_option("module", m)->required();
  c1->add_option("--l", l)->default_val(2);
  c1->add_option("--mode", mode)->check(CLI::IsMember({"corollary", "enumeration"}))->default_val("corollary");

  auto* c2 = app.add_subcommand("ext", "dimensions of Ext^i or relative Ext_F^i");
  c2->add_option("algebra", in.algebra_file)->required();
  c2->add_option("X", x)->required();
  c2->add_option("Y", y)->required();
  c2->add_option("--max-degree", max_degree)->default_val(4);
  c2->add_option("--functor", functor, "FM:<expr> or F^M:<expr>");

  auto* c3 = app.add_subcommand("verify-theorem", "the four cotilting conditions for M1, M2");
  c3->add_option("algebra", in.algebra_file)->required();
  c3->add_option("M1", x)->required();
  c3->add_option("M2", y)->required();
  c3->add_option("--l", l)->default_val(2);

  auto* c4 = app.add_subcommand("exchange", "exchange sequence between N+X2 and N+X1");
  c4->add_option("algebra", in.algebra_file)->required();
  c4->add_option("N", n)->required();
  c4->add_option("X1", x1)->required();
  c4->add_option("X2", x2)->required();
  c4->add_option("--max-len", max_len, "largest index m of a middle term (default l-1)");
  c4->add_option("--l", l)->default_val(2);

  auto* c5 = app.add_subcommand("dtr", "dimension vectors of DTr X and TrD X");
  c5->add_option("algebra", in.algebra_file)->required();
  c5->add_option("X", x)->required();

  auto* c6 = app.add_subcommand("gldim-endo", "bounded global dimension of End(M)");
  c6->add_option("algebra", in.algebra_file)->required();
  c6->add_option("module", m)->required();
  c6->add_option("--bound", bound)->default_val(4);

  auto* c7 = app.add_subcommand("relexact", "F-exactness of the extension with a given Ext^1 class");
  c7->add_option("algebra", in.algebra_file)->required();
  c7->add_option("C", x)->required();
  c7->add_option("A", y)->required();
  c7->add_option("--class", cls, "comma-separated coordinates in Ext^1(C, A)")->required();
  c7->add_option("--functor", functor, "FM:<expr> or F^M:<expr>")->required();

  auto* c8 = app.add_subcommand("prop-gldim", "gldim End(M) <= l+2 against gldim F_M, F^M <= l");
  c8->add_option("algebra", in.algebra_file)->required();
  c8->add_option("module", m)->required();
  c8->add_option("--l", l)->default_val(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  try {
    if (c1->parsed()) return cmd_check_maxortho(in, m, l, mode);
    if (c2->parsed()) return cmd_ext(in, x, y, max_degree, functor);
    if (c3->parsed()) return cmd_verify_theorem(in, x, y, l);
    if (c4->parsed()) return cmd_exchange(in, n, x1, x2, max_len >= 0 ? max_len : l - 1);
    if (c5->parsed()) return cmd_dtr(in, x);
    if (c6->parsed()) return cmd_gldim_endo(in, m, bound);
    if (c7->parsed()) return cmd_relexact(in, x, y, cls, functor);
    if (c8->parsed()) return cmd_prop_gldim(in, m, l);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
