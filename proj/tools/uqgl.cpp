// uqgl: relations, verification, matrices, analysis and expression
// evaluation for the Dyson and HP realizations of U_q[gl(n/m)].
//
// Exit codes: 0 success / all pass, 1 verification or analysis failure,
// 2 usage error.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uqgl.hpp"

using namespace uqgl;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 2;
  int m = 1;
  std::string p = "formal";
  std::string realization = "dyson";
  std::string q;
  long cap = -1;
  std::string convention;
  std::string out;
  double tolerance = 1e-10;
  std::string mutation = "none";
  std::string subspace = "F0";
  std::string check;
  long p2 = -1;
  std::vector<long> weight;
  std::string expr;
  std::string state;
};

struct PValue {
  bool formal = true;
  std::optional<long> integer;
  double value = 0.0;
};

double parse_double(const std::string& s, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

PValue parse_p(const std::string& s) {
  PValue p;
  if (s == "formal") return p;
  p.formal = false;
  p.value = parse_double(s, "--p");
  if (p.value == std::floor(p.value) && std::abs(p.value) < 1e9) p.integer = static_cast<long>(p.value);
  return p;
}

RealizationKind parse_kind(const std::string& s) {
  if (s == "dyson") return RealizationKind::Dyson;
  if (s == "hp") return RealizationKind::HP;
  if (s == "hp-deformed") return RealizationKind::HPDeformed;
  throw UsageError("unknown realization '" + s + "'");
}

Mutation parse_mutation(const std::string& s) {
  for (auto m : {Mutation::None, Mutation::DropBracketRatio, Mutation::FlipFermionSign, Mutation::ShiftBoundary})
    if (s == to_string(m)) return m;
  throw UsageError("unknown mutation '" + s + "'");
}

struct Context {
  Options opt;
  Signature sig;
  RealizationKind kind = RealizationKind::Dyson;
  PValue p;
  bool q_formal = true;
  std::vector<double> q;
  Convention conv = Convention::ExactMonomial;
  RealizedGenerators gens;

  bool numeric() const { return !q_formal; }
  bool classical() const { return q.size() == 1 && q.front() == 1.0 && kind == RealizationKind::Dyson; }
  long cap() const { return opt.cap >= 0 ? opt.cap : default_cap(p.integer); }
  long integer_p(const char* what) const {
    if (!p.integer || *p.integer < 0) throw UsageError(std::string(what) + " needs a nonnegative integer --p");
    return *p.integer;
  }
  double single_q() const {
    if (q.size() != 1) throw UsageError("this command needs a single numeric --q");
    return q.front();
  }
};

Context make_context(const Options& opt, const char* default_hp_q) {
  Context c;
  c.opt = opt;
  try {
    c.sig = Signature(opt.n, opt.m);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  c.kind = parse_kind(opt.realization);
  c.p = parse_p(opt.p);
  const bool is_hp = c.kind != RealizationKind::Dyson;
  std::string q = opt.q.empty() ? (is_hp ? default_hp_q : "formal") : opt.q;
  if (q == "formal") {
    if (is_hp) throw UsageError("--realization " + opt.realization + " needs numeric --q (square roots need numbers)");
    if (c.p.formal == false && !c.p.integer) throw UsageError("formal q needs --p formal or an integer");
  } else {
    c.q_formal = false;
    std::stringstream ss(q);
    for (std::string item; std::getline(ss, item, ',');) {
      const double v = parse_double(item, "--q");
      if (!(v > 0.0)) throw UsageError("--q values must be positive");
      c.q.push_back(v);
    }
    if (c.q.empty()) throw UsageError("empty --q list");
  }
  if (is_hp && c.p.formal)
    throw UsageError("--p formal is not allowed with --realization " + opt.realization + " (square roots need numbers)");
  if (c.classical() && !c.p.formal && !c.p.integer) c.q_formal = false;

  if (opt.convention.empty()) c.conv = is_hp ? Convention::Orthonormal : Convention::ExactMonomial;
  else if (opt.convention == "exact" || opt.convention == "exact-monomial") c.conv = Convention::ExactMonomial;
  else if (opt.convention == "orthonormal") c.conv = Convention::Orthonormal;
  else throw UsageError("unknown convention '" + opt.convention + "'");

  try {
    c.gens = mutate(realize(c.kind, c.sig), parse_mutation(opt.mutation));
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return c;
}

/// Calls f with a vector of coefficient rings matching the context:
/// exact (formal q), classical (q = 1, Dyson), real numeric (Dyson) or
/// complex numeric (HP, whose radicands turn negative above p).
template <class F>
int with_rings(const Context& c, F&& f) {
  if (c.q_formal) return f(std::vector<ExactRing>{ExactRing(c.p.formal ? std::nullopt : c.p.integer)});
  if (c.classical() && (c.p.formal || c.p.integer))
    return f(std::vector<ClassicalRing>{ClassicalRing(c.p.formal ? std::nullopt : c.p.integer)});
  if (c.p.formal) throw UsageError("numeric q needs a numeric --p");
  if (c.kind == RealizationKind::Dyson) {
    std::vector<NumericRing<double>> rings;
    for (double q : c.q) rings.emplace_back(q, c.p.value);
    return f(rings);
  }
  std::vector<NumericRing<std::complex<double>>> rings;
  for (double q : c.q) rings.emplace_back(q, c.p.value);
  return f(rings);
}

/// Output stream: --out path or stdout.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw UsageError("cannot open '" + path + "' for writing");
    os = &file;
  }
};

int cmd_relations(const Options& opt) {
  const Context c = make_context(opt, "1.3");
  Sink sink(opt.out);
  for (const auto& rel : build_relations(c.sig)) *sink.os << rel.name << '\t' << relation_str(rel) << '\n';
  return 0;
}

int cmd_verify(const Options& opt) {
  const Context c = make_context(opt, "0.5,0.9,1.3,2");
  VerifyOptions vo;
  vo.cap = c.cap();
  vo.convention = c.conv;
  vo.tolerance = opt.tolerance;
  const auto relations = build_relations(c.sig);
  return with_rings(c, [&](const auto& rings) {
    using Ring = typename std::decay_t<decltype(rings)>::value_type;
    const auto rep = verify_all(std::span<const Ring>(rings), c.gens, relations, vo);
    print_table(std::cout, rep);
    if (!opt.out.empty()) {
      Sink sink(opt.out);
      write_report(*sink.os, rep);
    }
    return rep.all_passed() ? 0 : 1;
  });
}

Subspace parse_subspace(const std::string& s) {
  for (auto v : {Subspace::F0, Subspace::F1Slice, Subspace::QuotientF0})
    if (s == to_string(v)) return v;
  throw UsageError("unknown subspace '" + s + "' (F0, F1-slice, quotient-F0)");
}

int cmd_matrices(const Options& opt) {
  const Context c = make_context(opt, "1.3");
  const long p = c.integer_p("matrices");
  const Subspace sub = parse_subspace(opt.subspace);
  if (c.numeric()) c.single_q();
  Sink sink(opt.out);
  return with_rings(c, [&](const auto& rings) {
    const auto& ring = rings.front();
    const auto set = materialize(ring, c.gens, p, sub, c.conv, c.cap());
    write_matrices(*sink.os, to_matrix_file(ring, set));
    return 0;
  });
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int check_invariance_cmd(const Context& c) {
  const long p = c.integer_p("invariance");
  const long cap = std::max(c.cap(), p + 1);
  return with_rings(c, [&](const auto& rings) {
    const auto rep = check_invariance(rings.front(), c.gens, p, cap, c.conv);
    std::cout << "invariance  realization " << to_string(c.kind) << "  p=" << p << "  cap=" << cap << "\n";
    std::cout << "  F0 invariant: " << yes_no(rep.f0_invariant) << "  (" << rep.f0_checked << " applications)\n";
    if (rep.f0_witness)
      std::cout << "    witness: " << rep.f0_witness->gen.str() << " |" << rep.f0_witness->state.str() << "> has component "
                << rep.f0_witness->coefficient << " on |" << rep.f0_witness->target.str() << ">\n";
    std::cout << "  F1 invariant: " << yes_no(rep.f1_invariant) << "  (" << rep.f1_checked << " applications)\n";
    if (rep.f1_witness)
      std::cout << "    witness: " << rep.f1_witness->gen.str() << " |" << rep.f1_witness->state.str() << "> has component "
                << rep.f1_witness->coefficient << " on |" << rep.f1_witness->target.str() << ">\n";
    const bool expected = c.kind == RealizationKind::Dyson ? rep.f1_invariant && !rep.f0_invariant
                                                           : rep.f0_invariant && rep.f1_invariant;
    std::cout << "  structure as expected for " << to_string(c.kind) << ": " << yes_no(expected) << "\n";
    return expected ? 0 : 1;
  });
}

int check_unitarity_cmd(const Context& c) {
  const long p = c.integer_p("unitarity");
  const auto rep = check_unitarity(NumericRing<double>(c.single_q(), static_cast<double>(p)), c.gens, p, c.opt.tolerance);
  std::cout << "unitarity  realization " << to_string(c.kind) << "  p=" << p << "  q=" << format_double(c.q.front())
            << "  dim F0=" << dim_F0(c.sig, p) << "\n";
  for (std::size_t i = 0; i < rep.transpose_residual.size(); ++i)
    std::cout << "  max |e" << i + 1 << "^T - f" << i + 1 << "| = " << format_double(rep.transpose_residual[i]) << "\n";
  std::cout << "  h real diagonal: " << yes_no(rep.h_real_diagonal) << "\n";
  if (rep.witness) {
    const auto& w = *rep.witness;
    std::cout << "  witness: (e" << w.index << ")^T[" << w.row_state.str() << ";" << w.col_state.str()
              << "] = " << format_double(w.e_transposed) << "  vs  f" << w.index << "[" << w.row_state.str() << ";"
              << w.col_state.str() << "] = " << format_double(w.f_value) << "\n";
  }
  std::cout << "  unitary (tolerance " << format_double(rep.tolerance) << "): " << yes_no(rep.unitary) << "\n";
  return rep.unitary ? 0 : 1;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

int check_highest_weight_cmd(const Context& c) {
  const long p = c.integer_p("highest-weight");
  return with_rings(c, [&](const auto& rings) {
    const auto w = highest_weight(rings.front(), c.gens, p, c.conv);
    std::vector<long> expected(static_cast<std::size_t>(c.sig.r()), 0);
    expected[0] = p;
    std::cout << "highest weight  p=" << p << "  m=(" << join(w.m) << ")  expected (" << join(expected) << ")\n";
    std::cout << "  vacuum annihilated by every e_i: " << yes_no(w.vacuum_annihilated) << "\n";
    return w.m == expected && w.vacuum_annihilated ? 0 : 1;
  });
}

int check_typicality_cmd(const Context& c) {
  std::vector<long> weight = c.opt.weight;
  if (weight.empty()) {
    weight.assign(static_cast<std::size_t>(c.sig.r()), 0);
    weight[0] = c.integer_p("typicality");
  }
  const auto rep = essentially_typical(c.sig, weight);
  std::cout << "typicality  weight=(" << join(weight) << ")\n";
  std::cout << "  l_1..l_n = {" << join(rep.first) << "}\n";
  std::cout << "  l_{n+1}..l_r = {" << join(rep.second) << "}\n";
  std::cout << "  intersection = {" << join(rep.intersection) << "}\n";
  std::cout << "  essentially typical: " << yes_no(rep.essentially_typical) << "\n";
  return 0;
}

int check_inequivalence_cmd(const Context& c) {
  const long p1 = c.integer_p("inequivalence");
  if (c.opt.p2 < 0) throw UsageError("inequivalence needs --p2");
  if (c.opt.p2 == p1) throw UsageError("inequivalence needs --p2 different from --p");
  const auto rep = inequivalence(c.sig, p1, c.opt.p2, c.single_q());
  auto spec = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + format_double(v[k]);
    return s;
  };
  std::cout << "inequivalence  p=" << p1 << " vs p=" << rep.p2 << "\n";
  std::cout << "  dim F0: " << rep.dim1 << " vs " << rep.dim2 << "\n";
  std::cout << "  spectrum h1: {" << spec(rep.spectrum1) << "} vs {" << spec(rep.spectrum2) << "}\n";
  std::cout << "  inequivalent: " << yes_no(rep.inequivalent) << "\n";
  return rep.inequivalent ? 0 : 1;
}

int check_cyclicity_cmd(const Context& c) {
  const long p = c.integer_p("cyclicity");
  const auto rep = cyclicity(NumericRing<double>(c.single_q(), static_cast<double>(p)), c.gens, p);
  std::cout << "cyclicity  p=" << p << "  dim F0=" << rep.dim << "  rank from vacuum=" << rep.rank_from_vacuum << "\n";
  std::size_t worst = rep.dim;
  for (auto r : rep.rank_from_basis) worst = std::min(worst, r);
  std::cout << "  minimum rank over basis vectors=" << worst << "\n";
  std::cout << "  cyclic from every basis vector: " << yes_no(rep.cyclic_from_every_basis_vector) << "\n";
  return rep.cyclic_from_every_basis_vector && rep.rank_from_vacuum == rep.dim ? 0 : 1;
}

int check_deformed_cmd(const Context& c) {
  if (c.p.formal) throw UsageError("deformed-ops needs a numeric --p");
  const NumericRing<std::complex<double>> ring(c.single_q(), c.p.value);
  const double tol = c.opt.tolerance < 1e-10 ? c.opt.tolerance : 1e-12;
  const auto rep = check_deformed_oscillators(ring, c.sig, c.cap(), tol);
  std::cout << "deformed oscillators  q=" << format_double(c.q.front()) << "  cap=" << c.cap() << "\n";
  for (const auto& ch : rep.checks)
    if (!ch.passed || ch.name.find("qbracket") == 0 || ch.name == "hp-vs-hp-deformed")
      std::cout << "  " << ch.name << "  " << format_double(ch.residual) << "  " << (ch.passed ? "pass" : "FAIL") << "\n";
  for (std::size_t k = 0; k < rep.fermionic_variant.size(); ++k)
    std::cout << "  fermionic mode " << c.sig.n + static_cast<int>(k) << ": q-anticommutator equals "
              << rep.fermionic_variant[k] << "\n";
  std::cout << "  cross-mode q-bracket (i != j, informational): " << format_double(rep.cross_mode_q_bracket) << "\n";
  std::cout << "  all checks pass: " << yes_no(rep.all_passed()) << "\n";
  return rep.all_passed() ? 0 : 1;
}

int check_reimport_cmd(const Context& c) {
  const long p = c.integer_p("reimport");
  const Subspace sub = parse_subspace(c.opt.subspace);
  if (c.numeric()) c.single_q();
  return with_rings(c, [&](const auto& rings) {
    const auto& ring = rings.front();
    const auto set = materialize(ring, c.gens, p, sub, c.conv, c.cap());
    const MatrixFile direct = to_matrix_file(ring, set);
    bool same = reimport_roundtrip(ring, set);
    if (!c.opt.out.empty()) {
      {
        Sink sink(c.opt.out);
        write_matrices(*sink.os, direct);
      }
      std::ifstream in(c.opt.out);
      same = same && read_matrices(in) == direct;
    }
    std::size_t entries = 0;
    for (const auto& [name, g] : direct.generators) entries += g.entries.size();
    std::cout << "reimport  " << direct.generators.size() << " generators, " << entries << " entries: "
              << (same ? "identical" : "MISMATCH") << "\n";
    return same ? 0 : 1;
  });
}

int cmd_analyze(const Options& opt) {
  const Context c = make_context(opt, "1.3");
  const bool hp_only = opt.check == "cyclicity" || opt.check == "inequivalence";
  if (hp_only && c.kind == RealizationKind::Dyson) throw UsageError(opt.check + " is defined for the HP realization");
  if (opt.check == "invariance") return check_invariance_cmd(c);
  if (opt.check == "unitarity") {
    if (c.q_formal) throw UsageError("unitarity needs a numeric --q");
    return check_unitarity_cmd(c);
  }
  if (opt.check == "highest-weight") return check_highest_weight_cmd(c);
  if (opt.check == "typicality") return check_typicality_cmd(c);
  if (opt.check == "inequivalence") return check_inequivalence_cmd(c);
  if (opt.check == "cyclicity") return check_cyclicity_cmd(c);
  if (opt.check == "deformed-ops") {
    if (c.q_formal) throw UsageError("deformed-ops needs a numeric --q");
    return check_deformed_cmd(c);
  }
  if (opt.check == "reimport") return check_reimport_cmd(c);
  throw UsageError("unknown check '" + opt.check + "'");
}

int cmd_eval(const Options& opt) {
  const Context c = make_context(opt, "1.3");
  if (c.numeric()) c.single_q();
  std::unique_ptr<ExprAst> ast;
  FockState state;
  try {
    ast = parse_expr(opt.expr, c.sig);
    state = parse_state(opt.state, c.sig);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const OperatorExpr x = to_operator(*ast, c.gens);
  return with_rings(c, [&](const auto& rings) {
    const auto& ring = rings.front();
    const auto out = apply(ring, c.sig, x, state, c.conv);
    if (out.empty()) std::cout << "0\n";
    for (const auto& [t, coef] : out.entries()) std::cout << t.str() << '\t' << ring.format(coef) << '\n';
    return 0;
  });
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "number of even indices (n >= 2)")->required();
  app->add_option("--m", o.m, "number of odd indices (m >= 0)")->required();
  app->add_option("--p", o.p, "p: integer, real, or formal")->capture_default_str();
  app->add_option("--realization", o.realization, "dyson, hp or hp-deformed")->capture_default_str();
  app->add_option("--q", o.q, "q: formal, 1, or comma-separated positive reals");
  app->add_option("--cap", o.cap, "probe cap (default p+4 for small integer p, else 6)");
  app->add_option("--convention", o.convention, "exact or orthonormal");
  app->add_option("--out", o.out, "output path");
  app->add_option("--tolerance", o.tolerance, "numeric tolerance")->capture_default_str();
  app->add_option("--mutation", o.mutation, "none, drop-bracket-ratio, flip-fermion-sign, shift-boundary")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyson and Holstein-Primakoff realizations of U_q[gl(n/m)]"};
  app.require_subcommand(1);
  Options o;
  auto* relations = app.add_subcommand("relations", "print the defining relations, one per line");
  auto* verify = app.add_subcommand("verify", "check every relation on the realized generators");
  auto* matrices = app.add_subcommand("matrices", "export generator matrices on F0, the F1 slice or the quotient");
  auto* analyze = app.add_subcommand("analyze", "representation-level checks");
  auto* eval = app.add_subcommand("eval", "apply a generator expression to a Fock state");
  for (auto* sub : {relations, verify, matrices, analyze, eval}) add_common(sub, o);
  for (auto* sub : {matrices, analyze})
    sub->add_option("--subspace", o.subspace, "F0, F1-slice or quotient-F0")->capture_default_str();
  analyze
      ->add_option("--check", o.check,
                   "invariance, unitarity, highest-weight, typicality, inequivalence, cyclicity, deformed-ops, reimport")
      ->required();
  analyze->add_option("--p2", o.p2, "second p for inequivalence");
  analyze->add_option("--weight", o.weight, "integral weight m_1..m_r for typicality")->delimiter(',');
  eval->add_option("--expr", o.expr, "expression in e_i, f_i, h_i, integers, + - * ( )")->required();
  eval->add_option("--state", o.state, "occupations l1,l2,...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*relations) return cmd_relations(o);
    if (*verify) return cmd_verify(o);
    if (*matrices) return cmd_matrices(o);
    if (*analyze) return cmd_analyze(o);
    if (*eval) return cmd_eval(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
