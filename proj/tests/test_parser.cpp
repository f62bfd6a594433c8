#include <catch_amalgamated.hpp>

#include "uqgl/expr_parser.hpp"

using namespace uqgl;

namespace {

std::size_t error_offset(const std::string& src, const Signature& sig) {
  try {
    parse_expr(src, sig);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for '" << src << "'");
  return 0;
}

}  // namespace

TEST_CASE("grammar and associativity", "[parser]") {
  const Signature sig(2, 2);
  CHECK(parse_expr("e1*f1 - f1*e1", sig)->str() == "((e1*f1) - (f1*e1))");
  CHECK(parse_expr("e2*e1*e2*e3", sig)->str() == "(((e2*e1)*e2)*e3)");
  CHECK(parse_expr("1 - 2 - 3", sig)->str() == "((1 - 2) - 3)");
  CHECK(parse_expr("  2*( e1 +f1 )", sig)->str() == "(2*(e1 + f1))");
  CHECK(parse_expr("-h1 + h2", sig)->str() == "((-h1) + h2)");
  CHECK(parse_expr("h4", sig)->gen == h(4));
}

TEST_CASE("parse errors carry byte offsets", "[parser]") {
  const Signature sig(2, 1);
  CHECK(error_offset("g1", sig) == 0);
  CHECK(error_offset("e1 + ", sig) == 5);
  CHECK(error_offset("e1 * (f1", sig) == 8);
  CHECK(error_offset("e", sig) == 1);
  CHECK(error_offset("e1 f1", sig) == 3);
  CHECK(error_offset("e3", sig) == 0);   // e index out of range 1..2
  CHECK(error_offset("  h0", sig) == 2);
  CHECK(error_offset("", sig) == 0);
}

TEST_CASE("parsed expressions evaluate like the relation suite", "[parser]") {
  // Every relation without q-scalars or Cartan brackets, printed and parsed
  // back, must give the same operator as direct substitution.
  const Signature sig(3, 1);
  const auto gens = dyson(sig);
  const ExactRing ring;
  std::size_t checked = 0;
  for (const auto& rel : build_relations(sig)) {
    const std::string text = relation_str(rel);
    if (text.find('[') != std::string::npos) continue;
    const OperatorExpr parsed = to_operator(*parse_expr(text, sig), gens);
    const OperatorExpr direct = substitute(rel, gens);
    for (const auto& s : enumerate_up_to(sig, 3).states())
      CHECK(apply(ring, sig, parsed, s, Convention::ExactMonomial) == apply(ring, sig, direct, s, Convention::ExactMonomial));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("state parsing", "[parser]") {
  const Signature sig(2, 1);
  CHECK(parse_state("0,0", sig) == FockState({0, 0}));
  CHECK(parse_state(" 3, 1", sig) == FockState({3, 1}));
  CHECK_THROWS_AS(parse_state("1,2", sig), InvalidArgument);  // Pauli bound
  CHECK_THROWS_AS(parse_state("1", sig), InvalidArgument);
  CHECK_THROWS_AS(parse_state("1;0", sig), ParseError);
  CHECK_THROWS_AS(parse_state("", sig), ParseError);
}
