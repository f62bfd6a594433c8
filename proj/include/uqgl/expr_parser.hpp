#pragma once

// Parser for user-entered generator expressions:
//
//   expr      := term (('+'|'-') term)*
//   term      := factor ('*' factor)*
//   factor    := INTEGER | GENERATOR | '(' expr ')'
//   GENERATOR := ('e'|'f'|'h') INTEGER
//
// Whitespace is ignored; operators are left-associative. A leading '-' on a
// term is accepted as negation.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "uqgl/error.hpp"
#include "uqgl/fock.hpp"
#include "uqgl/presentation.hpp"
#include "uqgl/realize.hpp"

namespace uqgl {

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& msg)
      : Error("parse error at offset " + std::to_string(offset) + ": " + msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct ExprAst {
  enum class Kind { Integer, Generator, Add, Sub, Mul, Neg };
  Kind kind = Kind::Integer;
  long value = 0;
  GenSymbol gen;
  std::size_t offset = 0;
  std::vector<std::unique_ptr<ExprAst>> children;

  std::string str() const {
    switch (kind) {
      case Kind::Integer: return std::to_string(value);
      case Kind::Generator: return gen.str();
      case Kind::Neg: return "(-" + children[0]->str() + ")";
      case Kind::Add: return "(" + children[0]->str() + " + " + children[1]->str() + ")";
      case Kind::Sub: return "(" + children[0]->str() + " - " + children[1]->str() + ")";
      case Kind::Mul: return "(" + children[0]->str() + "*" + children[1]->str() + ")";
    }
    return "?";
  }
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, const Signature& sig) : src_(src), sig_(sig) {}

  std::unique_ptr<ExprAst> parse() {
    auto e = expr();
    skip();
    if (pos_ != src_.size()) throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static std::unique_ptr<ExprAst> node(ExprAst::Kind k, std::size_t off) {
    auto n = std::make_unique<ExprAst>();
    n->kind = k;
    n->offset = off;
    return n;
  }
  static std::unique_ptr<ExprAst> binary(ExprAst::Kind k, std::unique_ptr<ExprAst> l, std::unique_ptr<ExprAst> r) {
    auto n = node(k, l->offset);
    n->children.push_back(std::move(l));
    n->children.push_back(std::move(r));
    return n;
  }

  std::unique_ptr<ExprAst> expr() {
    auto lhs = signed_term();
    for (;;) {
      if (accept('+')) lhs = binary(ExprAst::Kind::Add, std::move(lhs), term());
      else if (accept('-')) lhs = binary(ExprAst::Kind::Sub, std::move(lhs), term());
      else return lhs;
    }
  }

  std::unique_ptr<ExprAst> signed_term() {
    skip();
    const std::size_t off = pos_;
    if (accept('-')) {
      auto n = node(ExprAst::Kind::Neg, off);
      n->children.push_back(term());
      return n;
    }
    return term();
  }

  std::unique_ptr<ExprAst> term() {
    auto lhs = factor();
    while (accept('*')) lhs = binary(ExprAst::Kind::Mul, std::move(lhs), factor());
    return lhs;
  }

  long integer(const char* what) {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (v > 100000000) throw ParseError(start, "integer too large");
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, std::string("expected ") + what);
    return v;
  }

  std::unique_ptr<ExprAst> factor() {
    skip();
    const std::size_t off = pos_;
    if (pos_ >= src_.size()) throw ParseError(off, "unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = node(ExprAst::Kind::Integer, off);
      n->value = integer("integer");
      return n;
    }
    if (c == 'e' || c == 'f' || c == 'h') {
      ++pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError(pos_, std::string("expected generator index after '") + c + "'");
      const long idx = integer("generator index");
      const GenKind kind = c == 'e' ? GenKind::E : c == 'f' ? GenKind::F : GenKind::H;
      const long hi = kind == GenKind::H ? sig_.r() : sig_.r() - 1;
      if (idx < 1 || idx > hi)
        throw ParseError(off, std::string("generator index ") + c + std::to_string(idx) + " out of range 1.." +
                                  std::to_string(hi));
      auto n = node(ExprAst::Kind::Generator, off);
      n->gen = GenSymbol{kind, static_cast<int>(idx)};
      return n;
    }
    throw ParseError(off, std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::unique_ptr<ExprAst> parse_expr(std::string_view src, const Signature& sig) {
  return detail::ExprParser(src, sig).parse();
}

/// Realized image of a parsed expression.
inline OperatorExpr to_operator(const ExprAst& ast, const RealizedGenerators& gens) {
  switch (ast.kind) {
    case ExprAst::Kind::Integer: return OperatorExpr::from_word({}, CoeffExact(ast.value));
    case ExprAst::Kind::Generator: return gens.image(ast.gen);
    case ExprAst::Kind::Neg: return -to_operator(*ast.children[0], gens);
    case ExprAst::Kind::Add: return to_operator(*ast.children[0], gens) + to_operator(*ast.children[1], gens);
    case ExprAst::Kind::Sub: return to_operator(*ast.children[0], gens) - to_operator(*ast.children[1], gens);
    case ExprAst::Kind::Mul: return to_operator(*ast.children[0], gens) * to_operator(*ast.children[1], gens);
  }
  throw InvalidArgument("bad expression node");
}

/// Parses "l1,l2,..." into a Fock state of the signature.
inline FockState parse_state(std::string_view src, const Signature& sig) {
  std::vector<int> occ;
  std::size_t pos = 0;
  while (true) {
    while (pos < src.size() && src[pos] == ' ') ++pos;
    const std::size_t start = pos;
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      if (v > 1000000) throw ParseError(start, "occupation too large");
      ++pos;
    }
    if (pos == start) throw ParseError(start, "expected occupation number");
    occ.push_back(static_cast<int>(v));
    while (pos < src.size() && src[pos] == ' ') ++pos;
    if (pos == src.size()) break;
    if (src[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  FockState s(std::move(occ));
  if (!s.valid_for(sig))
    throw InvalidArgument("state " + s.str() + " is not a basis state of F(" + std::to_string(sig.n - 1) + "/" +
                          std::to_string(sig.m) + ")");
  return s;
}

}  // namespace uqgl
