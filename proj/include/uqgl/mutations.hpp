#pragma once

// Deliberately broken realizations. The verifier must reject each of them;
// used by the test suites and `verify --mutation`.

#include <string>

#include "uqgl/realize.hpp"

namespace uqgl {

enum class Mutation {
  None,
  DropBracketRatio,  // remove [N_2+1]/(N_2+1) from phi(e_2); needs n >= 3
  FlipFermionSign,   // negate the image of the odd generator e_n
  ShiftBoundary,     // [p-N] -> [p-N+1] in phi(e_1)
};

inline const char* to_string(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::DropBracketRatio: return "drop-bracket-ratio";
    case Mutation::FlipFermionSign: return "flip-fermion-sign";
    case Mutation::ShiftBoundary: return "shift-boundary";
  }
  return "?";
}

inline RealizedGenerators mutate(RealizedGenerators g, Mutation m) {
  const Signature& sig = g.sig;
  switch (m) {
    case Mutation::None: break;
    case Mutation::DropBracketRatio: {
      if (sig.n < 3) throw InvalidArgument("drop-bracket-ratio needs a ratio factor on e2 (n >= 3)");
      OperatorExpr out;
      for (const auto& t : g.image(e(2)).terms()) {
        Word w;
        for (const auto& a : t.word) {
          const auto* d = std::get_if<DiagFactor>(&a);
          if (!d || d->kind != DiagKind::BracketRatio) w.push_back(a);
        }
        out += OperatorExpr::from_word(std::move(w), t.scalar);
      }
      g.images[e(2)] = out;
      break;
    }
    case Mutation::FlipFermionSign:
      if (sig.m < 1) throw InvalidArgument("flip-fermion-sign needs an odd generator (m >= 1)");
      g.images[e(sig.n)] = -g.image(e(sig.n));
      break;
    case Mutation::ShiftBoundary: {
      OperatorExpr out;
      for (const auto& t : g.image(e(1)).terms()) {
        Word w = t.word;
        for (auto& a : w)
          if (auto* d = std::get_if<DiagFactor>(&a);
              d && (d->kind == DiagKind::Bracket || d->kind == DiagKind::SqrtBracket) && d->arg.cp == 1)
            d->arg.c0 += 1;
        out += OperatorExpr::from_word(std::move(w), t.scalar);
      }
      g.images[e(1)] = out;
      break;
    }
  }
  return g;
}

}  // namespace uqgl
