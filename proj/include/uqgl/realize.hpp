#pragma once

// Dyson and Holstein-Primakoff realizations of U_q[gl(n/m)] in W(n-1/m),
// the deformed oscillators and the deformed-operator form of the HP map.

#include <map>
#include <string>
#include <vector>

#include "uqgl/error.hpp"
#include "uqgl/fock.hpp"
#include "uqgl/presentation.hpp"
#include "uqgl/weyl.hpp"

namespace uqgl {

enum class RealizationKind { Dyson, HP, HPDeformed };

inline const char* to_string(RealizationKind k) {
  switch (k) {
    case RealizationKind::Dyson: return "dyson";
    case RealizationKind::HP: return "hp";
    case RealizationKind::HPDeformed: return "hp-deformed";
  }
  return "?";
}

/// Images of every Chevalley generator, plus the affine eigenvalue of each
/// (diagonal) h-image so Cartan brackets [h_i +- h_j] can be realized.
struct RealizedGenerators {
  RealizationKind kind = RealizationKind::Dyson;
  Signature sig;
  std::map<GenSymbol, OperatorExpr> images;
  std::vector<Affine> h_values;  // h_values[i-1] is the eigenvalue of h_i

  const OperatorExpr& image(const GenSymbol& g) const {
    auto it = images.find(g);
    if (it == images.end()) throw InvalidArgument("no image for generator " + g.str());
    return it->second;
  }

  /// Diagonal operator [sum sign*h] built from the h eigenvalues.
  OperatorExpr h_bracket(const HBracket& b) const {
    Affine a;
    for (const auto& [i, sign] : b.parts) {
      if (i < 1 || i > sig.r()) throw InvalidArgument("h index out of range in " + b.str());
      a += sign > 0 ? h_values[static_cast<std::size_t>(i - 1)] : -h_values[static_cast<std::size_t>(i - 1)];
    }
    return OperatorExpr::diag(DiagKind::Bracket, a);
  }
};

namespace detail {

inline void fill_cartan(const Signature& sig, RealizedGenerators& g) {
  g.sig = sig;
  g.h_values.clear();
  g.h_values.push_back(Affine::p_minus_total(sig));
  for (int i = 2; i <= sig.r(); ++i) g.h_values.push_back(Affine::occupation(sig, i - 1));
  for (int i = 1; i <= sig.r(); ++i)
    g.images[h(i)] = OperatorExpr::diag(DiagKind::Linear, g.h_values[static_cast<std::size_t>(i - 1)]);
}

inline DiagFactor ratio(const Signature& sig, int mode, long shift) {
  return {DiagKind::BracketRatio, Affine::occupation(sig, mode, shift), mode};
}
inline DiagFactor angle(const Signature& sig, int mode, long shift) {
  return {DiagKind::AngleBracket, Affine::occupation(sig, mode, shift), mode};
}

}  // namespace detail

/// Dyson map: non-unitary, square-root free, valid for any p.
inline RealizedGenerators dyson(const Signature& sig) {
  RealizedGenerators g;
  g.kind = RealizationKind::Dyson;
  detail::fill_cartan(sig, g);
  const int n = sig.n, top = sig.r() - 1;

  g.images[e(1)] = OperatorExpr::from_word(
      {detail::ratio(sig, 1, 1), DiagFactor{DiagKind::Bracket, Affine::p_minus_total(sig)}, Lower{1}});
  for (int i = 2; i <= std::min(n - 1, top); ++i)
    g.images[e(i)] = OperatorExpr::from_word({detail::ratio(sig, i, 1), Raise{i - 1}, Lower{i}});
  for (int i = std::max(n, 2); i <= top; ++i) g.images[e(i)] = OperatorExpr::from_word({Raise{i - 1}, Lower{i}});

  g.images[f(1)] = OperatorExpr::from_word({Raise{1}});
  for (int i = 2; i <= std::min(n, top); ++i)
    g.images[f(i)] = OperatorExpr::from_word({detail::ratio(sig, i - 1, 1), Raise{i}, Lower{i - 1}});
  for (int i = n + 1; i <= top; ++i) g.images[f(i)] = OperatorExpr::from_word({Raise{i}, Lower{i - 1}});
  return g;
}

/// Holstein-Primakoff map: square-root coefficients, unitarizable on F0.
inline RealizedGenerators hp(const Signature& sig) {
  RealizedGenerators g;
  g.kind = RealizationKind::HP;
  detail::fill_cartan(sig, g);
  const int top = sig.r() - 1;

  g.images[e(1)] = OperatorExpr::from_word(
      {DiagFactor{DiagKind::SqrtBracket, Affine::p_minus_total(sig)}, detail::angle(sig, 1, 1), Lower{1}});
  g.images[f(1)] = OperatorExpr::from_word(
      {DiagFactor{DiagKind::SqrtBracket, Affine::p_minus_total(sig, 1)}, detail::angle(sig, 1, 0), Raise{1}});
  for (int i = 2; i <= top; ++i) {
    g.images[e(i)] = OperatorExpr::from_word(
        {detail::angle(sig, i - 1, 0), detail::angle(sig, i, 1), Raise{i - 1}, Lower{i}});
    g.images[f(i)] = OperatorExpr::from_word(
        {detail::angle(sig, i - 1, 1), detail::angle(sig, i, 0), Raise{i}, Lower{i - 1}});
  }
  return g;
}

/// Deformed oscillators: A~_i^- = <N_i+1> A_i^-, A~_i^+ = <N_i> A_i^+, N~_i = N_i.
struct TildeOps {
  std::vector<OperatorExpr> lower;   // lower[i-1] = A~_i^-
  std::vector<OperatorExpr> raise;   // raise[i-1] = A~_i^+
  std::vector<OperatorExpr> number;  // number[i-1] = N~_i

  const OperatorExpr& minus(int i) const { return lower.at(static_cast<std::size_t>(i - 1)); }
  const OperatorExpr& plus(int i) const { return raise.at(static_cast<std::size_t>(i - 1)); }
  const OperatorExpr& num(int i) const { return number.at(static_cast<std::size_t>(i - 1)); }
};

inline TildeOps tilde_ops(const Signature& sig) {
  TildeOps t;
  for (int i = 1; i <= sig.modes(); ++i) {
    t.lower.push_back(OperatorExpr::from_word({detail::angle(sig, i, 1), Lower{i}}));
    t.raise.push_back(OperatorExpr::from_word({detail::angle(sig, i, 0), Raise{i}}));
    t.number.push_back(number_op(sig, i));
  }
  return t;
}

/// HP map written through the deformed oscillators.
inline RealizedGenerators hp_deformed(const Signature& sig) {
  RealizedGenerators g;
  g.kind = RealizationKind::HPDeformed;
  detail::fill_cartan(sig, g);
  const TildeOps t = tilde_ops(sig);
  const int top = sig.r() - 1;

  g.images[e(1)] = OperatorExpr::diag(DiagKind::SqrtBracket, Affine::p_minus_total(sig)) * t.minus(1);
  g.images[f(1)] = OperatorExpr::diag(DiagKind::SqrtBracket, Affine::p_minus_total(sig, 1)) * t.plus(1);
  for (int i = 2; i <= top; ++i) {
    g.images[e(i)] = t.plus(i - 1) * t.minus(i);
    g.images[f(i)] = t.plus(i) * t.minus(i - 1);
  }
  return g;
}

inline RealizedGenerators realize(RealizationKind kind, const Signature& sig) {
  switch (kind) {
    case RealizationKind::Dyson: return dyson(sig);
    case RealizationKind::HP: return hp(sig);
    case RealizationKind::HPDeformed: return hp_deformed(sig);
  }
  throw InvalidArgument("unknown realization");
}

/// Image of a generator expression: sum of scalar * product of images, with
/// Cartan brackets realized through the diagonal h-images.
inline OperatorExpr substitute(const GenExpr& g, const RealizedGenerators& gens) {
  OperatorExpr out;
  for (const auto& term : g.terms) {
    OperatorExpr prod = OperatorExpr::from_word({}, term.scalar);
    for (const auto& a : term.word) {
      if (const auto* s = std::get_if<GenSymbol>(&a)) prod = prod * gens.image(*s);
      else prod = prod * gens.h_bracket(std::get<HBracket>(a));
    }
    out += prod;
  }
  return out;
}

/// lhs image minus rhs image.
inline OperatorExpr substitute(const Relation& rel, const RealizedGenerators& gens) {
  return substitute(rel.lhs, gens) - substitute(rel.rhs, gens);
}

}  // namespace uqgl
