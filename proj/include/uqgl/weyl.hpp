#pragma once

// Operator engine for the Weyl superalgebra W(n-1/m): words in graded
// creation/annihilation atoms and diagonal factors, applied lazily to Fock
// states. No truncation is involved; a word maps a basis state to a single
// basis state (or to zero).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "uqgl/coeff.hpp"
#include "uqgl/error.hpp"
#include "uqgl/fock.hpp"
#include "uqgl/rings.hpp"

namespace uqgl {

/// c0 + cp*p + sum_i coeff_i N_i, evaluated on occupation states.
struct Affine {
  long c0 = 0;
  int cp = 0;
  std::vector<int> coeff;  // per mode, may be shorter than the mode count

  static Affine constant(long c) { return {c, 0, {}}; }
  /// N_mode + shift
  static Affine occupation(const Signature& sig, int mode, long shift = 0) {
    mode_parity(sig, mode);
    Affine a{shift, 0, std::vector<int>(static_cast<std::size_t>(sig.modes()), 0)};
    a.coeff[static_cast<std::size_t>(mode - 1)] = 1;
    return a;
  }
  /// N + shift
  static Affine total(const Signature& sig, long shift = 0) {
    return {shift, 0, std::vector<int>(static_cast<std::size_t>(sig.modes()), 1)};
  }
  /// p - N + shift
  static Affine p_minus_total(const Signature& sig, long shift = 0) {
    return {shift, 1, std::vector<int>(static_cast<std::size_t>(sig.modes()), -1)};
  }

  long eval(const FockState& s) const {
    long v = c0;
    for (std::size_t i = 0; i < coeff.size(); ++i) v += static_cast<long>(coeff[i]) * s.occupations()[i];
    return v;
  }

  Affine& operator+=(const Affine& o) {
    c0 += o.c0;
    cp += o.cp;
    if (coeff.size() < o.coeff.size()) coeff.resize(o.coeff.size(), 0);
    for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] += o.coeff[i];
    return *this;
  }
  Affine operator-() const {
    Affine a = *this;
    a.c0 = -a.c0;
    a.cp = -a.cp;
    for (auto& c : a.coeff) c = -c;
    return a;
  }
  friend Affine operator+(Affine x, const Affine& y) { return x += y; }
  friend Affine operator-(Affine x, const Affine& y) { return x += -y; }

  bool depends_on_p() const { return cp != 0; }

  friend bool operator==(const Affine& x, const Affine& y) {
    if (x.c0 != y.c0 || x.cp != y.cp) return false;
    const std::size_t len = std::max(x.coeff.size(), y.coeff.size());
    for (std::size_t i = 0; i < len; ++i) {
      const int a = i < x.coeff.size() ? x.coeff[i] : 0;
      const int b = i < y.coeff.size() ? y.coeff[i] : 0;
      if (a != b) return false;
    }
    return true;
  }

  std::string str() const {
    std::string s;
    auto put = [&](long c, const std::string& sym) {
      if (c == 0) return;
      if (c < 0) s += '-';
      else if (!s.empty()) s += '+';
      const long a = c < 0 ? -c : c;
      if (sym.empty()) s += std::to_string(a);
      else s += (a == 1 ? "" : std::to_string(a) + "*") + sym;
    };
    put(cp, "p");
    for (std::size_t i = 0; i < coeff.size(); ++i) put(coeff[i], "N" + std::to_string(i + 1));
    put(c0, "");
    return s.empty() ? "0" : s;
  }
};

enum class DiagKind {
  Linear,        // the affine value itself (h images)
  Bracket,       // [x]
  BracketRatio,  // [x]/x
  AngleBracket,  // ([x]/x)^{1/2} on bosonic modes, 1 on fermionic modes
  SqrtBracket,   // [x]^{1/2}, exactly 0 when x = 0
  QPower,        // q^x
};

struct DiagFactor {
  DiagKind kind = DiagKind::Linear;
  Affine arg;
  int mode = 0;  // the mode whose parity controls AngleBracket

  friend bool operator==(const DiagFactor&, const DiagFactor&) = default;
};

struct Raise {
  int mode;
  friend bool operator==(const Raise&, const Raise&) = default;
};
struct Lower {
  int mode;
  friend bool operator==(const Lower&, const Lower&) = default;
};

using Atom = std::variant<Raise, Lower, DiagFactor>;
/// Atoms apply right to left: word[size-1] acts first.
using Word = std::vector<Atom>;

inline Parity atom_parity(const Signature& sig, const Atom& atom) {
  if (const auto* r = std::get_if<Raise>(&atom)) return mode_parity(sig, r->mode);
  if (const auto* l = std::get_if<Lower>(&atom)) return mode_parity(sig, l->mode);
  return Parity::Even;
}

inline Parity word_parity(const Signature& sig, const Word& word) {
  Parity p = Parity::Even;
  for (const auto& a : word) p = p + atom_parity(sig, a);
  return p;
}

inline std::string atom_str(const Atom& atom) {
  if (const auto* r = std::get_if<Raise>(&atom)) return "A" + std::to_string(r->mode) + "+";
  if (const auto* l = std::get_if<Lower>(&atom)) return "A" + std::to_string(l->mode) + "-";
  const auto& d = std::get<DiagFactor>(atom);
  const std::string x = d.arg.str();
  switch (d.kind) {
    case DiagKind::Linear: return "(" + x + ")";
    case DiagKind::Bracket: return "[" + x + "]";
    case DiagKind::BracketRatio: return "[" + x + "]/(" + x + ")";
    case DiagKind::AngleBracket: return "<" + x + ">";
    case DiagKind::SqrtBracket: return "sqrt[" + x + "]";
    case DiagKind::QPower: return "q^(" + x + ")";
  }
  return "?";
}

struct Term {
  CoeffExact scalar{1};
  Word word;
};

/// Formal linear combination of words with exact scalars.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  static OperatorExpr identity() { return from_word({}); }
  static OperatorExpr from_word(Word w, CoeffExact scalar = 1) {
    OperatorExpr e;
    if (!scalar.is_zero()) e.terms_.push_back({std::move(scalar), std::move(w)});
    return e;
  }
  static OperatorExpr atom(Atom a) { return from_word({std::move(a)}); }
  static OperatorExpr diag(DiagKind kind, Affine arg, int mode = 0) {
    return atom(DiagFactor{kind, std::move(arg), mode});
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  OperatorExpr& operator+=(const OperatorExpr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  OperatorExpr operator-() const {
    OperatorExpr e = *this;
    for (auto& t : e.terms_) t.scalar = -t.scalar;
    return e;
  }
  OperatorExpr& operator-=(const OperatorExpr& o) { return *this += -o; }
  friend OperatorExpr operator+(OperatorExpr x, const OperatorExpr& y) { return x += y; }
  friend OperatorExpr operator-(OperatorExpr x, const OperatorExpr& y) { return x -= y; }

  /// Composition: (x*y)v = x(y v).
  friend OperatorExpr operator*(const OperatorExpr& x, const OperatorExpr& y) {
    OperatorExpr e;
    for (const auto& tx : x.terms_)
      for (const auto& ty : y.terms_) {
        Word w = tx.word;
        w.insert(w.end(), ty.word.begin(), ty.word.end());
        CoeffExact s = tx.scalar * ty.scalar;
        if (!s.is_zero()) e.terms_.push_back({std::move(s), std::move(w)});
      }
    return e;
  }
  friend OperatorExpr operator*(const CoeffExact& s, const OperatorExpr& x) {
    OperatorExpr e;
    if (s.is_zero()) return e;
    for (const auto& t : x.terms_) e.terms_.push_back({s * t.scalar, t.word});
    return e;
  }

  /// Merges terms with identical words and drops zero scalars.
  OperatorExpr collected() const {
    OperatorExpr e;
    for (const auto& t : terms_) {
      auto it = std::find_if(e.terms_.begin(), e.terms_.end(), [&](const Term& u) { return u.word == t.word; });
      if (it == e.terms_.end()) e.terms_.push_back(t);
      else it->scalar += t.scalar;
    }
    std::erase_if(e.terms_, [](const Term& t) { return t.scalar.is_zero(); });
    return e;
  }

  /// Common parity of all terms; throws on non-homogeneous input.
  Parity parity(const Signature& sig) const {
    if (terms_.empty()) return Parity::Even;
    const Parity p = word_parity(sig, terms_.front().word);
    for (const auto& t : terms_)
      if (word_parity(sig, t.word) != p) throw InvalidArgument("operator expression is not parity-homogeneous");
    return p;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k) s += " + ";
      s += "(" + terms_[k].scalar.str() + ")";
      for (const auto& a : terms_[k].word) s += " " + atom_str(a);
    }
    return s;
  }

 private:
  std::vector<Term> terms_;
};

/// Graded (q-)commutator x*y - (-1)^{deg x deg y} qfactor y*x.
inline OperatorExpr super_commutator(const Signature& sig, const OperatorExpr& x, const OperatorExpr& y,
                                     const CoeffExact& qfactor = 1) {
  const bool both_odd = x.parity(sig) == Parity::Odd && y.parity(sig) == Parity::Odd;
  const CoeffExact sign = both_odd ? CoeffExact(-1) : CoeffExact(1);
  return x * y - (sign * qfactor) * (y * x);
}

enum class Convention {
  ExactMonomial,  // |l>> = (A^+)^l |0>: raise by 1, lower by l
  Orthonormal,    // |l> normalized: raise by sqrt(l+1), lower by sqrt(l)
};

inline const char* to_string(Convention c) {
  return c == Convention::ExactMonomial ? "exact-monomial" : "orthonormal";
}

/// Finite linear combination of Fock states; zero coefficients are never stored.
template <class V>
class StateVector {
 public:
  using map_type = std::map<FockState, V>;

  StateVector() = default;
  StateVector(const FockState& s, V c) { add(s, std::move(c)); }

  const map_type& entries() const& { return entries_; }
  map_type entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  void add(const FockState& s, const V& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = entries_.try_emplace(s, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) entries_.erase(it);
    }
  }

  StateVector& operator+=(const StateVector& o) {
    for (const auto& [s, c] : o.entries_) add(s, c);
    return *this;
  }
  StateVector scaled(const V& a) const {
    StateVector r;
    for (const auto& [s, c] : entries_) r.add(s, a * c);
    return r;
  }

  friend bool operator==(const StateVector& x, const StateVector& y) {
    if (x.entries_.size() != y.entries_.size()) return false;
    auto it = y.entries_.begin();
    for (const auto& [s, c] : x.entries_) {
      if (!(s == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  map_type entries_;
};

template <CoefficientRing Ring>
typename Ring::value_type eval_diag(const Ring& ring, const Signature& sig, const DiagFactor& d,
                                    const FockState& s) {
  const long k = d.arg.eval(s);
  const int cp = d.arg.cp;
  switch (d.kind) {
    case DiagKind::Linear: return ring.linear(k, cp);
    case DiagKind::Bracket: return ring.bracket(k, cp);
    case DiagKind::BracketRatio:
      if (cp != 0) throw InvalidArgument("bracket ratio argument must not depend on p");
      return ring.bracket_ratio(k);
    case DiagKind::AngleBracket:
      if (cp != 0) throw InvalidArgument("angle bracket argument must not depend on p");
      if (sig.is_fermionic(d.mode)) return ring.one();
      return ring.angle(k);
    case DiagKind::SqrtBracket: return ring.sqrt_bracket(k, cp);
    case DiagKind::QPower: return ring.q_power(k, cp);
  }
  throw InvalidArgument("unknown diagonal factor");
}

/// Fermionic sign (-1)^sigma with sigma the number of occupied fermionic
/// modes strictly left of `mode`.
inline int fermion_sign(const Signature& sig, const FockState& s, int mode) {
  int sigma = 0;
  for (int k = sig.n; k < mode; ++k) sigma += s[k];
  return (sigma % 2 == 0) ? 1 : -1;
}

/// One atom on one basis state: (coefficient, image state), or nullopt when
/// the image is zero.
template <CoefficientRing Ring>
std::optional<std::pair<typename Ring::value_type, FockState>> apply_atom(const Ring& ring, const Signature& sig,
                                                                          const Atom& atom, const FockState& s,
                                                                          Convention conv) {
  using V = typename Ring::value_type;
  if (const auto* r = std::get_if<Raise>(&atom)) {
    const int i = r->mode;
    mode_parity(sig, i);
    FockState t = s;
    if (sig.is_fermionic(i)) {
      if (s[i] != 0) return std::nullopt;
      t[i] = 1;
      return std::pair{fermion_sign(sig, s, i) > 0 ? ring.one() : V(ring.zero() - ring.one()), std::move(t)};
    }
    t[i] = s[i] + 1;
    return std::pair{conv == Convention::Orthonormal ? ring.sqrt_count(s[i] + 1) : ring.one(), std::move(t)};
  }
  if (const auto* l = std::get_if<Lower>(&atom)) {
    const int i = l->mode;
    mode_parity(sig, i);
    if (s[i] == 0) return std::nullopt;
    FockState t = s;
    t[i] = s[i] - 1;
    if (sig.is_fermionic(i))
      return std::pair{fermion_sign(sig, s, i) > 0 ? ring.one() : V(ring.zero() - ring.one()), std::move(t)};
    return std::pair{conv == Convention::Orthonormal ? ring.sqrt_count(s[i]) : ring.linear(s[i], 0), std::move(t)};
  }
  V c = eval_diag(ring, sig, std::get<DiagFactor>(atom), s);
  if (is_zero(c)) return std::nullopt;
  return std::pair{std::move(c), s};
}

/// A whole word on one basis state, atoms right to left.
template <CoefficientRing Ring>
std::optional<std::pair<typename Ring::value_type, FockState>> apply_word(const Ring& ring, const Signature& sig,
                                                                          const Word& word, const FockState& s,
                                                                          Convention conv) {
  typename Ring::value_type coeff = ring.one();
  FockState cur = s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto step = apply_atom(ring, sig, *it, cur, conv);
    if (!step) return std::nullopt;
    coeff = coeff * step->first;
    cur = std::move(step->second);
  }
  return std::pair{std::move(coeff), std::move(cur)};
}

template <CoefficientRing Ring>
StateVector<typename Ring::value_type> apply(const Ring& ring, const Signature& sig, const OperatorExpr& expr,
                                             const StateVector<typename Ring::value_type>& v, Convention conv) {
  using V = typename Ring::value_type;
  std::vector<V> scalars;
  scalars.reserve(expr.terms().size());
  for (const auto& t : expr.terms()) scalars.push_back(ring.from_exact(t.scalar));

  StateVector<V> out;
  for (const auto& [s, c] : v.entries())
    for (std::size_t k = 0; k < expr.terms().size(); ++k) {
      auto img = apply_word(ring, sig, expr.terms()[k].word, s, conv);
      if (img) out.add(img->second, scalars[k] * img->first * c);
    }
  return out;
}

template <CoefficientRing Ring>
StateVector<typename Ring::value_type> apply(const Ring& ring, const Signature& sig, const OperatorExpr& expr,
                                             const FockState& s, Convention conv) {
  return apply(ring, sig, expr, StateVector<typename Ring::value_type>(s, ring.one()), conv);
}

/// Convenience constructors for mode operators and the number operators.
inline OperatorExpr raise_op(int mode) { return OperatorExpr::atom(Raise{mode}); }
inline OperatorExpr lower_op(int mode) { return OperatorExpr::atom(Lower{mode}); }
inline OperatorExpr number_op(const Signature& sig, int mode) {
  return OperatorExpr::diag(DiagKind::Linear, Affine::occupation(sig, mode));
}
inline OperatorExpr total_number_op(const Signature& sig) {
  return OperatorExpr::diag(DiagKind::Linear, Affine::total(sig));
}

}  // namespace uqgl
