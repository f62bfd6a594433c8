#pragma once

// The defining presentation of U_q[gl(n/m)]: Chevalley generators, their
// grading, and the machine-generated list of Cartan-Kac and Serre relations.

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uqgl/coeff.hpp"
#include "uqgl/error.hpp"
#include "uqgl/fock.hpp"

namespace uqgl {

enum class GenKind { H, E, F };

struct GenSymbol {
  GenKind kind = GenKind::H;
  int index = 1;

  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;

  std::string str() const {
    const char c = kind == GenKind::H ? 'h' : (kind == GenKind::E ? 'e' : 'f');
    return c + std::to_string(index);
  }
};

inline GenSymbol h(int i) { return {GenKind::H, i}; }
inline GenSymbol e(int i) { return {GenKind::E, i}; }
inline GenSymbol f(int i) { return {GenKind::F, i}; }

inline void check_symbol(const Signature& sig, const GenSymbol& g) {
  const int top = g.kind == GenKind::H ? sig.r() : sig.r() - 1;
  if (g.index < 1 || g.index > top)
    throw InvalidArgument("generator " + g.str() + " out of range for (n=" + std::to_string(sig.n) +
                          ", m=" + std::to_string(sig.m) + ")");
}

/// h even; e_i and f_i odd exactly when i = n.
inline Parity generator_parity(const Signature& sig, const GenSymbol& g) {
  check_symbol(sig, g);
  if (g.kind == GenKind::H) return Parity::Even;
  auto theta = [&](int i) { return i >= sig.n ? Parity::Odd : Parity::Even; };
  return theta(g.index - 1) + theta(g.index);
}

/// q-bracket of a signed sum of Cartan generators, [sum_k sign_k h_{index_k}].
/// This is the right side (q^x - q^-x)/(q - q^-1) of the e_i f_i relations.
struct HBracket {
  std::vector<std::pair<int, int>> parts;  // (h index, +1 or -1)

  friend bool operator==(const HBracket&, const HBracket&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k].second < 0) s += '-';
      else if (k) s += '+';
      s += "h" + std::to_string(parts[k].first);
    }
    return s + "]";
  }
};

using GenAtom = std::variant<GenSymbol, HBracket>;

struct GenTerm {
  CoeffExact scalar{1};
  std::vector<GenAtom> word;
};

struct GenExpr {
  std::vector<GenTerm> terms;

  static GenExpr word(std::vector<GenAtom> w, CoeffExact s = 1) { return GenExpr{{GenTerm{std::move(s), std::move(w)}}}; }
  GenExpr& add(std::vector<GenAtom> w, CoeffExact s = 1) {
    terms.push_back({std::move(s), std::move(w)});
    return *this;
  }
  bool empty() const { return terms.empty(); }
};

enum class BracketForm { Commutator, Anticommutator, Serre, Nilpotent };

struct Relation {
  std::string name;
  GenExpr lhs;
  GenExpr rhs;
  BracketForm form = BracketForm::Commutator;
};

/// Renders a scalar for relation listings: integers plainly, [k] when the
/// coefficient is a q-integer, else the canonical string in parentheses.
inline std::string scalar_label(const CoeffExact& c) {
  const CoeffExact n = c.normalized();
  if (n.den().is_one()) {
    const auto& t = n.num().terms();
    if (t.empty()) return "0";
    if (t.size() == 1 && t.begin()->first == Monomial{} && t.begin()->second.get_den() == 1)
      return t.begin()->second.get_str();
    for (long k = 2; k <= 16; ++k) {
      if (n == bracket_int(k)) return "[" + std::to_string(k) + "]";
      if (n == -bracket_int(k)) return "-[" + std::to_string(k) + "]";
    }
  }
  return "(" + n.str() + ")";
}

/// Text of a generator expression in the CLI expression syntax (extended
/// with [k] and [h..] for q-scalars and Cartan brackets).
inline std::string gen_expr_str(const GenExpr& g, bool leading = true) {
  if (g.terms.empty()) return leading ? "0" : "";
  std::string s;
  bool first = leading;
  for (const auto& t : g.terms) {
    std::string coeff = scalar_label(t.scalar);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    std::string body;
    for (const auto& a : t.word) {
      if (!body.empty()) body += "*";
      body += std::visit([](const auto& x) { return x.str(); }, a);
    }
    if (coeff == "1" && !body.empty()) s += body;
    else s += body.empty() ? coeff : coeff + "*" + body;
  }
  return s;
}

/// lhs - rhs as one line.
inline std::string relation_str(const Relation& rel) {
  std::string s = gen_expr_str(rel.lhs);
  if (!rel.rhs.empty()) {
    GenExpr neg = rel.rhs;
    for (auto& t : neg.terms) t.scalar = -t.scalar;
    s += gen_expr_str(neg, false);
  }
  return s;
}

/// Replaces every e_i by f_i and vice versa.
inline GenExpr swap_ef(const GenExpr& g) {
  GenExpr out = g;
  for (auto& t : out.terms)
    for (auto& a : t.word)
      if (auto* s = std::get_if<GenSymbol>(&a)) {
        if (s->kind == GenKind::E) s->kind = GenKind::F;
        else if (s->kind == GenKind::F) s->kind = GenKind::E;
      }
  return out;
}

inline Relation swap_ef(const Relation& rel) {
  Relation out{rel.name, swap_ef(rel.lhs), swap_ef(rel.rhs), rel.form};
  if (out.name.starts_with("eSerre")) out.name[0] = 'f';
  else if (out.name.starts_with("fSerre")) out.name[0] = 'e';
  return out;
}

namespace detail {

inline std::string idx(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s = "[";
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) s += ",";
    first = false;
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s + "]";
}

inline GenExpr commutator(GenSymbol x, GenSymbol y, long sign = 1) {
  GenExpr g;
  g.add({x, y});
  g.add({y, x}, -sign);
  return g;
}

inline void serre_families(const Signature& sig, char tag, GenKind kind, std::vector<Relation>& out) {
  const int n = sig.n, m = sig.m, top = sig.r() - 1;
  auto g = [kind](int i) { return GenSymbol{kind, i}; };
  const std::string fam = std::string(1, tag) + "Serre";
  const CoeffExact q2 = bracket_int(2);
  auto in_range = [top](int i) { return i >= 1 && i <= top; };

  // (6) commuting pairs and the odd square
  for (int i = 1; i <= top; ++i)
    for (int j = i + 2; j <= top; ++j)
      out.push_back({fam + "6" + idx({{"i", i}, {"j", j}}), commutator(g(i), g(j)), {}, BracketForm::Commutator});
  if (m >= 1 && in_range(n))
    out.push_back({fam + "6" + idx({{"n", n}}) + "sq", GenExpr::word({g(n), g(n)}), {}, BracketForm::Nilpotent});

  // (7) i in {1..n-1} u {n+1..n+m-2}
  std::vector<int> cubic7;
  for (int i = 1; i <= n - 1; ++i) cubic7.push_back(i);
  for (int i = n + 1; i <= n + m - 2; ++i) cubic7.push_back(i);
  for (int i : cubic7) {
    if (!in_range(i) || !in_range(i + 1)) continue;
    GenExpr lhs;
    lhs.add({g(i), g(i), g(i + 1)});
    lhs.add({g(i), g(i + 1), g(i)}, -q2);
    lhs.add({g(i + 1), g(i), g(i)});
    out.push_back({fam + "7" + idx({{"i", i}}), lhs, {}, BracketForm::Serre});
  }

  // (8) i in {1..n-2} u {n..n+m-2}
  std::vector<int> cubic8;
  for (int i = 1; i <= n - 2; ++i) cubic8.push_back(i);
  for (int i = n; i <= n + m - 2; ++i) cubic8.push_back(i);
  for (int i : cubic8) {
    if (!in_range(i) || !in_range(i + 1)) continue;
    GenExpr lhs;
    lhs.add({g(i + 1), g(i + 1), g(i)});
    lhs.add({g(i + 1), g(i), g(i + 1)}, -q2);
    lhs.add({g(i), g(i + 1), g(i + 1)});
    out.push_back({fam + "8" + idx({{"i", i}}), lhs, {}, BracketForm::Serre});
  }

  // (9) quartic around the odd generator; needs both neighbours of n
  if (in_range(n - 1) && in_range(n + 1)) {
    GenExpr lhs;
    lhs.add({g(n), g(n - 1), g(n), g(n + 1)});
    lhs.add({g(n - 1), g(n), g(n + 1), g(n)});
    lhs.add({g(n), g(n + 1), g(n), g(n - 1)});
    lhs.add({g(n + 1), g(n), g(n - 1), g(n)});
    lhs.add({g(n), g(n - 1), g(n + 1), g(n)}, -q2);
    out.push_back({fam + "9", lhs, {}, BracketForm::Serre});
  }
}

}  // namespace detail

/// Every relation of the presentation for the given signature, in a fixed
/// order: Cartan-Kac families 1-5, then e-Serre 6-9, then f-Serre 6-9.
inline std::vector<Relation> build_relations(const Signature& sig) {
  const int r = sig.r(), n = sig.n, top = r - 1;
  if (top < 1) throw InvalidArgument("signature has no simple root generators");
  std::vector<Relation> out;

  auto delta = [](int a, int b) { return a == b ? 1 : 0; };

  // (1) [h_i, e_j] = (d_ij - d_{i,j+1}) e_j, (2) the f counterpart
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= top; ++j) {
      const long c = delta(i, j) - delta(i, j + 1);
      GenExpr rhs;
      if (c != 0) rhs.add({e(j)}, c);
      out.push_back({"CK1" + detail::idx({{"i", i}, {"j", j}}), detail::commutator(h(i), e(j)), rhs,
                     BracketForm::Commutator});
    }
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= top; ++j) {
      const long c = -delta(i, j) + delta(i, j + 1);
      GenExpr rhs;
      if (c != 0) rhs.add({f(j)}, c);
      out.push_back({"CK2" + detail::idx({{"i", i}, {"j", j}}), detail::commutator(h(i), f(j)), rhs,
                     BracketForm::Commutator});
    }

  // (3) e_i f_j - f_j e_i = 0 for i != j
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= top; ++j)
      if (i != j)
        out.push_back({"CK3" + detail::idx({{"i", i}, {"j", j}}), detail::commutator(e(i), f(j)), {},
                       BracketForm::Commutator});

  // (4) e_i f_i - f_i e_i = [h_i - h_{i+1}] for i != n
  for (int i = 1; i <= top; ++i) {
    if (i == n) continue;
    GenExpr rhs = GenExpr::word({HBracket{{{i, 1}, {i + 1, -1}}}});
    out.push_back({"CK4" + detail::idx({{"i", i}}), detail::commutator(e(i), f(i)), rhs, BracketForm::Commutator});
  }

  // (5) e_n f_n + f_n e_n = [h_n + h_{n+1}]
  if (sig.m >= 1) {
    GenExpr rhs = GenExpr::word({HBracket{{{n, 1}, {n + 1, 1}}}});
    out.push_back({"CK5" + detail::idx({{"n", n}}), detail::commutator(e(n), f(n), -1), rhs,
                   BracketForm::Anticommutator});
  }

  detail::serre_families(sig, 'e', GenKind::E, out);
  detail::serre_families(sig, 'f', GenKind::F, out);
  return out;
}

/// Parity of a generator word (HBracket atoms are even).
inline Parity gen_word_parity(const Signature& sig, const std::vector<GenAtom>& word) {
  Parity p = Parity::Even;
  for (const auto& a : word)
    if (const auto* s = std::get_if<GenSymbol>(&a)) p = p + generator_parity(sig, *s);
  return p;
}

}  // namespace uqgl
