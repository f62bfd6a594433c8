#pragma once

// Exact coefficient arithmetic over Laurent polynomials in q and the formal
// unit P = q^p (plus polynomial powers of p itself), with rational
// coefficients.

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "uqgl/error.hpp"

namespace uqgl {

using Rational = mpq_class;

/// Monomial q^a P^b p^c. P stands for q^p; c counts bare powers of p.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b, c + o.c}; }
  Monomial operator/(const Monomial& o) const { return {a - o.a, b - o.b, c - o.c}; }
};

class LaurentPoly {
 public:
  using map_type = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(Rational constant) {
    constant.canonicalize();
    if (sgn(constant) != 0) terms_.emplace(Monomial{}, std::move(constant));
  }
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

  static LaurentPoly monomial(Monomial mono, Rational coeff = 1) {
    coeff.canonicalize();
    LaurentPoly r;
    if (sgn(coeff) != 0) r.terms_.emplace(mono, std::move(coeff));
    return r;
  }
  static LaurentPoly q_pow(int a) { return monomial({a, 0, 0}); }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{} && terms_.begin()->second == 1;
  }

  void add_term(const Monomial& mono, Rational coeff) {
    coeff.canonicalize();  // mpq arithmetic assumes canonical operands
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Rational& s) const {
    if (sgn(s) == 0) return {};
    LaurentPoly r = *this;
    for (auto& [mono, c] : r.terms_) {
      c *= s;
      c.canonicalize();
    }
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  const Monomial& leading() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  /// Evaluates at numeric q, P and p.
  double eval(double q, double big_p, double p) const {
    double acc = 0.0;
    for (const auto& [mono, c] : terms_) {
      double t = c.get_d();
      if (mono.a != 0) t *= std::pow(q, mono.a);
      if (mono.b != 0) t *= std::pow(big_p, mono.b);
      if (mono.c != 0) t *= std::pow(p, mono.c);
      acc += t;
    }
    return acc;
  }

  /// Substitutes P := q^p for an integer p; bare powers of p become rationals.
  LaurentPoly specialize_p(long p) const {
    LaurentPoly r;
    for (const auto& [mono, c] : terms_) {
      Rational s = c;
      for (int k = 0; k < mono.c; ++k) s *= p;
      r.add_term({static_cast<int>(mono.a + mono.b * p), 0, 0}, s);
    }
    return r;
  }

  /// Substitutes q := 1 (hence P := 1), keeping bare powers of p.
  LaurentPoly specialize_q1() const {
    LaurentPoly r;
    for (const auto& [mono, c] : terms_) r.add_term({0, 0, mono.c}, c);
    return r;
  }

  /// Exact quotient x / y when y divides x, else nullopt. Uses lex long
  /// division; the quotient's exponents are confined to the box implied by
  /// the per-variable degree ranges of x and y, which bounds the loop.
  friend std::optional<LaurentPoly> try_divide(const LaurentPoly& x, const LaurentPoly& y) {
    if (y.is_zero()) throw DivisionByZero("LaurentPoly division by zero");
    if (x.is_zero()) return LaurentPoly{};
    auto lo_hi = [](const LaurentPoly& f) {
      Monomial lo = f.terms_.begin()->first, hi = lo;
      for (const auto& [m, c] : f.terms_) {
        lo = {std::min(lo.a, m.a), std::min(lo.b, m.b), std::min(lo.c, m.c)};
        hi = {std::max(hi.a, m.a), std::max(hi.b, m.b), std::max(hi.c, m.c)};
      }
      return std::pair{lo, hi};
    };
    auto [xlo, xhi] = lo_hi(x);
    auto [ylo, yhi] = lo_hi(y);
    const Monomial qlo = xlo / ylo, qhi = xhi / yhi;
    if (qlo.a > qhi.a || qlo.b > qhi.b || qlo.c > qhi.c || qlo.c < 0) return std::nullopt;

    LaurentPoly rem = x, quot;
    const Monomial ylead = y.leading();
    const Rational ycoeff = y.leading_coeff();
    while (!rem.is_zero()) {
      const Monomial t = rem.leading() / ylead;
      if (t.a < qlo.a || t.a > qhi.a || t.b < qlo.b || t.b > qhi.b || t.c < qlo.c || t.c > qhi.c)
        return std::nullopt;
      const Rational c = rem.leading_coeff() / ycoeff;
      quot.add_term(t, c);
      rem -= y * monomial(t, c);
    }
    return quot;
  }

  /// Canonical text: "c*q^a[*P^b][*p^c]" terms joined by " + ", ascending
  /// in a, then b, then c. The zero polynomial renders as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += c.get_str();
      out += "*q^" + std::to_string(mono.a);
      if (mono.b != 0) out += "*P^" + std::to_string(mono.b);
      if (mono.c != 0) out += "*p^" + std::to_string(mono.c);
    }
    return out;
  }

 private:
  map_type terms_;
};

/// Element of the fraction field num/den. Equality is cross-multiplication;
/// no canonical form is maintained between operations.
class CoeffExact {
 public:
  CoeffExact() = default;
  CoeffExact(long k) : num_(k) {}
  CoeffExact(LaurentPoly num) : num_(std::move(num)) {}
  CoeffExact(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("CoeffExact with zero denominator");
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend CoeffExact operator+(const CoeffExact& x, const CoeffExact& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return CoeffExact::raw(x.num_ + y.num_, x.den_);
    return CoeffExact::raw(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  CoeffExact operator-() const { return raw(-num_, den_); }
  friend CoeffExact operator-(const CoeffExact& x, const CoeffExact& y) { return x + (-y); }
  friend CoeffExact operator*(const CoeffExact& x, const CoeffExact& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.den_.is_one()) return raw(x.num_ * y.num_, y.den_);
    if (y.den_.is_one()) return raw(x.num_ * y.num_, x.den_);
    return raw(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend CoeffExact operator/(const CoeffExact& x, const CoeffExact& y) {
    if (y.is_zero()) throw DivisionByZero("CoeffExact division by zero");
    return CoeffExact(x.num_ * y.den_, x.den_ * y.num_);
  }
  CoeffExact& operator+=(const CoeffExact& o) { return *this = *this + o; }
  CoeffExact& operator-=(const CoeffExact& o) { return *this = *this - o; }
  CoeffExact& operator*=(const CoeffExact& o) { return *this = *this * o; }

  friend bool operator==(const CoeffExact& x, const CoeffExact& y) {
    if (x.den_ == y.den_) return x.num_ == y.num_;
    return x.num_ * y.den_ == y.num_ * x.den_;
  }

  /// Optional reduction: folds monomial or exactly-dividing denominators
  /// into the numerator, cancels common (q - q^-1) factors and makes the
  /// denominator's leading coefficient 1.
  CoeffExact normalized() const {
    if (num_.is_zero()) return {};
    LaurentPoly n = num_, d = den_;
    if (auto quot = try_divide(n, d)) return CoeffExact(*quot);
    const LaurentPoly qdiff = LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1);
    while (true) {
      auto qn = try_divide(n, qdiff);
      auto qd = try_divide(d, qdiff);
      if (!qn || !qd) break;
      n = std::move(*qn);
      d = std::move(*qd);
    }
    if (d.is_monomial()) {
      const auto& [mono, c] = *d.terms().begin();
      LaurentPoly inv = LaurentPoly::monomial(Monomial{} / mono, 1 / c);
      return CoeffExact(n * inv);
    }
    const Rational lead = d.leading_coeff();
    return raw(n.scaled(1 / lead), d.scaled(1 / lead));
  }

  /// Canonical string of the normalized value: the numerator alone when the
  /// denominator reduces to 1, else "(<num>)/(<den>)".
  std::string str() const {
    const CoeffExact c = normalized();
    if (c.den_.is_one()) return c.num_.str();
    return "(" + c.num_.str() + ")/(" + c.den_.str() + ")";
  }

 private:
  static CoeffExact raw(LaurentPoly n, LaurentPoly d) {
    CoeffExact c;
    c.num_ = std::move(n);
    c.den_ = std::move(d);
    return c;
  }

  LaurentPoly num_;
  LaurentPoly den_{1};
};

inline bool is_zero(const CoeffExact& c) { return c.is_zero(); }

/// q - q^-1, the denominator of every non-integer bracket.
inline LaurentPoly q_difference() { return LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1); }

/// [k] = q^{k-1} + q^{k-3} + ... + q^{1-k} for k > 0, [-k] = -[k].
inline CoeffExact bracket_int(long k) {
  if (k == 0) return {};
  if (k < 0) return -bracket_int(-k);
  LaurentPoly r;
  for (long j = 0; j < k; ++j) r.add_term({static_cast<int>(k - 1 - 2 * j), 0, 0}, 1);
  return CoeffExact(r);
}

/// [c0 + cp*p + shift] with p formal (carried by P = q^p).
inline CoeffExact bracket_affine(long c0, int cp, long shift_by_state) {
  const long k = c0 + shift_by_state;
  if (cp == 0) return bracket_int(k);
  LaurentPoly num = LaurentPoly::monomial({static_cast<int>(k), cp, 0}) -
                    LaurentPoly::monomial({static_cast<int>(-k), -cp, 0});
  return CoeffExact(std::move(num), q_difference());
}

/// q^{k + cp*p} with p formal.
inline CoeffExact q_power(long k, int cp) {
  return CoeffExact(LaurentPoly::monomial({static_cast<int>(k), cp, 0}));
}

/// The bare value k + cp*p with p formal.
inline CoeffExact affine_value(long k, int cp) {
  LaurentPoly r(k);
  if (cp != 0) r.add_term({0, 0, 1}, cp);
  return CoeffExact(std::move(r));
}

/// Evaluates c at numeric (q, p) via P := q^p. Throws DivisionByZero when the
/// denominator vanishes at the sample point; the caller resamples.
inline double eval_numeric(const CoeffExact& c, double q, double p) {
  if (!(q > 0.0)) throw InvalidArgument("eval_numeric requires q > 0");
  const double big_p = std::pow(q, p);
  const double d = c.den().eval(q, big_p, p);
  if (d == 0.0) throw DivisionByZero("denominator vanishes at q = " + std::to_string(q));
  const double v = c.num().eval(q, big_p, p) / d;
  if (!std::isfinite(v)) throw DivisionByZero("non-finite coefficient at q = " + std::to_string(q));
  return v;
}

/// [x+1] - (q + q^-1)[x] + [x-1] == 0, checked exactly.
inline bool bracket_recurrence_check(long x) {
  const CoeffExact q_sum = bracket_int(2);
  return (bracket_int(x + 1) - q_sum * bracket_int(x) + bracket_int(x - 1)).is_zero();
}

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace uqgl
