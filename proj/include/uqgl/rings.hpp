#pragma once

// Coefficient rings used by the operator engine. A ring evaluates the
// diagonal factors of a realization (brackets, q-powers, square roots) at a
// concrete argument k + cp*p and supplies scalar arithmetic.
//
//   ExactRing      CoeffExact, q formal, p formal or a fixed integer
//   ClassicalRing  CoeffExact at q = 1: [x] -> x, p formal or a fixed integer
//   NumericRing<S> S = double or std::complex<double>, numeric q and p

#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <string>

#include "uqgl/coeff.hpp"
#include "uqgl/error.hpp"

namespace uqgl {

inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const std::complex<double>& v) { return v == std::complex<double>{}; }

template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::value_type& v, long k, int cp,
                                   const CoeffExact& c) {
  typename R::value_type;
  { ring.zero() } -> std::same_as<typename R::value_type>;
  { ring.one() } -> std::same_as<typename R::value_type>;
  { ring.from_exact(c) } -> std::same_as<typename R::value_type>;
  { ring.linear(k, cp) } -> std::same_as<typename R::value_type>;
  { ring.bracket(k, cp) } -> std::same_as<typename R::value_type>;
  { ring.bracket_ratio(k) } -> std::same_as<typename R::value_type>;
  { ring.angle(k) } -> std::same_as<typename R::value_type>;
  { ring.sqrt_bracket(k, cp) } -> std::same_as<typename R::value_type>;
  { ring.q_power(k, cp) } -> std::same_as<typename R::value_type>;
  { ring.sqrt_count(k) } -> std::same_as<typename R::value_type>;
  { ring.magnitude(v) } -> std::convertible_to<double>;
  { ring.format(v) } -> std::convertible_to<std::string>;
  { R::exact } -> std::convertible_to<bool>;
};

namespace detail {

inline bool is_perfect_square(long v, long& root) {
  if (v < 0) return false;
  root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(v))));
  while (root * root > v) --root;
  while ((root + 1) * (root + 1) <= v) ++root;
  return root * root == v;
}

}  // namespace detail

/// Exact Laurent arithmetic in q. With p unset, p is formal and enters
/// through P = q^p; otherwise P is substituted by q^p.
class ExactRing {
 public:
  using value_type = CoeffExact;
  static constexpr bool exact = true;

  ExactRing() = default;
  explicit ExactRing(std::optional<long> p) : p_(p) {}

  const std::optional<long>& p() const { return p_; }
  std::string q_label() const { return "formal"; }
  std::string p_label() const { return p_ ? std::to_string(*p_) : "formal"; }
  static constexpr const char* mode_label = "exact";

  value_type zero() const { return {}; }
  value_type one() const { return 1; }
  value_type from_exact(const CoeffExact& c) const {
    if (!p_) return c;
    return CoeffExact(c.num().specialize_p(*p_), c.den().specialize_p(*p_));
  }
  value_type linear(long k, int cp) const {
    if (p_ || cp == 0) return CoeffExact(k + cp * p_.value_or(0));
    return affine_value(k, cp);
  }
  value_type bracket(long k, int cp) const {
    if (p_ || cp == 0) return bracket_int(k + cp * p_.value_or(0));
    return bracket_affine(k, cp, 0);
  }
  value_type bracket_ratio(long x) const {
    if (x == 0) throw DivisionByZero("bracket ratio [x]/x at x = 0");
    return CoeffExact(bracket_int(x).num().scaled(Rational(1, 1) / x));
  }
  value_type angle(long x) const {
    if (x == 1) return 1;
    throw Unsupported("angle bracket <N+c> needs a square root; use a numeric ring");
  }
  value_type sqrt_bracket(long k, int cp) const {
    if (k + cp * p_.value_or(0) == 0 && (p_ || cp == 0)) return {};
    if ((p_ || cp == 0) && (k + cp * p_.value_or(0) == 1)) return 1;
    throw Unsupported("square root of a bracket needs a numeric ring");
  }
  value_type q_power(long k, int cp) const {
    if (p_ || cp == 0) return uqgl::q_power(k + cp * p_.value_or(0), 0);
    return uqgl::q_power(k, cp);
  }
  value_type sqrt_count(long l) const {
    long root = 0;
    if (detail::is_perfect_square(l, root)) return root;
    throw Unsupported("orthonormal normalization sqrt(" + std::to_string(l) +
                      ") is irrational; use the exact-monomial convention");
  }
  double magnitude(const value_type& v) const { return v.is_zero() ? 0.0 : 1.0; }
  std::string format(const value_type& v) const { return v.str(); }

 private:
  std::optional<long> p_;
};

/// q = 1 specialization with exact coefficients: every bracket [x] becomes
/// x, bracket ratios and q-powers become 1. p stays formal unless given.
class ClassicalRing {
 public:
  using value_type = CoeffExact;
  static constexpr bool exact = true;

  ClassicalRing() = default;
  explicit ClassicalRing(std::optional<long> p) : p_(p) {}

  const std::optional<long>& p() const { return p_; }
  std::string q_label() const { return "1"; }
  std::string p_label() const { return p_ ? std::to_string(*p_) : "formal"; }
  static constexpr const char* mode_label = "classical";

  value_type zero() const { return {}; }
  value_type one() const { return 1; }
  value_type from_exact(const CoeffExact& c) const {
    LaurentPoly n = c.num().specialize_q1(), d = c.den().specialize_q1();
    if (d.is_zero()) throw DivisionByZero("coefficient is singular at q = 1: " + c.str());
    if (p_) {
      n = n.specialize_p(*p_);
      d = d.specialize_p(*p_);
      if (d.is_zero()) throw DivisionByZero("coefficient is singular at q = 1");
    }
    return CoeffExact(std::move(n), std::move(d));
  }
  value_type linear(long k, int cp) const {
    if (p_ || cp == 0) return CoeffExact(k + cp * p_.value_or(0));
    return affine_value(k, cp);
  }
  value_type bracket(long k, int cp) const { return linear(k, cp); }
  value_type bracket_ratio(long x) const {
    if (x == 0) throw DivisionByZero("bracket ratio [x]/x at x = 0");
    return 1;
  }
  value_type angle(long x) const {
    if (x == 0) throw DivisionByZero("angle bracket at 0");
    return 1;
  }
  value_type sqrt_bracket(long k, int cp) const {
    if (p_ || cp == 0) return sqrt_count(k + cp * p_.value_or(0));
    throw Unsupported("square root of p - N with formal p");
  }
  value_type q_power(long, int) const { return 1; }
  value_type sqrt_count(long l) const {
    long root = 0;
    if (detail::is_perfect_square(l, root)) return root;
    throw Unsupported("sqrt(" + std::to_string(l) + ") is irrational");
  }
  double magnitude(const value_type& v) const { return v.is_zero() ? 0.0 : 1.0; }
  std::string format(const value_type& v) const { return v.str(); }

 private:
  std::optional<long> p_;
};

/// Floating-point evaluation at real q > 0 and real p. q = 1 is handled as
/// the classical special case [x] = x. With S = double a negative radicand
/// raises NegativeRadicand; with S = complex<double> the principal branch is
/// taken.
template <class S = double>
class NumericRing {
 public:
  using value_type = S;
  static constexpr bool exact = false;
  static constexpr bool is_complex = !std::same_as<S, double>;

  NumericRing(double q, double p) : q_(q), p_(p) {
    if (!(q > 0.0) || !std::isfinite(q)) throw InvalidArgument("numeric q must be positive and finite");
    if (!std::isfinite(p)) throw InvalidArgument("numeric p must be finite");
  }

  double q() const { return q_; }
  double p() const { return p_; }
  bool classical() const { return q_ == 1.0; }
  std::string q_label() const { return format_double(q_); }
  std::string p_label() const { return format_double(p_); }
  static constexpr const char* mode_label = is_complex ? "numeric-complex" : "numeric";

  value_type zero() const { return S(0); }
  value_type one() const { return S(1); }
  value_type from_exact(const CoeffExact& c) const {
    if (classical()) return S(eval_classical(c));
    return S(eval_numeric(c, q_, p_));
  }
  value_type linear(long k, int cp) const { return S(arg(k, cp)); }
  value_type bracket(long k, int cp) const { return S(real_bracket(arg(k, cp))); }
  value_type bracket_ratio(long x) const {
    if (x == 0) throw DivisionByZero("bracket ratio [x]/x at x = 0");
    return S(real_bracket(static_cast<double>(x)) / static_cast<double>(x));
  }
  value_type angle(long x) const {
    if (x == 0) throw DivisionByZero("angle bracket at 0");
    const double r = real_bracket(static_cast<double>(x)) / static_cast<double>(x);
    return S(std::sqrt(r));
  }
  value_type sqrt_bracket(long k, int cp) const {
    const double x = arg(k, cp);
    if (x == 0.0) return S(0);
    const double b = real_bracket(x);
    if (b >= 0.0) return S(std::sqrt(b));
    if constexpr (is_complex) {
      return S(0.0, std::sqrt(-b));
    } else {
      throw NegativeRadicand("sqrt([" + format_double(x) + "]) with [" + format_double(x) +
                             "] = " + format_double(b) + " < 0");
    }
  }
  value_type q_power(long k, int cp) const { return S(std::pow(q_, arg(k, cp))); }
  value_type sqrt_count(long l) const { return S(std::sqrt(static_cast<double>(l))); }
  double magnitude(const value_type& v) const { return std::abs(v); }
  std::string format(const value_type& v) const {
    if constexpr (is_complex) {
      if (v.imag() == 0.0) return format_double(v.real());
      return "(" + format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
             format_double(std::abs(v.imag())) + "i)";
    } else {
      return format_double(v);
    }
  }

  /// [x] at this ring's q; x itself when q = 1.
  double real_bracket(double x) const {
    if (classical()) return x;
    const double v = (std::pow(q_, x) - std::pow(q_, -x)) / (q_ - 1.0 / q_);
    if (!std::isfinite(v)) throw DivisionByZero("bracket overflow at q = " + format_double(q_));
    return v;
  }

 private:
  double arg(long k, int cp) const { return static_cast<double>(k) + cp * p_; }

  double eval_classical(const CoeffExact& c) const {
    const double d = c.den().specialize_q1().eval(1.0, 1.0, p_);
    if (d == 0.0) throw DivisionByZero("coefficient is singular at q = 1");
    return c.num().specialize_q1().eval(1.0, 1.0, p_) / d;
  }

  double q_;
  double p_;
};

static_assert(CoefficientRing<ExactRing>);
static_assert(CoefficientRing<ClassicalRing>);
static_assert(CoefficientRing<NumericRing<double>>);
static_assert(CoefficientRing<NumericRing<std::complex<double>>>);

}  // namespace uqgl
