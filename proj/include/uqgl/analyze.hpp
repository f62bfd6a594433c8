#pragma once

// Representation-level analysis on the Fock module: finite matrices on F0
// and its complement slice, invariant subspaces, unitarizability, highest
// weight, atypicality, inequivalence and cyclicity.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "uqgl/fock.hpp"
#include "uqgl/presentation.hpp"
#include "uqgl/realize.hpp"
#include "uqgl/rings.hpp"
#include "uqgl/verify.hpp"
#include "uqgl/weyl.hpp"

namespace uqgl {

enum class Subspace { F0, F1Slice, QuotientF0 };

inline const char* to_string(Subspace s) {
  switch (s) {
    case Subspace::F0: return "F0";
    case Subspace::F1Slice: return "F1-slice";
    case Subspace::QuotientF0: return "quotient-F0";
  }
  return "?";
}

template <class V>
struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  V value{};
};

/// Sparse matrix of one generator image on an explicit basis. Entries are
/// sorted by column, then row. `dropped` counts nonzero image components
/// that fell outside the basis (projected away or truncated).
template <class V>
struct GeneratorMatrix {
  GenSymbol gen;
  std::vector<MatrixEntry<V>> entries;
  std::size_t dropped = 0;

  std::optional<V> at(std::size_t row, std::size_t col) const {
    for (const auto& e : entries)
      if (e.row == row && e.col == col) return e.value;
    return std::nullopt;
  }
};

template <class V>
struct MatrixSet {
  Signature sig;
  RealizationKind kind = RealizationKind::Dyson;
  Subspace subspace = Subspace::F0;
  long p = 0;
  long cap = 0;
  Convention convention = Convention::Orthonormal;
  std::string p_label;
  std::string q_label;
  BasisIndex basis;
  std::map<GenSymbol, GeneratorMatrix<V>> matrices;

  const GeneratorMatrix<V>& operator[](const GenSymbol& g) const { return matrices.at(g); }

  /// Dense real view, row-major; only for real-valued sets.
  std::vector<std::vector<double>> dense(const GenSymbol& g) const {
    const std::size_t d = basis.size();
    std::vector<std::vector<double>> m(d, std::vector<double>(d, 0.0));
    for (const auto& e : matrices.at(g).entries) m[e.row][e.col] = static_cast<double>(e.value);
    return m;
  }
};

inline std::vector<GenSymbol> all_generators(const Signature& sig) {
  std::vector<GenSymbol> g;
  for (int i = 1; i <= sig.r(); ++i) g.push_back(h(i));
  for (int i = 1; i < sig.r(); ++i) g.push_back(e(i));
  for (int i = 1; i < sig.r(); ++i) g.push_back(f(i));
  return g;
}

/// Matrices of every generator image on F0 (total <= p), on the slice
/// p < total <= cap of F1, or on the quotient of the module by F1 (images
/// of degree > p projected to zero).
template <CoefficientRing Ring>
MatrixSet<typename Ring::value_type> materialize(const Ring& ring, const RealizedGenerators& gens, long p,
                                                 Subspace subspace, Convention conv, long cap = -1) {
  using V = typename Ring::value_type;
  MatrixSet<V> set;
  set.sig = gens.sig;
  set.kind = gens.kind;
  set.subspace = subspace;
  set.p = p;
  set.convention = conv;
  set.p_label = ring.p_label();
  set.q_label = ring.q_label();
  if (subspace == Subspace::F1Slice) {
    if (cap < p + 1) cap = p + 1;
    set.basis = split_F0_F1(gens.sig, p, cap).f1_slice;
  } else {
    set.basis = enumerate_up_to(gens.sig, p);
  }
  set.cap = cap;
  for (const auto& g : all_generators(gens.sig)) {
    GeneratorMatrix<V> mat;
    mat.gen = g;
    const OperatorExpr& img = gens.image(g);
    for (std::size_t col = 0; col < set.basis.size(); ++col) {
      const auto out = apply(ring, gens.sig, img, set.basis[col], conv);
      for (const auto& [t, c] : out.entries()) {
        if (auto row = set.basis.position(t)) mat.entries.push_back({*row, col, c});
        else ++mat.dropped;
      }
    }
    set.matrices.emplace(g, std::move(mat));
  }
  return set;
}

template <class V>
using DenseMatrix = std::vector<std::vector<V>>;

namespace detail {

template <CoefficientRing Ring>
DenseMatrix<typename Ring::value_type> project(const Ring& ring, const Signature& sig, const OperatorExpr& x,
                                               const BasisIndex& basis, Convention conv) {
  const std::size_t d = basis.size();
  DenseMatrix<typename Ring::value_type> m(d, std::vector<typename Ring::value_type>(d, ring.zero()));
  for (std::size_t col = 0; col < d; ++col) {
    const auto out = apply(ring, sig, x, basis[col], conv);
    for (const auto& [t, c] : out.entries())
      if (auto row = basis.position(t)) m[*row][col] = c;
  }
  return m;
}

template <class V>
DenseMatrix<V> matmul(const DenseMatrix<V>& a, const DenseMatrix<V>& b, const V& zero) {
  const std::size_t d = a.size();
  DenseMatrix<V> c(d, std::vector<V>(d, zero));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!is_zero(b[k][j])) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace detail

/// Checks every relation on the materialized matrices: products of the
/// (projected) generator matrices, Cartan brackets projected the same way.
/// On the quotient by an invariant subspace this is a representation check.
template <CoefficientRing Ring>
std::vector<RelationResult> verify_on_matrices(const Ring& ring, const RealizedGenerators& gens,
                                               const MatrixSet<typename Ring::value_type>& set,
                                               const std::vector<Relation>& relations, double tolerance = 1e-10) {
  using V = typename Ring::value_type;
  const std::size_t d = set.basis.size();
  std::map<GenSymbol, DenseMatrix<V>> mats;
  for (const auto& [g, mat] : set.matrices) {
    DenseMatrix<V> m(d, std::vector<V>(d, ring.zero()));
    for (const auto& e : mat.entries) m[e.row][e.col] = e.value;
    mats.emplace(g, std::move(m));
  }
  auto expr_matrix = [&](const GenExpr& x) {
    DenseMatrix<V> acc(d, std::vector<V>(d, ring.zero()));
    for (const auto& term : x.terms) {
      DenseMatrix<V> prod(d, std::vector<V>(d, ring.zero()));
      for (std::size_t i = 0; i < d; ++i) prod[i][i] = ring.from_exact(term.scalar);
      for (const auto& a : term.word) {
        if (const auto* g = std::get_if<GenSymbol>(&a))
          prod = detail::matmul(prod, mats.at(*g), ring.zero());
        else
          prod = detail::matmul(
              prod, detail::project(ring, gens.sig, gens.h_bracket(std::get<HBracket>(a)), set.basis, set.convention),
              ring.zero());
      }
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) acc[i][j] = acc[i][j] + prod[i][j];
    }
    return acc;
  };
  std::vector<RelationResult> out;
  for (const auto& rel : relations) {
    RelationResult res;
    res.name = rel.name;
    res.status = Ring::exact ? Status::ExactPass : Status::NumericPass;
    const auto lhs = expr_matrix(rel.lhs), rhs = expr_matrix(rel.rhs);
    for (std::size_t i = 0; i < d && res.status != Status::Fail; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const V diff = lhs[i][j] - rhs[i][j];
        const double mag = ring.magnitude(diff);
        if (!Ring::exact) res.residual = std::max(res.residual, mag);
        if (Ring::exact ? !is_zero(diff) : mag > tolerance) {
          res.status = Status::Fail;
          res.residual = mag;
          res.witness = Witness{set.basis[j], set.basis[i], ring.format(diff), ring.q_label()};
          break;
        }
      }
    out.push_back(std::move(res));
  }
  return out;
}

struct InvarianceWitness {
  GenSymbol gen;
  FockState state;
  FockState target;
  std::string coefficient;
};

struct InvarianceReport {
  long p = 0;
  long cap = 0;
  bool f0_invariant = true;
  bool f1_invariant = true;
  std::optional<InvarianceWitness> f0_witness;  // a leak out of F0
  std::optional<InvarianceWitness> f1_witness;  // a leak out of F1
  std::size_t f0_checked = 0;
  std::size_t f1_checked = 0;
};

/// Applies every generator image to every state of F0 and of the F1 slice
/// (p < total <= cap) and records any component that leaves the subspace.
/// Images are applied lazily, so no truncation enters the check.
template <CoefficientRing Ring>
InvarianceReport check_invariance(const Ring& ring, const RealizedGenerators& gens, long p, long cap,
                                  Convention conv) {
  const auto split = split_F0_F1(gens.sig, p, cap);
  InvarianceReport rep;
  rep.p = p;
  rep.cap = cap;
  for (const auto& g : all_generators(gens.sig)) {
    const OperatorExpr& img = gens.image(g);
    for (const auto& s : split.f0.states()) {
      ++rep.f0_checked;
      const auto out = apply(ring, gens.sig, img, s, conv);
      for (const auto& [t, c] : out.entries())
        if (t.total() > p && rep.f0_invariant) {
          rep.f0_invariant = false;
          rep.f0_witness = InvarianceWitness{g, s, t, ring.format(c)};
        }
    }
    for (const auto& s : split.f1_slice.states()) {
      ++rep.f1_checked;
      const auto out = apply(ring, gens.sig, img, s, conv);
      for (const auto& [t, c] : out.entries())
        if (t.total() <= p && rep.f1_invariant) {
          rep.f1_invariant = false;
          rep.f1_witness = InvarianceWitness{g, s, t, ring.format(c)};
        }
    }
  }
  return rep;
}

struct UnitarityWitness {
  int index = 0;  // generator pair e_i / f_i
  std::size_t row = 0;
  std::size_t col = 0;
  FockState row_state;
  FockState col_state;
  double e_transposed = 0.0;  // (e_i)^T[row][col] = e_i[col][row]
  double f_value = 0.0;       // f_i[row][col]
};

struct UnitarityReport {
  std::vector<double> transpose_residual;  // per i = 1..r-1
  double max_residual = 0.0;
  bool h_real_diagonal = true;
  double tolerance = 1e-10;
  bool unitary = false;
  std::optional<UnitarityWitness> witness;  // largest mismatch
};

/// Compares e_i^T with f_i on F0 in the orthonormal basis (the adjoint
/// relations of the anti-involution h -> h, e <-> f are matrix
/// transposition there) and checks the h-matrices are real diagonal.
template <class S>
UnitarityReport check_unitarity(const NumericRing<S>& ring, const RealizedGenerators& gens, long p,
                                double tolerance = 1e-10) {
  const auto set = materialize(ring, gens, p, Subspace::F0, Convention::Orthonormal);
  const std::size_t d = set.basis.size();
  UnitarityReport rep;
  rep.tolerance = tolerance;
  for (int i = 1; i <= gens.sig.r(); ++i)
    for (const auto& en : set[h(i)].entries)
      if (en.row != en.col || std::abs(std::imag(std::complex<double>(en.value))) > tolerance)
        rep.h_real_diagonal = false;

  auto dense = [&](const GenSymbol& g) {
    std::vector<std::vector<std::complex<double>>> m(d, std::vector<std::complex<double>>(d));
    for (const auto& en : set[g].entries) m[en.row][en.col] = std::complex<double>(en.value);
    return m;
  };
  double worst = -1.0;
  for (int i = 1; i < gens.sig.r(); ++i) {
    const auto me = dense(e(i)), mf = dense(f(i));
    double res = 0.0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        // antilinear adjoint: conjugate transpose
        const double diff = std::abs(std::conj(me[b][a]) - mf[a][b]);
        res = std::max(res, diff);
        if (diff > worst && diff > tolerance) {
          worst = diff;
          rep.witness = UnitarityWitness{i, a, b, set.basis[a], set.basis[b], std::real(me[b][a]), std::real(mf[a][b])};
        }
      }
    rep.transpose_residual.push_back(res);
    rep.max_residual = std::max(rep.max_residual, res);
  }
  rep.unitary = rep.h_real_diagonal && rep.max_residual <= tolerance;
  return rep;
}

struct WeightVector {
  std::vector<long> m;  // eigenvalue of h_i on the vacuum, i = 1..r
  bool vacuum_annihilated = true;
  std::vector<int> not_annihilating;  // e_i indices that fail to kill the vacuum
};

/// Highest weight of the Fock module: h eigenvalues on the vacuum at the
/// integer p, cross-checked against the realized h images, and the check
/// that every e_i image annihilates the vacuum.
template <CoefficientRing Ring>
WeightVector highest_weight(const Ring& ring, const RealizedGenerators& gens, long p, Convention conv) {
  const Signature& sig = gens.sig;
  const FockState vac = FockState::vacuum(sig);
  WeightVector w;
  for (int i = 1; i <= sig.r(); ++i) {
    const Affine& a = gens.h_values[static_cast<std::size_t>(i - 1)];
    const long mi = a.eval(vac) + a.cp * p;
    const auto out = apply(ring, sig, gens.image(h(i)), vac, conv);
    const auto expected = ring.linear(mi, 0);
    const bool consistent =
        (mi == 0 && out.empty()) ||
        (out.size() == 1 && out.entries().begin()->first == vac &&
         ring.magnitude(out.entries().begin()->second - expected) <= 1e-12 * (1.0 + std::abs(double(mi))));
    if (!consistent) throw InvalidArgument("h" + std::to_string(i) + " image is not diagonal on the vacuum");
    w.m.push_back(mi);
  }
  for (int i = 1; i < sig.r(); ++i)
    if (!apply(ring, sig, gens.image(e(i)), vac, conv).empty()) {
      w.vacuum_annihilated = false;
      w.not_annihilating.push_back(i);
    }
  return w;
}

struct TypicalityReport {
  std::vector<long> first;         // l_1..l_n, l_i = m_i - i + n + 1
  std::vector<long> second_raw;    // l_{n+1}..l_r, l_j = -m_j + j - n
  std::vector<long> second;        // {l_{n+1}, l_{n+1}+1, ..., l_r}
  std::vector<long> intersection;
  bool essentially_typical = false;
};

/// Essential-typicality test on an integral highest weight (m_1..m_r).
inline TypicalityReport essentially_typical(const Signature& sig, const std::vector<long>& weight) {
  if (static_cast<int>(weight.size()) != sig.r())
    throw InvalidArgument("weight must have r = " + std::to_string(sig.r()) + " components");
  const int n = sig.n, r = sig.r();
  TypicalityReport rep;
  for (int i = 1; i <= n; ++i) rep.first.push_back(weight[static_cast<std::size_t>(i - 1)] - i + n + 1);
  for (int j = n + 1; j <= r; ++j) rep.second_raw.push_back(-weight[static_cast<std::size_t>(j - 1)] + j - n);
  if (!rep.second_raw.empty()) {
    const long lo = rep.second_raw.front(), hi = rep.second_raw.back();
    if (hi >= lo)
      for (long v = lo; v <= hi; ++v) rep.second.push_back(v);
    else
      rep.second = rep.second_raw;
  }
  std::set<long> a(rep.first.begin(), rep.first.end()), b(rep.second.begin(), rep.second.end());
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(rep.intersection));
  rep.essentially_typical = rep.intersection.empty();
  return rep;
}

struct InequivalenceReport {
  long p1 = 0, p2 = 0;
  long dim1 = 0, dim2 = 0;
  std::vector<double> spectrum1, spectrum2;  // eigenvalues of h_1 on F0, descending
  bool inequivalent = false;
};

/// Distinguishes the HP modules F0(p1) and F0(p2) by dimension and by the
/// spectrum of h_1.
inline InequivalenceReport inequivalence(const Signature& sig, long p1, long p2, double q) {
  if (p1 == p2) throw InvalidArgument("inequivalence needs distinct p values");
  const auto gens = hp(sig);
  auto spectrum = [&](long p) {
    const NumericRing<double> ring(q, static_cast<double>(p));
    const auto set = materialize(ring, gens, p, Subspace::F0, Convention::Orthonormal);
    std::vector<double> spec(set.basis.size(), 0.0);
    for (const auto& en : set[h(1)].entries)
      if (en.row == en.col) spec[en.row] = en.value;
    std::sort(spec.begin(), spec.end(), std::greater<>());
    return spec;
  };
  InequivalenceReport rep;
  rep.p1 = p1;
  rep.p2 = p2;
  rep.spectrum1 = spectrum(p1);
  rep.spectrum2 = spectrum(p2);
  rep.dim1 = static_cast<long>(rep.spectrum1.size());
  rep.dim2 = static_cast<long>(rep.spectrum2.size());
  rep.inequivalent = rep.dim1 != rep.dim2 || rep.spectrum1 != rep.spectrum2;
  return rep;
}

struct CyclicityReport {
  std::size_t dim = 0;
  std::size_t rank_from_vacuum = 0;
  std::vector<std::size_t> rank_from_basis;  // per basis vector
  bool cyclic_from_every_basis_vector = false;
  double threshold = 1e-8;
};

namespace detail {

/// Rank of the span of all words in the generator matrices applied to v,
/// computed as the closure of span{v} under the generators. New vectors are
/// max-norm scaled, orthogonalized against the accepted set (twice), and kept
/// when the remaining max-norm exceeds the threshold.
inline std::size_t closure_rank(const std::vector<std::vector<std::vector<double>>>& gens, std::vector<double> v,
                                double threshold) {
  const std::size_t d = v.size();
  std::vector<std::vector<double>> basis;
  auto max_norm = [](const std::vector<double>& x) {
    double m = 0.0;
    for (double c : x) m = std::max(m, std::abs(c));
    return m;
  };
  auto try_add = [&](std::vector<double> x) {
    double s = max_norm(x);
    if (s == 0.0) return false;
    for (double& c : x) c /= s;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        double dot = 0.0;
        for (std::size_t k = 0; k < d; ++k) dot += b[k] * x[k];
        for (std::size_t k = 0; k < d; ++k) x[k] -= dot * b[k];
      }
    if (max_norm(x) <= threshold) return false;
    double norm = 0.0;
    for (double c : x) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : x) c /= norm;
    basis.push_back(std::move(x));
    return true;
  };
  try_add(std::move(v));
  for (std::size_t k = 0; k < basis.size() && basis.size() < d; ++k) {
    for (const auto& m : gens) {
      std::vector<double> y(d, 0.0);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) y[a] += m[a][b] * basis[k][b];
      try_add(std::move(y));
      if (basis.size() == d) break;
    }
  }
  return basis.size();
}

}  // namespace detail

/// Irreducibility evidence on F0: the submodule generated by each basis
/// vector (and by the vacuum) is the whole space.
inline CyclicityReport cyclicity(const NumericRing<double>& ring, const RealizedGenerators& gens, long p,
                                 double threshold = 1e-8) {
  const auto set = materialize(ring, gens, p, Subspace::F0, Convention::Orthonormal);
  std::vector<std::vector<std::vector<double>>> mats;
  for (const auto& g : all_generators(gens.sig)) mats.push_back(set.dense(g));
  CyclicityReport rep;
  rep.dim = set.basis.size();
  rep.threshold = threshold;
  rep.cyclic_from_every_basis_vector = true;
  for (std::size_t k = 0; k < rep.dim; ++k) {
    std::vector<double> v(rep.dim, 0.0);
    v[k] = 1.0;
    const std::size_t rk = detail::closure_rank(mats, v, threshold);
    rep.rank_from_basis.push_back(rk);
    if (rk != rep.dim) rep.cyclic_from_every_basis_vector = false;
  }
  const auto vac = set.basis.position(FockState::vacuum(gens.sig));
  rep.rank_from_vacuum = vac ? rep.rank_from_basis[*vac] : 0;
  return rep;
}

struct DeformedCheck {
  std::string name;
  double residual = 0.0;
  bool passed = false;
};

struct DeformedOscillatorReport {
  std::vector<DeformedCheck> checks;
  std::vector<std::string> fermionic_variant;  // per fermionic mode: "q^{+N}", "q^{-N}", "both" or "none"
  double cross_mode_q_bracket = 0.0;           // informational: q-bracket for i != j
  double hp_deformed_agreement = 0.0;          // max |hp - hp_deformed| over generators and probes
  double tolerance = 1e-12;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

template <CoefficientRing Ring>
double max_residual(const Ring& ring, const Signature& sig, const OperatorExpr& x, const std::vector<FockState>& probes,
                    Convention conv) {
  double r = 0.0;
  for (const auto& s : probes) {
    const auto out = apply(ring, sig, x, s, conv);
    for (const auto& [t, c] : out.entries()) r = std::max(r, ring.magnitude(c));
  }
  return r;
}

/// Relations of the deformed oscillators on the probes of degree <= cap,
/// plus agreement of the two forms of the HP realization.
template <class S>
DeformedOscillatorReport check_deformed_oscillators(const NumericRing<S>& ring, const Signature& sig, long cap,
                                                    double tolerance = 1e-12) {
  DeformedOscillatorReport rep;
  rep.tolerance = tolerance;
  const auto probes = enumerate_up_to(sig, cap).states();
  const auto conv = Convention::Orthonormal;
  const TildeOps t = tilde_ops(sig);
  const CoeffExact qc = q_power(1, 0);
  auto add = [&](std::string name, const OperatorExpr& x) {
    const double r = max_residual(ring, sig, x, probes, conv);
    rep.checks.push_back({std::move(name), r, r <= tolerance});
  };
  auto qn = [&](int i, int sign) {
    Affine a = Affine::occupation(sig, i);
    if (sign < 0) a = -a;
    return OperatorExpr::diag(DiagKind::QPower, a);
  };
  const int modes = sig.modes();
  for (int i = 1; i <= modes; ++i) {
    const std::string tag = "[i=" + std::to_string(i) + "]";
    const OperatorExpr qbr = super_commutator(sig, t.minus(i), t.plus(i), qc);
    if (!sig.is_fermionic(i)) {
      add("qbracket" + tag, qbr - qn(i, -1));
    } else {
      const double minus = max_residual(ring, sig, qbr - qn(i, -1), probes, conv);
      const double plus = max_residual(ring, sig, qbr - qn(i, +1), probes, conv);
      std::string v = plus <= tolerance ? (minus <= tolerance ? "both" : "q^{+N}") : (minus <= tolerance ? "q^{-N}" : "none");
      rep.fermionic_variant.push_back(v);
      rep.checks.push_back({"qbracket" + tag + "q^{+N}", plus, plus <= tolerance});
      rep.checks.push_back({"qbracket-variant" + tag + "q^{-N}(informational)", minus, true});
    }
    for (int j = 1; j <= modes; ++j) {
      const std::string tj = "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
      const CoeffExact dl = i == j ? CoeffExact(1) : CoeffExact(0);
      add("N-raise" + tj, super_commutator(sig, t.num(i), t.plus(j)) - dl * t.plus(j));
      add("N-lower" + tj, super_commutator(sig, t.num(i), t.minus(j)) + dl * t.minus(j));
      if (i == j) continue;
      add("raise-raise" + tj, super_commutator(sig, t.plus(i), t.plus(j)));
      add("lower-lower" + tj, super_commutator(sig, t.minus(i), t.minus(j)));
      add("N-N" + tj, super_commutator(sig, t.num(i), t.num(j)));
      add("lower-raise" + tj, super_commutator(sig, t.minus(i), t.plus(j)));
      rep.cross_mode_q_bracket =
          std::max(rep.cross_mode_q_bracket, max_residual(ring, sig, super_commutator(sig, t.minus(i), t.plus(j), qc),
                                                          probes, conv));
    }
  }

  const auto a = hp(sig), b = hp_deformed(sig);
  double agree = 0.0;
  for (const auto& g : all_generators(sig)) agree = std::max(agree, max_residual(ring, sig, a.image(g) - b.image(g), probes, conv));
  rep.hp_deformed_agreement = agree;
  rep.checks.push_back({"hp-vs-hp-deformed", agree, agree <= tolerance});
  return rep;
}

}  // namespace uqgl
