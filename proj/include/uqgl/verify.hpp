#pragma once

// Relation verification: substitute realized generators into every relation
// and check that the difference annihilates each probe state.
//
// Every relation difference is a combination of words of bounded length
// whose coefficients depend only on occupation numbers, and each word maps a
// basis state to a single basis state. Exact vanishing on every basis state of
// degree <= cap (cap >= 4) therefore establishes the identity on the span of
// those states; a few random states of degree cap+1..cap+4 are probed as well.

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "uqgl/fock.hpp"
#include "uqgl/presentation.hpp"
#include "uqgl/realize.hpp"
#include "uqgl/weyl.hpp"

namespace uqgl {

enum class Status { ExactPass, NumericPass, Fail };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::ExactPass: return "exact-pass";
    case Status::NumericPass: return "numeric-pass";
    case Status::Fail: return "fail";
  }
  return "?";
}

struct Witness {
  FockState state;   // probe state the difference was applied to
  FockState target;  // component of the result that failed to vanish
  std::string coefficient;
  std::string sample;  // q value of the failing sample
};

struct RelationResult {
  std::string name;
  Status status = Status::ExactPass;
  double residual = 0.0;
  std::optional<Witness> witness;
  std::string note;
};

struct VerifyMeta {
  Signature sig;
  RealizationKind kind = RealizationKind::Dyson;
  std::string mode;
  std::string p;
  std::vector<std::string> q;
  long cap = 6;
  Convention convention = Convention::ExactMonomial;
  double tolerance = 1e-10;
  std::size_t probe_states = 0;
};

struct VerificationReport {
  VerifyMeta meta;
  std::vector<RelationResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.status != Status::Fail; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return r.status == Status::Fail; }));
  }
  const RelationResult* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

struct VerifyOptions {
  long cap = 6;
  Convention convention = Convention::ExactMonomial;
  double tolerance = 1e-10;
  int extra_states = 8;  // random probes of degree cap+1..cap+4
  unsigned seed = 20240611u;
};

/// Default probe cap: p + 4 for a small integer p, else 6.
inline long default_cap(std::optional<long> p) { return p && *p >= 0 && *p <= 8 ? std::max(*p + 4, 4L) : 6L; }

/// Basis states of degree <= cap plus reproducible random higher states.
inline std::vector<FockState> probe_states(const Signature& sig, long cap, int extra, unsigned seed) {
  std::vector<FockState> out = enumerate_up_to(sig, cap).states();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> degree(cap + 1, cap + 4);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> boson(1, sig.n - 1);
  for (int k = 0; k < extra; ++k) {
    FockState s = FockState::vacuum(sig);
    long d = degree(rng);
    for (int i = sig.n; i <= sig.modes() && d > 0; ++i)
      if (coin(rng)) {
        s[i] = 1;
        --d;
      }
    for (; d > 0; --d) s[boson(rng)] += 1;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

/// Net total-degree shift of a word (raises minus lowers).
inline long degree_shift(const Word& w) {
  long d = 0;
  for (const auto& a : w) {
    if (std::holds_alternative<Raise>(a)) ++d;
    else if (std::holds_alternative<Lower>(a)) --d;
  }
  return d;
}

/// All terms of a relation difference must shift degree by the same amount.
inline std::optional<std::string> degree_audit(const OperatorExpr& diff) {
  if (diff.empty()) return std::nullopt;
  const long d0 = degree_shift(diff.terms().front().word);
  for (const auto& t : diff.terms())
    if (degree_shift(t.word) != d0)
      return "degree audit: terms shift total degree by " + std::to_string(d0) + " and " +
             std::to_string(degree_shift(t.word));
  return std::nullopt;
}

/// Sum of the magnitudes of the individual term contributions; the floating
/// point error of a cancelling sum scales with it.
template <CoefficientRing Ring>
double contribution_scale(const Ring& ring, const Signature& sig, const OperatorExpr& diff, const FockState& s,
                          Convention conv) {
  double scale = 0.0;
  for (const auto& t : diff.terms())
    if (auto img = apply_word(ring, sig, t.word, s, conv))
      scale += ring.magnitude(ring.from_exact(t.scalar) * img->first);
  return scale;
}

/// Checks one relation difference against the probes over every sample. The
/// first `base_count` probes are held to the absolute tolerance; the extra
/// high-degree probes (numeric rings only) to the tolerance scaled by the
/// magnitude of the cancelling terms.
template <CoefficientRing Ring>
RelationResult verify_relation(std::span<const Ring> samples, const Signature& sig, const std::string& name,
                               const OperatorExpr& diff, const std::vector<FockState>& probes,
                               std::size_t base_count, const VerifyOptions& opt) {
  RelationResult res;
  res.name = name;
  res.status = Ring::exact ? Status::ExactPass : Status::NumericPass;
  if (auto bad = degree_audit(diff)) {
    res.status = Status::Fail;
    res.note = *bad;
    return res;
  }
  for (const Ring& ring : samples) {
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const FockState& s = probes[k];
      StateVector<typename Ring::value_type> out;
      double tol = opt.tolerance;
      try {
        out = apply(ring, sig, diff, s, opt.convention);
        if (!Ring::exact && k >= base_count && !out.empty())
          tol *= std::max(1.0, contribution_scale(ring, sig, diff, s, opt.convention));
      } catch (const Error& err) {
        res.status = Status::Fail;
        res.witness = Witness{s, s, "", ring.q_label()};
        res.note = err.what();
        return res;
      }
      if (out.empty()) continue;
      long d = out.entries().begin()->first.total();
      for (const auto& [t, c] : out.entries())
        if (t.total() != d) {
          res.status = Status::Fail;
          res.witness = Witness{s, t, ring.format(c), ring.q_label()};
          res.note = "result mixes total degrees";
          return res;
        }
      for (const auto& [t, c] : out.entries()) {
        const double mag = ring.magnitude(c);
        if constexpr (Ring::exact) {
          res.status = Status::Fail;
          res.residual = mag;
          res.witness = Witness{s, t, ring.format(c), ring.q_label()};
          return res;
        } else {
          if (k < base_count && mag > res.residual) res.residual = mag;
          if (mag > tol && res.status != Status::Fail) {
            res.status = Status::Fail;
            res.residual = std::max(res.residual, mag);
            res.witness = Witness{s, t, ring.format(c), ring.q_label()};
          }
        }
      }
    }
  }
  return res;
}

template <CoefficientRing Ring>
VerificationReport verify_all(std::span<const Ring> samples, const RealizedGenerators& gens,
                              const std::vector<Relation>& relations, const VerifyOptions& opt) {
  if (samples.empty()) throw InvalidArgument("verify_all needs at least one coefficient sample");
  VerificationReport rep;
  rep.meta.sig = gens.sig;
  rep.meta.kind = gens.kind;
  rep.meta.mode = Ring::mode_label;
  rep.meta.p = samples.front().p_label();
  for (const auto& r : samples) rep.meta.q.push_back(r.q_label());
  rep.meta.cap = opt.cap;
  rep.meta.convention = opt.convention;
  rep.meta.tolerance = opt.tolerance;

  const auto probes = probe_states(gens.sig, opt.cap, opt.extra_states, opt.seed);
  const std::size_t base_count = enumerate_up_to(gens.sig, opt.cap).size();
  rep.meta.probe_states = probes.size();
  for (const auto& rel : relations) {
    OperatorExpr diff;
    try {
      diff = substitute(rel, gens);
    } catch (const Error& err) {
      rep.results.push_back({rel.name, Status::Fail, 0.0, std::nullopt, err.what()});
      continue;
    }
    rep.results.push_back(verify_relation(samples, gens.sig, rel.name, diff, probes, base_count, opt));
  }
  return rep;
}

template <CoefficientRing Ring>
VerificationReport verify_all(const Ring& ring, const RealizedGenerators& gens, const std::vector<Relation>& relations,
                              const VerifyOptions& opt) {
  return verify_all(std::span<const Ring>(&ring, 1), gens, relations, opt);
}

/// Line-oriented report. Header lines start with '#'; then one tab-separated
/// record per relation: name, status, residual, witness. The witness field is
/// "-" or "state=<l..>;target=<l..>;coef=<c>;q=<q>".
inline void write_report(std::ostream& os, const VerificationReport& rep) {
  const auto& m = rep.meta;
  os << "# uqgl-verify 1\n";
  os << "# signature n=" << m.sig.n << " m=" << m.sig.m << "\n";
  os << "# realization " << to_string(m.kind) << "\n";
  os << "# mode " << m.mode << "\n";
  os << "# p " << m.p << "\n";
  os << "# q";
  for (const auto& q : m.q) os << ' ' << q;
  os << "\n# cap " << m.cap << "\n";
  os << "# convention " << to_string(m.convention) << "\n";
  os << "# tolerance " << format_double(m.tolerance) << "\n";
  os << "# probes " << m.probe_states << "\n";
  os << "# name\tstatus\tresidual\twitness\n";
  for (const auto& r : rep.results) {
    os << r.name << '\t' << to_string(r.status) << '\t' << format_double(r.residual) << '\t';
    if (r.witness)
      os << "state=" << r.witness->state.str() << ";target=" << r.witness->target.str()
         << ";coef=" << r.witness->coefficient << ";q=" << r.witness->sample;
    else
      os << '-';
    if (!r.note.empty()) os << ";note=" << r.note;
    os << '\n';
  }
}

/// Human-readable table.
inline void print_table(std::ostream& os, const VerificationReport& rep) {
  const auto& m = rep.meta;
  os << "realization " << to_string(m.kind) << "  (n=" << m.sig.n << ", m=" << m.sig.m << ")  mode " << m.mode
     << "  p=" << m.p << "  q=";
  for (std::size_t k = 0; k < m.q.size(); ++k) os << (k ? "," : "") << m.q[k];
  os << "  cap=" << m.cap << "  probes=" << m.probe_states << "\n";
  std::size_t width = 8;
  for (const auto& r : rep.results) width = std::max(width, r.name.size());
  for (const auto& r : rep.results) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(12)
       << to_string(r.status) << "  " << format_double(r.residual);
    if (r.witness) os << "  witness " << r.witness->state << " -> " << r.witness->target << " coef " << r.witness->coefficient;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
  }
  os << rep.results.size() - rep.failures() << "/" << rep.results.size() << " relations pass\n";
}

}  // namespace uqgl
