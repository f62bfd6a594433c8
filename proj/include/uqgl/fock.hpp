#pragma once

// Graded Fock basis of n-1 bosonic and m fermionic modes.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "uqgl/error.hpp"

namespace uqgl {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// (n, m) with r = n + m. Modes are numbered 1..r-1; modes i < n are
/// bosonic, modes i >= n fermionic.
struct Signature {
  int n = 2;
  int m = 1;

  Signature() = default;
  Signature(int n_, int m_) : n(n_), m(m_) {
    if (n < 2) throw InvalidArgument("signature requires n >= 2 (got n = " + std::to_string(n) + ")");
    if (m < 0) throw InvalidArgument("signature requires m >= 0");
  }

  int r() const { return n + m; }
  int modes() const { return n + m - 1; }
  bool is_fermionic(int mode) const { return mode >= n; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Parity mode_parity(const Signature& sig, int mode) {
  if (mode < 1 || mode > sig.modes())
    throw InvalidArgument("mode index " + std::to_string(mode) + " out of range 1.." +
                          std::to_string(sig.modes()));
  return sig.is_fermionic(mode) ? Parity::Odd : Parity::Even;
}

/// Occupation vector |l_1, ..., l_{r-1}>. Ordered graded-lexicographically:
/// total occupation first, then lexicographic.
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<int> occ) : occ_(std::move(occ)) {}
  static FockState vacuum(const Signature& sig) { return FockState(std::vector<int>(sig.modes(), 0)); }

  const std::vector<int>& occupations() const { return occ_; }
  std::size_t size() const { return occ_.size(); }

  /// 1-based mode access.
  int operator[](int mode) const { return occ_[static_cast<std::size_t>(mode - 1)]; }
  int& operator[](int mode) { return occ_[static_cast<std::size_t>(mode - 1)]; }

  long total() const { return std::accumulate(occ_.begin(), occ_.end(), 0L); }

  bool valid_for(const Signature& sig) const {
    if (static_cast<int>(occ_.size()) != sig.modes()) return false;
    for (int i = 1; i <= sig.modes(); ++i) {
      const int l = (*this)[i];
      if (l < 0 || (sig.is_fermionic(i) && l > 1)) return false;
    }
    return true;
  }

  friend bool operator==(const FockState&, const FockState&) = default;
  friend std::strong_ordering operator<=>(const FockState& x, const FockState& y) {
    if (auto c = x.total() <=> y.total(); c != 0) return c;
    return x.occ_ <=> y.occ_;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < occ_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(occ_[i]);
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const FockState& s) { return os << '|' << s.str() << '>'; }

 private:
  std::vector<int> occ_;
};

/// Ordered list of states with the inverse position map.
class BasisIndex {
 public:
  BasisIndex() = default;
  explicit BasisIndex(std::vector<FockState> states) : states_(std::move(states)) {
    std::sort(states_.begin(), states_.end());
    for (std::size_t k = 0; k < states_.size(); ++k) index_.emplace(states_[k], k);
  }

  const std::vector<FockState>& states() const& { return states_; }
  std::vector<FockState> states() && { return std::move(states_); }
  std::size_t size() const { return states_.size(); }
  const FockState& operator[](std::size_t k) const { return states_[k]; }
  bool contains(const FockState& s) const { return index_.contains(s); }
  std::optional<std::size_t> position(const FockState& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<FockState> states_;
  std::map<FockState, std::size_t> index_;
};

namespace detail {

inline void enumerate_rec(const Signature& sig, int mode, long remaining, std::vector<int>& occ,
                          std::vector<FockState>& out) {
  if (mode > sig.modes()) {
    out.emplace_back(occ);
    return;
  }
  const long top = sig.is_fermionic(mode) ? std::min(1L, remaining) : remaining;
  for (long l = 0; l <= top; ++l) {
    occ[static_cast<std::size_t>(mode - 1)] = static_cast<int>(l);
    enumerate_rec(sig, mode + 1, remaining - l, occ, out);
  }
  occ[static_cast<std::size_t>(mode - 1)] = 0;
}

inline long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace detail

/// All states with total occupation <= cap, in graded-lex order.
inline BasisIndex enumerate_up_to(const Signature& sig, long cap) {
  if (cap < 0) throw InvalidArgument("cap must be nonnegative");
  std::vector<FockState> out;
  std::vector<int> occ(static_cast<std::size_t>(sig.modes()), 0);
  detail::enumerate_rec(sig, 1, cap, occ, out);
  return BasisIndex(std::move(out));
}

/// Closed form for dim F0(p) = sum_f C(m, f) C(p - f + n - 1, n - 1).
inline long dim_F0(const Signature& sig, long p) {
  if (p < 0) throw InvalidArgument("p must be nonnegative");
  long total = 0;
  for (long f = 0; f <= std::min<long>(sig.m, p); ++f)
    total += detail::binomial(sig.m, f) * detail::binomial(p - f + sig.n - 1, sig.n - 1);
  return total;
}

struct FockSplit {
  BasisIndex f0;        // total <= p
  BasisIndex f1_slice;  // p < total <= cap
};

inline FockSplit split_F0_F1(const Signature& sig, long p, long cap) {
  if (p < 0) throw InvalidArgument("p must be nonnegative");
  if (cap < p + 1) throw InvalidArgument("split_F0_F1 requires cap >= p + 1");
  std::vector<FockState> low, high;
  const BasisIndex all = enumerate_up_to(sig, cap);
  for (const auto& s : all.states()) (s.total() <= p ? low : high).push_back(s);
  return {BasisIndex(std::move(low)), BasisIndex(std::move(high))};
}

}  // namespace uqgl
