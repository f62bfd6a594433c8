#include <catch_amalgamated.hpp>

#include "uqgl/weyl.hpp"

using namespace uqgl;

namespace {

template <class Ring>
bool annihilates(const Ring& ring, const Signature& sig, const OperatorExpr& x, long cap, Convention conv,
                 double tol = 0.0) {
  for (const auto& s : enumerate_up_to(sig, cap).states()) {
    const auto out = apply(ring, sig, x, s, conv);
    for (const auto& [t, c] : out.entries())
      if (ring.magnitude(c) > tol) return false;
  }
  return true;
}

const std::vector<Signature> kSigs = {Signature(2, 0), Signature(2, 1), Signature(3, 2), Signature(2, 3)};

}  // namespace

TEST_CASE("graded CAO relations in both conventions", "[weyl]") {
  const ExactRing exact;
  const NumericRing<double> num(1.3, 2.0);
  for (const auto& sig : kSigs) {
    const OperatorExpr one = OperatorExpr::identity();
    for (int i = 1; i <= sig.modes(); ++i)
      for (int j = 1; j <= sig.modes(); ++j) {
        const CoeffExact d = i == j ? 1 : 0;
        const auto lr = super_commutator(sig, lower_op(i), raise_op(j)) - d * one;
        const auto ll = super_commutator(sig, lower_op(i), lower_op(j));
        const auto rr = super_commutator(sig, raise_op(i), raise_op(j));
        const auto nr = super_commutator(sig, number_op(sig, i), raise_op(j)) - d * raise_op(j);
        const auto nl = super_commutator(sig, number_op(sig, i), lower_op(j)) + d * lower_op(j);
        for (const auto* x : {&lr, &ll, &rr, &nr, &nl}) {
          CHECK(annihilates(exact, sig, *x, 4, Convention::ExactMonomial));
          CHECK(annihilates(num, sig, *x, 4, Convention::Orthonormal, 1e-12));
        }
      }
  }
}

TEST_CASE("number operator equals A+A-", "[weyl]") {
  const ExactRing exact;
  for (const auto& sig : kSigs)
    for (int i = 1; i <= sig.modes(); ++i)
      CHECK(annihilates(exact, sig, raise_op(i) * lower_op(i) - number_op(sig, i), 5, Convention::ExactMonomial));
}

TEST_CASE("diagonal functions shift past mode operators", "[weyl]") {
  // f(N_i) A_i^+ = A_i^+ f(N_i + 1) and A_i^- f(N_i) = f(N_i + 1) A_i^-
  const ExactRing exact;
  const Signature sig(3, 1);
  for (int i = 1; i <= sig.modes(); ++i)
    for (auto kind : {DiagKind::Bracket, DiagKind::QPower, DiagKind::Linear}) {
      const auto f0 = OperatorExpr::diag(kind, Affine::occupation(sig, i), i);
      const auto f1 = OperatorExpr::diag(kind, Affine::occupation(sig, i, 1), i);
      CHECK(annihilates(exact, sig, f0 * raise_op(i) - raise_op(i) * f1, 5, Convention::ExactMonomial));
      CHECK(annihilates(exact, sig, lower_op(i) * f0 - f1 * lower_op(i), 5, Convention::ExactMonomial));
    }
}

TEST_CASE("fermionic q-identities hold on the Pauli-bounded space", "[weyl]") {
  // On a fermionic mode [N] = N and q^{2N} = 1 + (q^2 - 1) N.
  const ExactRing exact;
  const Signature sig(2, 2);
  for (int i = sig.n; i <= sig.modes(); ++i) {
    const auto br = OperatorExpr::diag(DiagKind::Bracket, Affine::occupation(sig, i), i);
    CHECK(annihilates(exact, sig, br - number_op(sig, i), 4, Convention::ExactMonomial));
    Affine two_n = Affine::occupation(sig, i) + Affine::occupation(sig, i);
    const auto q2n = OperatorExpr::diag(DiagKind::QPower, two_n, i);
    const CoeffExact q2m1 = q_power(2, 0) - CoeffExact(1);
    CHECK(annihilates(exact, sig, q2n - OperatorExpr::identity() - q2m1 * number_op(sig, i), 4,
                      Convention::ExactMonomial));
  }
}

TEST_CASE("fermion sign counts occupied fermionic modes to the left", "[weyl]") {
  const Signature sig(2, 3);  // modes 2, 3, 4 fermionic
  const ExactRing exact;
  const FockState s({1, 1, 0, 1});
  CHECK(fermion_sign(sig, s, 2) == 1);
  CHECK(fermion_sign(sig, s, 3) == -1);
  CHECK(fermion_sign(sig, s, 4) == -1);
  const auto out = apply(exact, sig, raise_op(3), s, Convention::ExactMonomial);
  REQUIRE(out.size() == 1);
  CHECK(out.entries().begin()->first == FockState({1, 1, 1, 1}));
  CHECK(out.entries().begin()->second == CoeffExact(-1));
  CHECK(apply(exact, sig, raise_op(2), s, Convention::ExactMonomial).empty());
}

TEST_CASE("conventions differ by the expected normalization", "[weyl]") {
  const Signature sig(3, 0);
  const ExactRing exact;
  const NumericRing<double> num(1.0, 0.0);
  const FockState s({3, 0});
  const auto em = apply(exact, sig, lower_op(1), s, Convention::ExactMonomial);
  CHECK(em.entries().at(FockState({2, 0})) == CoeffExact(3));
  const auto on = apply(num, sig, lower_op(1), s, Convention::Orthonormal);
  CHECK(on.entries().at(FockState({2, 0})) == Catch::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(apply(exact, sig, lower_op(1), s, Convention::Orthonormal), Unsupported);
}

TEST_CASE("expression algebra and parity", "[weyl]") {
  const Signature sig(2, 1);
  const auto x = raise_op(1) * lower_op(2);
  CHECK(x.parity(sig) == Parity::Odd);
  CHECK((raise_op(2) * lower_op(2)).parity(sig) == Parity::Even);
  CHECK_THROWS_AS((raise_op(1) + raise_op(2)).parity(sig), InvalidArgument);
  CHECK((x - x).collected().empty());
  CHECK((x + x).collected().terms().size() == 1);
  CHECK(OperatorExpr{}.str() == "0");
  CHECK_THROWS_AS(apply(ExactRing{}, sig, raise_op(3), FockState::vacuum(sig), Convention::ExactMonomial),
                  InvalidArgument);
}

TEST_CASE("apply is linear", "[weyl]") {
  const Signature sig(3, 1);
  const ExactRing exact;
  const auto x = raise_op(1) * lower_op(2) + CoeffExact(bracket_int(2)) * number_op(sig, 3);
  const auto y = raise_op(3) * lower_op(1);
  for (const auto& s : enumerate_up_to(sig, 3).states()) {
    auto lhs = apply(exact, sig, x + y, s, Convention::ExactMonomial);
    auto rhs = apply(exact, sig, x, s, Convention::ExactMonomial);
    rhs += apply(exact, sig, y, s, Convention::ExactMonomial);
    CHECK(lhs == rhs);
    StateVector<CoeffExact> v(s, CoeffExact(2));
    v.add(FockState::vacuum(sig), CoeffExact(-1));
    auto composed = apply(exact, sig, x * y, v, Convention::ExactMonomial);
    CHECK(composed == apply(exact, sig, x, apply(exact, sig, y, v, Convention::ExactMonomial), Convention::ExactMonomial));
  }
}
