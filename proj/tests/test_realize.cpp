#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "uqgl/mutations.hpp"
#include "uqgl/realize.hpp"

using namespace uqgl;
using Catch::Approx;

namespace {

double qb(double q, double x) { return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q); }

template <class Ring>
auto single(const Ring& ring, const Signature& sig, const OperatorExpr& x, const FockState& s, Convention conv) {
  const auto out = apply(ring, sig, x, s, conv);
  REQUIRE(out.size() == 1);
  return *out.entries().begin();
}

}  // namespace

TEST_CASE("every generator has an image of the right parity", "[realize]") {
  for (const auto& sig : {Signature(2, 0), Signature(2, 1), Signature(3, 2), Signature(4, 1)})
    for (auto kind : {RealizationKind::Dyson, RealizationKind::HP, RealizationKind::HPDeformed}) {
      const auto g = realize(kind, sig);
      CHECK(g.images.size() == static_cast<std::size_t>(3 * sig.r() - 2));
      for (const auto& [sym, img] : g.images) {
        CHECK_FALSE(img.empty());
        CHECK(img.parity(sig) == generator_parity(sig, sym));
      }
      CHECK_THROWS_AS(g.image(e(sig.r())), InvalidArgument);
    }
}

TEST_CASE("Cartan images are p - N and the occupations", "[realize]") {
  const Signature sig(3, 1);
  const ExactRing ring(4L);
  const FockState s({2, 1, 1});
  const auto g = dyson(sig);
  const long expected[] = {4 - 4, 2, 1, 1};
  for (int i = 1; i <= sig.r(); ++i) {
    const auto out = apply(ring, sig, g.image(h(i)), s, Convention::ExactMonomial);
    if (expected[i - 1] == 0) CHECK(out.empty());
    else CHECK(out.entries().at(s) == CoeffExact(expected[i - 1]));
  }
}

TEST_CASE("Dyson action with formal p", "[realize]") {
  const Signature sig(3, 1);
  const ExactRing ring;
  const auto g = dyson(sig);
  // e1 |1,0,0> = [p] |0,0,0>
  auto [t1, c1] = single(ring, sig, g.image(e(1)), FockState({1, 0, 0}), Convention::ExactMonomial);
  CHECK(t1 == FockState({0, 0, 0}));
  CHECK(c1 == bracket_affine(0, 1, 0));
  // e2 |0,2,0> = 2 [2]/2 |1,1,0>: lowering gives 2, the ratio is taken at N_2 + 1 = 2
  auto [t2, c2] = single(ring, sig, g.image(e(2)), FockState({0, 2, 0}), Convention::ExactMonomial);
  CHECK(t2 == FockState({1, 1, 0}));
  CHECK(c2 == CoeffExact(bracket_int(2)));
  // f1 = A_1^+
  auto [t3, c3] = single(ring, sig, g.image(f(1)), FockState({0, 0, 1}), Convention::ExactMonomial);
  CHECK(t3 == FockState({1, 0, 1}));
  CHECK(c3 == CoeffExact(1));
}

TEST_CASE("HP action", "[realize]") {
  const Signature sig(2, 1);
  const NumericRing<double> ring(1.3, 2.0);
  const auto g = hp(sig);
  auto [t, c] = single(ring, sig, g.image(f(1)), FockState({0, 0}), Convention::Orthonormal);
  CHECK(t == FockState({1, 0}));
  CHECK(c == Approx(1.438482).epsilon(1e-6));
  CHECK(c == Approx(std::sqrt(qb(1.3, 2.0))));
  // f1 at the F0 boundary: sqrt([p - N + 1]) = sqrt([0]) = 0
  CHECK(apply(ring, sig, g.image(f(1)), FockState({2, 0}), Convention::Orthonormal).empty());
  CHECK(apply(ring, sig, g.image(f(1)), FockState({1, 1}), Convention::Orthonormal).empty());
  // e1 |1,0> = sqrt([p]) <1> sqrt(1) |0,0>
  auto [t2, c2] = single(ring, sig, g.image(e(1)), FockState({1, 0}), Convention::Orthonormal);
  CHECK(t2 == FockState({0, 0}));
  CHECK(c2 == Approx(std::sqrt(qb(1.3, 2.0))));
}

TEST_CASE("HP above F0 needs the complex ring", "[realize]") {
  const Signature sig(2, 1);
  const auto g = hp(sig);
  const FockState high({4, 0});
  CHECK_THROWS_AS(apply(NumericRing<double>(1.3, 2.0), sig, g.image(e(1)), high, Convention::Orthonormal),
                  NegativeRadicand);
  const auto out = apply(NumericRing<std::complex<double>>(1.3, 2.0), sig, g.image(e(1)), high, Convention::Orthonormal);
  REQUIRE(out.size() == 1);
  CHECK(std::abs(out.entries().begin()->second.real()) < 1e-15);
}

TEST_CASE("substitution of relations", "[realize]") {
  const Signature sig(2, 1);
  const auto g = dyson(sig);
  const ExactRing ring;
  const auto rels = build_relations(sig);
  const auto& ck3 = *std::find_if(rels.begin(), rels.end(), [](const auto& r) { return r.name == "CK3[i=1,j=2]"; });
  const auto diff = substitute(ck3, g);
  const auto direct = g.image(e(1)) * g.image(f(2)) - g.image(f(2)) * g.image(e(1));
  for (const auto& s : enumerate_up_to(sig, 4).states())
    CHECK(apply(ring, sig, diff, s, Convention::ExactMonomial) == apply(ring, sig, direct, s, Convention::ExactMonomial));
  CHECK(substitute(Relation{"trivial", {}, {}, BracketForm::Commutator}, g).empty());
  const auto br = g.h_bracket(HBracket{{{2, 1}, {3, 1}}});
  const auto out = apply(ring, sig, br, FockState({0, 1}), Convention::ExactMonomial);
  CHECK(out.entries().at(FockState({0, 1})) == CoeffExact(1));  // [N_1 + N_2] = [1]
  CHECK_THROWS_AS(g.h_bracket(HBracket{{{4, 1}}}), InvalidArgument);
}

TEST_CASE("mutations change the images", "[realize]") {
  const Signature sig(3, 1);
  const auto base = dyson(sig);
  const ExactRing ring;
  for (auto m : {Mutation::DropBracketRatio, Mutation::FlipFermionSign, Mutation::ShiftBoundary}) {
    const auto mutated = mutate(base, m);
    bool differs = false;
    for (const auto& probe : enumerate_up_to(sig, 3).states())
      for (const auto& [sym, img] : base.images)
        if (!(apply(ring, sig, img, probe, Convention::ExactMonomial) ==
              apply(ring, sig, mutated.image(sym), probe, Convention::ExactMonomial)))
          differs = true;
    CHECK(differs);
  }
  CHECK_THROWS_AS(mutate(dyson(Signature(2, 1)), Mutation::DropBracketRatio), InvalidArgument);
  CHECK_THROWS_AS(mutate(dyson(Signature(3, 0)), Mutation::FlipFermionSign), InvalidArgument);
}
