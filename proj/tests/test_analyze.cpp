#include <catch_amalgamated.hpp>

#include "uqgl/analyze.hpp"
#include "uqgl/mutations.hpp"

using namespace uqgl;

TEST_CASE("HP matrices on F0", "[analyze]") {
  const Signature sig(2, 1);
  const NumericRing<double> ring(1.3, 1.0);
  const auto set = materialize(ring, hp(sig), 1, Subspace::F0, Convention::Orthonormal);
  REQUIRE(set.basis.size() == 3);
  CHECK(static_cast<long>(set.basis.size()) == dim_F0(sig, 1));
  const auto h1 = set.dense(h(1));
  CHECK(h1[set.basis.position(FockState({0, 0})).value()][set.basis.position(FockState({0, 0})).value()] == 1.0);
  CHECK(h1[set.basis.position(FockState({1, 0})).value()][set.basis.position(FockState({1, 0})).value()] == 0.0);
  for (const auto& [g, mat] : set.matrices) CHECK(mat.dropped == 0);
  for (int i = 2; i <= sig.r(); ++i)
    for (const auto& e : set[h(i)].entries) {
      CHECK(e.row == e.col);
      CHECK(e.value >= 0.0);
      CHECK(e.value == std::floor(e.value));
    }
}

TEST_CASE("degree structure of the matrices", "[analyze]") {
  for (const auto& sig : {Signature(2, 1), Signature(3, 2)}) {
    const NumericRing<double> ring(0.9, 3.0);
    const auto set = materialize(ring, hp(sig), 3, Subspace::F0, Convention::Orthonormal);
    for (const auto& [g, mat] : set.matrices) {
      const long shift = g == e(1) ? -1 : g == f(1) ? 1 : 0;
      for (const auto& en : mat.entries) CHECK(set.basis[en.row].total() - set.basis[en.col].total() == shift);
      if (g.kind == GenKind::H)
        for (const auto& en : mat.entries) CHECK(en.row == en.col);
    }
  }
}

TEST_CASE("Dyson quotient matrices", "[analyze]") {
  const Signature sig(2, 1);
  const ExactRing ring(1L);
  const auto set = materialize(ring, dyson(sig), 1, Subspace::QuotientF0, Convention::ExactMonomial);
  const auto& f1 = set[f(1)];
  const auto vac = set.basis.position(FockState({0, 0})).value();
  const auto one = set.basis.position(FockState({1, 0})).value();
  CHECK(f1.at(one, vac).has_value());
  for (const auto& en : f1.entries) CHECK(en.col != one);  // (1,0) -> (2,0) projected away
  CHECK(f1.dropped == 2);
}

TEST_CASE("quotient by F1 is a representation", "[analyze]") {
  for (auto [n, m, p] : {std::tuple{2, 1, 1}, {2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 1}}) {
    const Signature sig(n, m);
    const ExactRing ring(p);
    const auto set = materialize(ring, dyson(sig), p, Subspace::QuotientF0, Convention::ExactMonomial);
    for (const auto& r : verify_on_matrices(ring, dyson(sig), set, build_relations(sig)))
      CHECK(r.status == Status::ExactPass);
  }
}

TEST_CASE("matrix-level check rejects a mutated realization", "[analyze]") {
  const Signature sig(3, 1);
  const ExactRing ring(2L);
  const auto gens = mutate(dyson(sig), Mutation::DropBracketRatio);
  const auto set = materialize(ring, gens, 2, Subspace::QuotientF0, Convention::ExactMonomial);
  std::size_t fails = 0;
  for (const auto& r : verify_on_matrices(ring, gens, set, build_relations(sig)))
    if (r.status == Status::Fail) ++fails;
  CHECK(fails >= 1);
}

TEST_CASE("invariant subspaces", "[analyze]") {
  const Signature sig(2, 1);
  const auto d = check_invariance(ExactRing(1L), dyson(sig), 1, 5, Convention::ExactMonomial);
  CHECK(d.f1_invariant);
  CHECK_FALSE(d.f0_invariant);
  REQUIRE(d.f0_witness.has_value());
  CHECK(d.f0_witness->gen == f(1));
  CHECK(d.f0_witness->state.total() == 1);
  CHECK(d.f0_witness->target.total() == 2);
  const auto hpr = check_invariance(NumericRing<std::complex<double>>(1.3, 1.0), hp(sig), 1, 5, Convention::Orthonormal);
  CHECK(hpr.f0_invariant);
  CHECK(hpr.f1_invariant);
}

TEST_CASE("unitarity of HP and its failure for Dyson", "[analyze]") {
  const Signature sig(2, 1);
  const NumericRing<double> ring(1.3, 2.0);
  const auto u = check_unitarity(ring, hp(sig), 2);
  CHECK(u.unitary);
  CHECK(u.transpose_residual.size() == 2);
  CHECK(u.max_residual <= 1e-10);
  const auto d = check_unitarity(ring, dyson(sig), 2);
  CHECK_FALSE(d.unitary);
  CHECK(d.h_real_diagonal);
  REQUIRE(d.witness.has_value());
  CHECK(std::abs(d.witness->e_transposed - d.witness->f_value) > 1e-10);
}

TEST_CASE("highest weight", "[analyze]") {
  const Signature sig(2, 1);
  const auto w = highest_weight(ExactRing(2L), dyson(sig), 2, Convention::ExactMonomial);
  CHECK(w.m == std::vector<long>{2, 0, 0});
  CHECK(w.vacuum_annihilated);
  const auto w0 = highest_weight(NumericRing<double>(1.3, 0.0), hp(Signature(3, 2)), 0, Convention::Orthonormal);
  CHECK(w0.m == std::vector<long>(5, 0));
}

TEST_CASE("essential typicality", "[analyze]") {
  const Signature sig(2, 1);
  const auto a = essentially_typical(sig, {2, 0, 0});
  CHECK(a.first == std::vector<long>{4, 1});
  CHECK(a.second == std::vector<long>{1});
  CHECK(a.intersection == std::vector<long>{1});
  CHECK_FALSE(a.essentially_typical);
  const auto b = essentially_typical(sig, {0, 0, 5});
  CHECK(b.first == std::vector<long>{2, 1});
  CHECK(b.second_raw == std::vector<long>{-4});
  CHECK(b.essentially_typical);
  CHECK_THROWS_AS(essentially_typical(sig, {1, 2}), InvalidArgument);
  // second set is the interval l_{n+1}..l_r
  const auto c = essentially_typical(Signature(2, 3), {0, 0, 0, 0, 0});
  CHECK(c.second == std::vector<long>{1, 2, 3});
}

TEST_CASE("inequivalence by dimension and spectrum", "[analyze]") {
  const Signature sig(2, 1);
  const auto rep = inequivalence(sig, 1, 2, 1.3);
  CHECK(rep.dim1 == 3);
  CHECK(rep.dim2 == 5);
  CHECK(rep.spectrum1 == std::vector<double>{1, 0, 0});
  CHECK(rep.spectrum2 == std::vector<double>{2, 1, 1, 0, 0});
  CHECK(rep.inequivalent);
  CHECK_THROWS_AS(inequivalence(sig, 2, 2, 1.3), InvalidArgument);
}

TEST_CASE("cyclicity", "[analyze]") {
  const auto a = cyclicity(NumericRing<double>(1.3, 1.0), hp(Signature(2, 1)), 1);
  CHECK(a.rank_from_vacuum == 3);
  const auto b = cyclicity(NumericRing<double>(0.9, 2.0), hp(Signature(2, 2)), 2);
  CHECK(b.cyclic_from_every_basis_vector);
  CHECK(b.rank_from_vacuum == b.dim);
  const auto c = cyclicity(NumericRing<double>(1.3, 0.0), hp(Signature(3, 1)), 0);
  CHECK(c.dim == 1);
  CHECK(c.rank_from_vacuum == 1);
}

TEST_CASE("closure rank detects a reducible action", "[analyze]") {
  // diagonal generators leave every basis vector's span invariant
  const std::vector<std::vector<std::vector<double>>> gens = {{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}};
  CHECK(detail::closure_rank(gens, {1, 0, 0}, 1e-8) == 1);
  CHECK(detail::closure_rank(gens, {1, 1, 1}, 1e-8) == 3);
}

TEST_CASE("deformed oscillators", "[analyze]") {
  for (const auto& sig : {Signature(2, 1), Signature(3, 2)})
    for (double q : {0.9, 1.3}) {
      const auto rep = check_deformed_oscillators(NumericRing<std::complex<double>>(q, 2.0), sig, 5);
      CHECK(rep.all_passed());
      CHECK(rep.hp_deformed_agreement <= 1e-12);
      for (const auto& v : rep.fermionic_variant) CHECK(v == "q^{+N}");
      CHECK(rep.fermionic_variant.size() == static_cast<std::size_t>(sig.m));
      CHECK(rep.cross_mode_q_bracket > 1e-3);  // the q-bracket for i != j does not vanish
    }
}
