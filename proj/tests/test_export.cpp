#include <catch_amalgamated.hpp>

#include <sstream>

#include "uqgl/export.hpp"

using namespace uqgl;

TEST_CASE("exact export round trip", "[export]") {
  const Signature sig(2, 2);
  const ExactRing ring;  // formal p: entries carry P
  const auto set = materialize(ring, dyson(sig), 2, Subspace::F0, Convention::ExactMonomial);
  CHECK(reimport_roundtrip(ring, set));
  const MatrixFile f = to_matrix_file(ring, set);
  CHECK(f.p == "formal");
  CHECK(f.q == "formal");
  CHECK(f.basis.size() == set.basis.size());
  bool has_p = false;
  for (const auto& [name, g] : f.generators)
    for (const auto& [r, c, v] : g.entries)
      if (v.find("P^") != std::string::npos) has_p = true;
  CHECK(has_p);
}

TEST_CASE("numeric export round trip and coefficient text", "[export]") {
  const Signature sig(3, 1);
  const NumericRing<double> ring(1.3, 2.0);
  const auto set = materialize(ring, hp(sig), 2, Subspace::F0, Convention::Orthonormal);
  CHECK(reimport_roundtrip(ring, set));
  const MatrixFile f = to_matrix_file(ring, set);
  for (const auto& [name, g] : f.generators)
    for (const auto& [r, c, v] : g.entries) {
      const double d = std::stod(v);
      CHECK(format_double(d) == v);
    }
  std::ostringstream a, b;
  write_matrices(a, f);
  write_matrices(b, to_matrix_file(ring, materialize(ring, hp(sig), 2, Subspace::F0, Convention::Orthonormal)));
  CHECK(a.str() == b.str());
}

TEST_CASE("F1 slice export", "[export]") {
  const Signature sig(2, 1);
  const NumericRing<std::complex<double>> ring(0.9, 1.0);
  const auto set = materialize(ring, hp(sig), 1, Subspace::F1Slice, Convention::Orthonormal, 4);
  for (const auto& s : set.basis.states()) CHECK(s.total() > 1);
  CHECK(reimport_roundtrip(ring, set));
  CHECK(to_matrix_file(ring, set).cap == 4);
}

TEST_CASE("malformed imports are rejected", "[export]") {
  std::istringstream junk("{ not json");
  CHECK_THROWS_AS(read_matrices(junk), InvalidArgument);
  std::istringstream wrong(R"({"format":"other","version":1})");
  CHECK_THROWS_AS(read_matrices(wrong), InvalidArgument);
  std::istringstream range(R"({"format":"uqgl-matrices","version":1,"signature":{"n":2,"m":1},
    "realization":"hp","mode":"numeric","p":"1","q":"1.3","convention":"orthonormal","subspace":"F0","cap":1,
    "basis":[[0,0]],"generators":{"e1":{"dropped":0,"entries":[[0,3,"1"]]}}})");
  CHECK_THROWS_AS(read_matrices(range), InvalidArgument);
}
