#pragma once

// JSON matrix export and re-import.
//
// {
//   "format": "uqgl-matrices", "version": 1,
//   "signature": {"n": 2, "m": 1}, "realization": "hp", "mode": "numeric",
//   "p": "2", "q": "1.3", "convention": "orthonormal", "subspace": "F0", "cap": 2,
//   "basis": [[0,0],[1,0],...],
//   "generators": {"e1": {"dropped": 0, "entries": [[row, col, "coef"], ...]}, ...}
// }
//
// Coefficients are canonical strings: exact coefficients as "(num)/(den)"
// Laurent strings, numeric ones as shortest round-trip decimals.

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "uqgl/analyze.hpp"

namespace uqgl {

/// Format-level view of an exported matrix set.
struct MatrixFile {
  int n = 0, m = 0;
  std::string realization, mode, p, q, convention, subspace;
  long cap = 0;
  std::vector<std::vector<int>> basis;
  struct Gen {
    std::size_t dropped = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> entries;
    friend bool operator==(const Gen&, const Gen&) = default;
  };
  std::map<std::string, Gen> generators;

  friend bool operator==(const MatrixFile&, const MatrixFile&) = default;
};

template <CoefficientRing Ring>
MatrixFile to_matrix_file(const Ring& ring, const MatrixSet<typename Ring::value_type>& set) {
  MatrixFile f;
  f.n = set.sig.n;
  f.m = set.sig.m;
  f.realization = to_string(set.kind);
  f.mode = Ring::mode_label;
  f.p = set.p_label;
  f.q = set.q_label;
  f.convention = to_string(set.convention);
  f.subspace = to_string(set.subspace);
  f.cap = set.subspace == Subspace::F1Slice ? set.cap : set.p;
  for (const auto& s : set.basis.states()) f.basis.push_back(s.occupations());
  for (const auto& [g, mat] : set.matrices) {
    MatrixFile::Gen out;
    out.dropped = mat.dropped;
    for (const auto& e : mat.entries) out.entries.emplace_back(e.row, e.col, ring.format(e.value));
    f.generators.emplace(g.str(), std::move(out));
  }
  return f;
}

inline nlohmann::ordered_json to_json(const MatrixFile& f) {
  nlohmann::ordered_json j;
  j["format"] = "uqgl-matrices";
  j["version"] = 1;
  j["signature"] = {{"n", f.n}, {"m", f.m}};
  j["realization"] = f.realization;
  j["mode"] = f.mode;
  j["p"] = f.p;
  j["q"] = f.q;
  j["convention"] = f.convention;
  j["subspace"] = f.subspace;
  j["cap"] = f.cap;
  j["basis"] = f.basis;
  auto& gens = j["generators"] = nlohmann::ordered_json::object();
  for (const auto& [name, g] : f.generators) {
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [r, c, v] : g.entries) entries.push_back({r, c, v});
    gens[name] = {{"dropped", g.dropped}, {"entries", std::move(entries)}};
  }
  return j;
}

inline MatrixFile from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "uqgl-matrices") throw InvalidArgument("not a uqgl matrix export");
  if (j.value("version", 0) != 1) throw InvalidArgument("unsupported matrix export version");
  MatrixFile f;
  f.n = j.at("signature").at("n").get<int>();
  f.m = j.at("signature").at("m").get<int>();
  f.realization = j.at("realization").get<std::string>();
  f.mode = j.at("mode").get<std::string>();
  f.p = j.at("p").get<std::string>();
  f.q = j.at("q").get<std::string>();
  f.convention = j.at("convention").get<std::string>();
  f.subspace = j.at("subspace").get<std::string>();
  f.cap = j.at("cap").get<long>();
  f.basis = j.at("basis").get<std::vector<std::vector<int>>>();
  for (const auto& [name, g] : j.at("generators").items()) {
    MatrixFile::Gen out;
    out.dropped = g.at("dropped").get<std::size_t>();
    for (const auto& e : g.at("entries")) {
      const auto row = e.at(0).get<std::size_t>(), col = e.at(1).get<std::size_t>();
      if (row >= f.basis.size() || col >= f.basis.size())
        throw InvalidArgument("matrix entry out of range in generator " + name);
      out.entries.emplace_back(row, col, e.at(2).get<std::string>());
    }
    f.generators.emplace(name, std::move(out));
  }
  return f;
}

/// One top-level key per line, one generator per line.
inline void write_matrices(std::ostream& os, const MatrixFile& f) {
  const auto j = to_json(f);
  os << "{\n";
  bool first = true;
  for (const auto& [key, val] : j.items()) {
    os << (first ? "" : ",\n") << ' ' << nlohmann::json(key).dump() << ": ";
    first = false;
    if (key != "generators") {
      os << val.dump();
      continue;
    }
    os << "{";
    bool g1 = true;
    for (const auto& [name, g] : val.items()) {
      os << (g1 ? "\n" : ",\n") << "  " << nlohmann::json(name).dump() << ": " << g.dump();
      g1 = false;
    }
    os << "\n }";
  }
  os << "\n}\n";
}

inline MatrixFile read_matrices(std::istream& is) {
  try {
    return from_json(nlohmann::json::parse(is));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed matrix export: ") + e.what());
  }
}

/// Export, parse back, and compare with the in-memory matrices.
template <CoefficientRing Ring>
bool reimport_roundtrip(const Ring& ring, const MatrixSet<typename Ring::value_type>& set) {
  const MatrixFile direct = to_matrix_file(ring, set);
  std::stringstream buf;
  write_matrices(buf, direct);
  return read_matrices(buf) == direct;
}

}  // namespace uqgl
