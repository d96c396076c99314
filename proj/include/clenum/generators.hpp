#pragma once

// Instance generators: seeded random families, hypergraph/hitting-set
// instances, and the monotone-DNF-to-union-closure conversion.

#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "family.hpp"
#include "vector.hpp"

namespace clenum {

// Draws m vectors i.i.d.: each coordinate is 0 with probability 1 - density,
// otherwise uniform over {1, ..., d-1}.  Deterministic under the seed;
// duplicates are possible and preserved (families dedup on insertion).
inline std::vector<Vector> random_vectors(int n, int m, int d, double density,
                                          std::uint64_t seed) {
  if (n < 1) throw SpecError("vector length must be at least 1");
  if (m < 0) throw SpecError("member count must be nonnegative");
  if (d < 2 || d > 10) throw SpecError("domain size must be between 2 and 10");
  std::mt19937_64 rng(seed);
  // Fixed-point threshold keeps the draw identical across standard libraries.
  const bool always = density >= 1.0;
  const std::uint64_t threshold =
      always ? 0 : static_cast<std::uint64_t>(density < 0.0 ? 0.0 : density * 18446744073709551616.0);
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    Vector v(n, d);
    for (int i = 0; i < n; ++i) {
      if (always || rng() < threshold) {
        v.set(i, d == 2 ? 1 : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d - 1)));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

// --- hypergraphs and hitting sets ---------------------------------------------

struct Hypergraph {
  int vertices = 0;
  std::vector<std::vector<int>> edges;  // 0-based vertex ids, each edge nonempty
};

// Parses "1,2;2,3" (1-based vertices, ';' between edges) into a hypergraph.
inline Hypergraph parse_edge_list(int vertices, const std::string& text) {
  if (vertices < 1) throw ParseError("hypergraph needs at least one vertex");
  Hypergraph h;
  h.vertices = vertices;
  std::stringstream edges_in(text);
  for (std::string edge_text; std::getline(edges_in, edge_text, ';');) {
    std::vector<int> edge;
    std::stringstream vertex_in(edge_text);
    for (std::string tok; std::getline(vertex_in, tok, ',');) {
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad vertex id '" + tok + "'");
      }
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size()) throw ParseError("bad vertex id '" + tok + "'");
      if (v < 1 || v > vertices) throw ParseError("vertex id out of range: '" + tok + "'");
      edge.push_back(v - 1);
    }
    if (edge.empty()) throw ParseError("empty hyperedge");
    h.edges.push_back(std::move(edge));
  }
  if (h.edges.empty()) throw ParseError("hypergraph needs at least one edge");
  return h;
}

// The family of complemented characteristic vectors: member i has a 0 exactly
// at the vertices of edge i.  The all-ones vector lies in the width-(k+1)
// threshold closure of this family iff the hypergraph has no transversal of
// size k.
inline Family hitting_set_instance(const Hypergraph& h) {
  Family f = Family::empty(2);
  for (const std::vector<int>& edge : h.edges) {
    Vector v(h.vertices, 2);
    for (int i = 0; i < h.vertices; ++i) v.set(i, 1);
    for (int u : edge) v.set(u, 0);
    f.insert(v);
  }
  return f;
}

// Exhaustive search: does some vertex set of size <= k meet every edge?
inline bool has_transversal(const Hypergraph& h, int k) {
  if (h.vertices > 30) throw SpecError("exhaustive transversal search capped at 30 vertices");
  const std::uint32_t space = std::uint32_t{1} << h.vertices;
  for (std::uint32_t mask = 0; mask < space; ++mask) {
    if (std::popcount(mask) > k) continue;
    bool hits_all = true;
    for (const std::vector<int>& edge : h.edges) {
      bool hit = false;
      for (int u : edge)
        if (mask & (std::uint32_t{1} << u)) {
          hit = true;
          break;
        }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) return true;
  }
  return false;
}

inline Hypergraph random_hypergraph(int max_vertices, std::mt19937_64& rng) {
  Hypergraph h;
  h.vertices = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 1));
  const int edges = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < edges; ++t) {
    std::vector<int> edge;
    for (int u = 0; u < h.vertices; ++u)
      if (rng() & 1) edge.push_back(u);
    if (edge.empty()) edge.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(h.vertices)));
    h.edges.push_back(std::move(edge));
  }
  return h;
}

// --- monotone DNF --------------------------------------------------------------

struct DnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;  // 0-based variable ids, each nonempty
};

// One clause per line as whitespace-separated 1-based variable indices; an
// optional leading "vars N" line widens the variable range beyond the largest
// index used.  '#' comments and blank lines are ignored.  Negative literals
// make the formula non-monotone and are rejected.
inline DnfFormula parse_dnf(std::istream& in) {
  DnfFormula f;
  int declared = 0;
  bool first = true;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream toks(line);
    std::string head;
    if (!(toks >> head)) continue;
    if (first && head == "vars") {
      first = false;
      if (!(toks >> declared) || declared < 1) throw ParseError("bad vars header");
      std::string extra;
      if (toks >> extra) throw ParseError("bad vars header");
      continue;
    }
    first = false;
    std::vector<int> clause;
    std::string tok = head;
    do {
      std::size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad variable index '" + tok + "'");
      }
      if (pos != tok.size()) throw ParseError("bad variable index '" + tok + "'");
      if (v < 0) throw ParseError("negative literal '" + tok + "': only monotone formulas are supported");
      if (v == 0) throw ParseError("variable indices are 1-based");
      clause.push_back(static_cast<int>(v) - 1);
      if (static_cast<int>(v) > f.variables) f.variables = static_cast<int>(v);
    } while (toks >> tok);
    f.clauses.push_back(std::move(clause));
  }
  if (f.clauses.empty()) throw ParseError("formula has no clauses");
  if (declared > 0) {
    if (declared < f.variables) throw ParseError("vars header smaller than largest index used");
    f.variables = declared;
  }
  return f;
}

inline DnfFormula parse_dnf(const std::string& text) {
  std::istringstream in(text);
  return parse_dnf(in);
}

// For each clause C_i emit its characteristic vector e_i plus e_i with one
// extra variable, for every variable outside the clause.  Unions of the
// emitted vectors are exactly the satisfying assignments of the formula, one
// union per model.
inline Family dnf_to_union_instance(const DnfFormula& f) {
  Family out = Family::empty(2);
  for (const std::vector<int>& clause : f.clauses) {
    Vector base(f.variables, 2);
    for (int v : clause) base.set(v, 1);
    out.insert(base);
    for (int j = 0; j < f.variables; ++j) {
      if (base.get(j) == 1) continue;
      Vector widened = base;
      widened.set(j, 1);
      out.insert(widened);
    }
  }
  return out;
}

// Truth-table model count, for cross-checking the parsimonious conversion.
inline std::uint64_t count_dnf_models(const DnfFormula& f) {
  if (f.variables > 24) throw SpecError("truth-table model count capped at 24 variables");
  const std::uint32_t space = std::uint32_t{1} << f.variables;
  std::uint64_t models = 0;
  for (std::uint32_t mask = 0; mask < space; ++mask) {
    for (const std::vector<int>& clause : f.clauses) {
      bool sat = true;
      for (int v : clause)
        if (!(mask & (std::uint32_t{1} << v))) {
          sat = false;
          break;
        }
      if (sat) {
        ++models;
        break;
      }
    }
  }
  return models;
}

}  // namespace clenum
