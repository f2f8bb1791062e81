#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

struct ExtractionCertificate {
  std::string graph_hash;
  int k = 0;
  int m = 0;
  int chi_g = 0;
  int chi_h = 0;
  bool connectivity_ok = false;
  std::vector<int> subgraph_vertices;  // original ids, ascending
  std::string method;                  // "critical-extraction" | "exhaustive-fallback"
};

// Extracts a certified (k+1)-connected induced subgraph with chromatic number
// at least m from a graph with chi(g) >= max(m+2k-2, 3k+1). The primary path
// takes the chromatically critical subgraph at palette size chi(g)-1 and then
// checks connectivity and chi directly; when either check fails the pipeline
// falls back to exhaustive search over induced subgraphs in decreasing size.
// The certificate records which path ran and is meant to be re-verified
// independently (see verify_certificate).
ExtractionCertificate extract_subgraph(const Graph& g, int k, int m);

// Independent statement-level oracle, n <= 12: enumerate induced subgraphs by
// decreasing vertex count (lexicographic within a size) and return the first
// that is (k+1)-connected with chi >= m, using only exhaustive primitives.
std::optional<std::vector<int>> theorem_oracle(const Graph& g, int k, int m);

struct CertifiedSubgraph {
  std::vector<int> vertices;
  int chi = 0;
};

// The fallback enumeration behind extract_subgraph, driven by the solvers:
// first induced subgraph in decreasing-size lexicographic order that is
// (k+1)-connected with chi >= m.
std::optional<CertifiedSubgraph> exhaustive_certified_subgraph(const Graph& g, int k, int m);

// Recomputes everything in the certificate from the input graph with core
// primitives only; trusts no pipeline intermediate.
bool verify_certificate(const Graph& g, const ExtractionCertificate& cert);

// Degree-refined adjacency hash (three rounds of neighborhood label folding,
// combined order-independently). Stable across runs; used for report
// bookkeeping only, collisions acceptable.
std::string graph_hash(const Graph& g);

}  // namespace gcx
