#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

// A coloring template (S, c, F) over a palette C: a precolored vertex set S
// with a proper coloring c of G[S], and a forbidden color set F(v) for every
// uncolored vertex. Vertices absent from `forbidden` have F(v) = {}.
struct Template {
  std::vector<int> palette;                   // sorted, unique
  std::map<int, int> precolored;              // S -> color
  std::map<int, std::vector<int>> forbidden;  // v -> sorted colors
};

struct TemplateCost {
  int k = 0;
  long long cost = 0;  // k|S| + sum of |F(v)| over uncolored vertices
};

Template empty_template(std::vector<int> palette);

// Structural checks plus properness of the precoloring on G[S]. Every error
// message starts with "invalid template".
void validate_template(const Graph& g, const Template& t);

TemplateCost cost_k(const Template& t, int k);

// Every uncolored vertex has |F(v)| <= k-1.
bool is_good(const Template& t, int k);

// Sum of |F(v)| over a vertex set.
long long forbidden_weight(const Template& t, const std::vector<int>& verts);

// True iff col is a proper total palette coloring agreeing with the
// precoloring and avoiding every forbidden set.
bool respects_template(const Graph& g, const Template& t, const Coloring& col);

// Complete backtracking search for a respecting coloring: list domains
// C \ F(v), forward checking, smallest-domain variable order with ties by
// ascending id, colors tried in ascending palette order. Returns an
// internally re-validated coloring, or nullopt when none exists.
std::optional<Coloring> find_respecting_coloring(const Graph& g, const Template& t);

// Fixed-template inextensibility: cost_k(t) < 2k^2, max |F(v)| <= k, and no
// respecting coloring exists.
bool is_inextensible_for(const Graph& g, const Template& t, int k);

struct CriticalSubgraph {
  Graph graph;
  std::vector<int> vertices;  // original ids, ascending
};

// Vertex-minimal induced subgraph that is still palette-inextensible with the
// empty template, i.e. chromatically vertex-critical at level |palette|+1.
// Requires |palette| = chi(g) - 1; deletion scan is one ascending pass, which
// suffices because deletability is monotone under taking induced subgraphs.
CriticalSubgraph minimal_inextensible_subgraph(const Graph& g, const std::vector<int>& palette,
                                               int k);

}  // namespace gcx
