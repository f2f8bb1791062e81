#pragma once

#include <map>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/rng.hpp"
#include "gcx/templates.hpp"

namespace gcx {

// A partially colored set U plus a partition of the remaining uncolored
// vertices into stable pieces, each of forbidden weight < k. The number of
// colors on U is always recomputed from u_coloring, never trusted.
struct LightDecomposition {
  std::map<int, int> u_coloring;          // U -> color
  std::vector<std::vector<int>> pieces;   // stable sets partitioning V \ (S u U)
  int k = 1;
};

struct ExactnessCheck {
  int piece_count = 0;   // R
  int colors_on_u = 0;   // q
  int budget = 0;        // 2k - |S| + 1
  bool exact = false;    // R + q <= budget
};

// Verifies every decomposition invariant verbatim and reports exactness.
// Violations throw, naming the failing clause: "not a partition",
// "piece not stable", "lightness violated", "U-coloring invalid".
ExactnessCheck validate_decomposition(const Graph& g, const Template& t,
                                      const LightDecomposition& d);

struct RecolorCertificate {
  std::vector<int> free_colors;                // C' = C minus colors on S and U
  std::vector<std::vector<int>> piece_lists;   // L(Q_j) = C' minus forbidden colors of Q_j
  std::vector<int> piece_colors;               // chosen distinct representatives
  int list_floor = 0;                          // 2k - |S| - q + 1
  ExactnessCheck exactness;
};

struct RecolorResult {
  Coloring coloring;
  RecolorCertificate certificate;
};

// Completes a good template to a full respecting coloring along an exact
// decomposition: each piece gets one color from its list via a system of
// distinct representatives. Requires |C| >= 3k; under those hypotheses every
// list has at least 2k - |S| - q + 1 >= R colors, so the SDR step cannot
// fail — reaching the failure branch is reported as such.
RecolorResult recolor(const Graph& g, const Template& t, const LightDecomposition& d);

struct RecolorInstance {
  Graph graph;
  Template tmpl;
  LightDecomposition decomposition;
};

// Rejection sampler for valid exact instances: random graph, random precolored
// set with a proper coloring, forbidden sets of size <= k-1, a small colored
// U, stable pieces grown greedily until lightness binds. Resamples until the
// exactness budget holds.
RecolorInstance sample_recolor_instance(int k, int palette_size, Rng& rng);

}  // namespace gcx
