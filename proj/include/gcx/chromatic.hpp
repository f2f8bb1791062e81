#pragma once

#include "gcx/graph.hpp"

namespace gcx {

struct ChromaticResult {
  int chi = 0;
  Coloring witness;  // proper, uses colors 0..chi-1
};

// Exact chromatic number. DSATUR-ordered backtracking with a greedy clique
// seed, run as a sequence of k-colorability decisions from the clique bound
// upward; the first satisfiable level is certified optimal because every
// level below it was exhausted. Deterministic: saturation ties and color
// order break by ascending id.
ChromaticResult chromatic_number(const Graph& g);

// Complete decision procedure for "g has a proper coloring with num_colors
// colors". Shares the search engine above.
bool colorable_with(const Graph& g, int num_colors);

}  // namespace gcx
