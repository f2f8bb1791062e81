#include "gcx/chromatic.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gcx {
namespace {

// DSATUR decision search with a fixed color budget. Colors are 0..cap-1 and
// the usual symmetry break applies: a vertex may open at most one fresh color
// beyond those already in use.
class DecisionSearch {
 public:
  DecisionSearch(const Graph& g, int cap) : g_(g), cap_(cap) {
    color_.assign(g.n, -1);
    count_.assign(static_cast<std::size_t>(g.n) * std::max(cap, 1), 0);
    sat_.assign(g.n, 0);
  }

  bool run(const std::vector<int>& clique, std::vector<int>* out) {
    if (static_cast<int>(clique.size()) > cap_) return false;
    int used = 0;
    for (int v : clique) assign(v, used++);
    if (!extend(static_cast<int>(clique.size()), used)) return false;
    if (out) *out = color_;
    return true;
  }

 private:
  int& count(int v, int c) { return count_[static_cast<std::size_t>(v) * cap_ + c]; }

  void assign(int v, int c) {
    color_[v] = c;
    for (int u : g_.adj[v]) {
      if (color_[u] < 0 && count(u, c)++ == 0) ++sat_[u];
    }
  }

  void unassign(int v, int c) {
    color_[v] = -1;
    for (int u : g_.adj[v]) {
      if (color_[u] < 0 && --count(u, c) == 0) --sat_[u];
    }
  }

  bool extend(int colored, int used) {
    if (colored == g_.n) return true;
    int pick = -1;
    for (int v = 0; v < g_.n; ++v) {
      if (color_[v] >= 0) continue;
      if (pick < 0 || sat_[v] > sat_[pick]) pick = v;
    }
    const int top = std::min(cap_ - 1, used);  // colors 0..used reuse or open one
    for (int c = 0; c <= top; ++c) {
      if (count(pick, c) > 0) continue;
      assign(pick, c);
      if (extend(colored + 1, std::max(used, c + 1))) return true;
      unassign(pick, c);
    }
    return false;
  }

  const Graph& g_;
  int cap_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> sat_;
};

}  // namespace

bool colorable_with(const Graph& g, int num_colors) {
  if (num_colors < 0) throw std::runtime_error("color budget must be nonnegative");
  if (g.n == 0) return true;
  if (num_colors == 0) return false;
  DecisionSearch search(g, num_colors);
  return search.run(greedy_clique(g), nullptr);
}

ChromaticResult chromatic_number(const Graph& g) {
  if (g.n < 1) throw std::runtime_error("graph must be nonempty");
  const std::vector<int> clique = greedy_clique(g);
  for (int c = std::max<int>(1, clique.size()); c <= g.n; ++c) {
    std::vector<int> colors;
    DecisionSearch search(g, c);
    if (!search.run(clique, &colors)) continue;
    ChromaticResult result;
    result.chi = c;
    result.witness.color = std::move(colors);
    result.witness.palette.resize(c);
    for (int i = 0; i < c; ++i) result.witness.palette[i] = i;
    return result;
  }
  throw std::logic_error("chromatic search exhausted without a coloring");
}

}  // namespace gcx
