#include "gcx/brute.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gcx::brute {
namespace {

bool assign_rec(const Graph& g, int num_colors, int v, std::vector<int>& color) {
  if (v == g.n) return true;
  for (int c = 0; c < num_colors; ++c) {
    bool clash = false;
    for (int u : g.adj[v]) {
      if (u < v && color[u] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v] = c;
    if (assign_rec(g, num_colors, v + 1, color)) return true;
  }
  color[v] = -1;
  return false;
}

bool disconnects(const Graph& g, const std::vector<char>& removed) {
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < g.n; ++v) {
    if (!removed[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining <= 1) return false;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.adj[v]) {
      if (!removed[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached < remaining;
}

bool any_cut_of_size(const Graph& g, int size, int next, std::vector<char>& removed) {
  if (size == 0) return disconnects(g, removed);
  for (int v = next; v < g.n; ++v) {
    removed[v] = 1;
    if (any_cut_of_size(g, size - 1, v + 1, removed)) {
      removed[v] = 0;
      return true;
    }
    removed[v] = 0;
  }
  return false;
}

}  // namespace

bool colorable(const Graph& g, int num_colors) {
  if (g.n == 0) return true;
  if (num_colors <= 0) return false;
  std::vector<int> color(g.n, -1);
  return assign_rec(g, num_colors, 0, color);
}

int chromatic_number(const Graph& g) {
  if (g.n < 1) throw std::runtime_error("graph must be nonempty");
  for (int c = 1; c <= g.n; ++c) {
    if (colorable(g, c)) return c;
  }
  throw std::logic_error("exhaustive coloring search failed");
}

int vertex_connectivity(const Graph& g) {
  if (g.n <= 1) return 0;
  std::vector<char> removed(g.n, 0);
  for (int size = 0; size <= g.n - 2; ++size) {
    if (any_cut_of_size(g, size, 0, removed)) return size;
  }
  return g.n - 1;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return g.n > k;
  return g.n > k && vertex_connectivity(g) >= k;
}

bool connected(const Graph& g) {
  std::vector<char> removed(g.n, 0);
  return g.n <= 1 || !disconnects(g, removed);
}

int hall_max_deficiency(const std::vector<std::vector<int>>& lists) {
  const int r = static_cast<int>(lists.size());
  if (r > 24) throw std::runtime_error("too many lists for exhaustive deficiency");
  int worst = 0;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::set<int> uni;
    int size = 0;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        ++size;
        uni.insert(lists[i].begin(), lists[i].end());
      }
    }
    worst = std::max(worst, size - static_cast<int>(uni.size()));
  }
  return worst;
}

}  // namespace gcx::brute
