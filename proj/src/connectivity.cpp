#include "gcx/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace gcx {
namespace {

class Dinic {
 public:
  explicit Dinic(int n) : graph_(n), level_(n), iter_(n) {}

  void add_edge(int u, int v, int cap) {
    graph_[u].push_back({v, cap, static_cast<int>(graph_[v].size())});
    graph_[v].push_back({u, 0, static_cast<int>(graph_[u].size()) - 1});
  }

  // Stops early once `limit` units have been pushed.
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      int f;
      while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
    }
    return flow;
  }

 private:
  struct Edge {
    int to, cap, rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Edge& e : graph_[v]) {
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Edge& e = graph_[v][i];
      if (e.cap <= 0 || level_[v] >= level_[e.to]) continue;
      int d = dfs(e.to, t, std::min(f, e.cap));
      if (d > 0) {
        e.cap -= d;
        graph_[e.to][e.rev].cap += d;
        return d;
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Minimum s-t vertex cut size for non-adjacent s, t: node splitting with
// in(v)=2v, out(v)=2v+1, internal arcs of capacity 1 except at s and t.
int vertex_flow(const Graph& g, int s, int t, int limit) {
  const int big = g.n + 1;
  Dinic net(2 * g.n);
  for (int v = 0; v < g.n; ++v) {
    net.add_edge(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  }
  for (const auto& [u, v] : g.edges) {
    net.add_edge(2 * u + 1, 2 * v, big);
    net.add_edge(2 * v + 1, 2 * u, big);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

int min_degree_vertex(const Graph& g) {
  int s = 0;
  for (int v = 1; v < g.n; ++v) {
    if (g.degree(v) < g.degree(s)) s = v;
  }
  return s;
}

// Applies `visit` to each pair of the Even-Tarjan reduction: any minimum cut
// either avoids s (separating s from a non-neighbor) or contains s, in which
// case it separates two non-adjacent neighbors of s.
template <typename F>
void for_each_reduced_pair(const Graph& g, int s, F visit) {
  for (int t = 0; t < g.n; ++t) {
    if (t == s || g.adjacent(s, t)) continue;
    if (!visit(s, t)) return;
  }
  const auto& nb = g.adj[s];
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (g.adjacent(nb[i], nb[j])) continue;
      if (!visit(nb[i], nb[j])) return;
    }
  }
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return g.n > k;
  if (g.n <= k) return false;
  if (g.complete()) return true;
  const int s = min_degree_vertex(g);
  if (g.degree(s) < k) return false;
  bool ok = true;
  for_each_reduced_pair(g, s, [&](int a, int b) {
    if (vertex_flow(g, a, b, k) < k) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

int vertex_connectivity(const Graph& g) {
  if (g.n <= 1) return 0;
  if (g.complete()) return g.n - 1;
  const int s = min_degree_vertex(g);
  int best = g.degree(s);
  for_each_reduced_pair(g, s, [&](int a, int b) {
    best = std::min(best, vertex_flow(g, a, b, best));
    return best > 0;
  });
  return best;
}

}  // namespace gcx
