#include "gcx/templates.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcx/chromatic.hpp"

namespace gcx {
namespace {

int palette_index(const std::vector<int>& palette, int color) {
  auto it = std::lower_bound(palette.begin(), palette.end(), color);
  if (it == palette.end() || *it != color) return -1;
  return static_cast<int>(it - palette.begin());
}

// Backtracking engine over palette indices with forward checking.
class RespectSearch {
 public:
  RespectSearch(const Graph& g, const Template& t)
      : g_(g), t_(t), p_(static_cast<int>(t.palette.size())) {
    assign_.assign(g.n, -1);
    allowed_.assign(static_cast<std::size_t>(g.n) * std::max(p_, 1), 1);
    domain_.assign(g.n, p_);
    fixed_.assign(g.n, 0);
  }

  std::optional<std::vector<int>> run() {
    int colored = 0;
    for (const auto& [v, c] : t_.precolored) {
      assign_[v] = palette_index(t_.palette, c);
      fixed_[v] = 1;
      ++colored;
    }
    for (const auto& [v, colors] : t_.forbidden) {
      for (int c : colors) strike(v, palette_index(t_.palette, c));
    }
    for (const auto& [v, c] : t_.precolored) {
      const int ci = palette_index(t_.palette, c);
      for (int u : g_.adj[v]) {
        if (!fixed_[u]) strike(u, ci);
      }
    }
    if (!extend(colored)) return std::nullopt;
    return assign_;
  }

 private:
  void strike(int v, int c) {
    char& a = allowed_[static_cast<std::size_t>(v) * p_ + c];
    if (a) {
      a = 0;
      --domain_[v];
      trail_.emplace_back(v, c);
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [v, c] = trail_.back();
      trail_.pop_back();
      allowed_[static_cast<std::size_t>(v) * p_ + c] = 1;
      ++domain_[v];
    }
  }

  bool extend(int colored) {
    if (colored == g_.n) return true;
    int pick = -1;
    for (int v = 0; v < g_.n; ++v) {
      if (assign_[v] >= 0) continue;
      if (pick < 0 || domain_[v] < domain_[pick]) pick = v;
    }
    for (int c = 0; c < p_; ++c) {
      if (!allowed_[static_cast<std::size_t>(pick) * p_ + c]) continue;
      const std::size_t mark = trail_.size();
      assign_[pick] = c;
      bool wiped = false;
      for (int u : g_.adj[pick]) {
        if (assign_[u] >= 0) continue;
        strike(u, c);
        if (domain_[u] == 0) wiped = true;
      }
      if (!wiped && extend(colored + 1)) return true;
      assign_[pick] = -1;
      undo_to(mark);
    }
    return false;
  }

  const Graph& g_;
  const Template& t_;
  int p_;
  std::vector<int> assign_;
  std::vector<char> allowed_;
  std::vector<int> domain_;
  std::vector<char> fixed_;
  std::vector<std::pair<int, int>> trail_;
};

}  // namespace

Template empty_template(std::vector<int> palette) {
  Template t;
  t.palette = sorted_unique(std::move(palette));
  return t;
}

void validate_template(const Graph& g, const Template& t) {
  if (!std::is_sorted(t.palette.begin(), t.palette.end()) ||
      std::adjacent_find(t.palette.begin(), t.palette.end()) != t.palette.end()) {
    throw std::runtime_error("invalid template: palette not sorted unique");
  }
  for (const auto& [v, c] : t.precolored) {
    if (v < 0 || v >= g.n) throw std::runtime_error("invalid template: vertex out of range");
    if (palette_index(t.palette, c) < 0) {
      throw std::runtime_error("invalid template: precolor outside palette");
    }
  }
  for (const auto& [v, colors] : t.forbidden) {
    if (v < 0 || v >= g.n) throw std::runtime_error("invalid template: vertex out of range");
    if (t.precolored.count(v)) {
      throw std::runtime_error("invalid template: forbidden set on precolored vertex");
    }
    if (!std::is_sorted(colors.begin(), colors.end()) ||
        std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
      throw std::runtime_error("invalid template: forbidden set not sorted unique");
    }
    for (int c : colors) {
      if (palette_index(t.palette, c) < 0) {
        throw std::runtime_error("invalid template: forbidden color outside palette");
      }
    }
  }
  for (const auto& [u, v] : g.edges) {
    auto cu = t.precolored.find(u);
    auto cv = t.precolored.find(v);
    if (cu != t.precolored.end() && cv != t.precolored.end() && cu->second == cv->second) {
      throw std::runtime_error("invalid template: precoloring not proper");
    }
  }
}

TemplateCost cost_k(const Template& t, int k) {
  if (k < 1) throw std::runtime_error("k must be positive");
  TemplateCost result;
  result.k = k;
  result.cost = static_cast<long long>(k) * static_cast<long long>(t.precolored.size());
  for (const auto& [v, colors] : t.forbidden) result.cost += static_cast<long long>(colors.size());
  return result;
}

bool is_good(const Template& t, int k) {
  for (const auto& [v, colors] : t.forbidden) {
    if (static_cast<int>(colors.size()) > k - 1) return false;
  }
  return true;
}

long long forbidden_weight(const Template& t, const std::vector<int>& verts) {
  long long w = 0;
  for (int v : verts) {
    auto it = t.forbidden.find(v);
    if (it != t.forbidden.end()) w += static_cast<long long>(it->second.size());
  }
  return w;
}

bool respects_template(const Graph& g, const Template& t, const Coloring& col) {
  if (!is_proper(g, col)) return false;
  for (const auto& [v, c] : t.precolored) {
    if (col.color[v] != c) return false;
  }
  for (const auto& [v, colors] : t.forbidden) {
    if (std::binary_search(colors.begin(), colors.end(), col.color[v])) return false;
  }
  return true;
}

std::optional<Coloring> find_respecting_coloring(const Graph& g, const Template& t) {
  validate_template(g, t);
  RespectSearch search(g, t);
  auto assignment = search.run();
  if (!assignment) return std::nullopt;
  Coloring col;
  col.palette = t.palette;
  col.color.resize(g.n);
  for (int v = 0; v < g.n; ++v) col.color[v] = t.palette[(*assignment)[v]];
  if (!respects_template(g, t, col)) {
    throw std::logic_error("respecting-coloring search returned an invalid coloring");
  }
  return col;
}

bool is_inextensible_for(const Graph& g, const Template& t, int k) {
  const TemplateCost c = cost_k(t, k);
  if (c.cost >= 2LL * k * k) return false;
  for (const auto& [v, colors] : t.forbidden) {
    if (static_cast<int>(colors.size()) > k) return false;
  }
  return !find_respecting_coloring(g, t).has_value();
}

CriticalSubgraph minimal_inextensible_subgraph(const Graph& g, const std::vector<int>& palette,
                                               int k) {
  if (k < 1) throw std::runtime_error("k must be positive");
  const std::vector<int> pal = sorted_unique(palette);
  const int chi = chromatic_number(g).chi;
  if (static_cast<int>(pal.size()) != chi - 1) {
    throw std::runtime_error("palette size must be chi(g)-1");
  }
  std::vector<int> kept(g.n);
  for (int v = 0; v < g.n; ++v) kept[v] = v;
  // One ascending deletion pass: once H - v becomes palette-colorable it
  // stays colorable under further deletions, so no second pass is needed.
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> trial;
    trial.reserve(kept.size());
    for (int u : kept) {
      if (u != v) trial.push_back(u);
    }
    if (trial.size() == kept.size()) continue;
    const Graph h = induced_subgraph(g, trial).graph;
    if (!find_respecting_coloring(h, empty_template(pal)).has_value()) kept = std::move(trial);
  }
  auto sub = induced_subgraph(g, kept);
  return {std::move(sub.graph), std::move(sub.vertex_map)};
}

}  // namespace gcx
