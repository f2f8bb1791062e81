#include "gcx/decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gcx/hall.hpp"

namespace gcx {
namespace {

std::vector<int> colors_on_precolored(const Template& t) {
  std::vector<int> used;
  for (const auto& [v, c] : t.precolored) used.push_back(c);
  return sorted_unique(std::move(used));
}

std::vector<int> colors_on_u(const LightDecomposition& d) {
  std::vector<int> used;
  for (const auto& [v, c] : d.u_coloring) used.push_back(c);
  return sorted_unique(std::move(used));
}

}  // namespace

ExactnessCheck validate_decomposition(const Graph& g, const Template& t,
                                      const LightDecomposition& d) {
  validate_template(g, t);
  if (d.k < 1) throw std::runtime_error("k must be positive");

  std::vector<char> role(g.n, 0);  // 1 = S, 2 = U, 3 = piece
  for (const auto& [v, c] : t.precolored) role[v] = 1;
  for (const auto& [v, c] : d.u_coloring) {
    if (v < 0 || v >= g.n) throw std::runtime_error("not a partition: U vertex out of range");
    if (role[v] == 1) throw std::runtime_error("not a partition: U overlaps S");
    role[v] = 2;
  }
  for (const auto& piece : d.pieces) {
    if (piece.empty()) throw std::runtime_error("not a partition: empty piece");
    for (int v : piece) {
      if (v < 0 || v >= g.n) throw std::runtime_error("not a partition: piece vertex out of range");
      if (role[v] != 0) throw std::runtime_error("not a partition: piece overlaps S, U or another piece");
      role[v] = 3;
    }
  }
  for (int v = 0; v < g.n; ++v) {
    if (role[v] == 0) throw std::runtime_error("not a partition: uncovered vertex");
  }

  for (const auto& piece : d.pieces) {
    for (std::size_t i = 0; i < piece.size(); ++i) {
      for (std::size_t j = i + 1; j < piece.size(); ++j) {
        if (g.adjacent(piece[i], piece[j])) throw std::runtime_error("piece not stable");
      }
    }
    if (forbidden_weight(t, piece) >= d.k) throw std::runtime_error("lightness violated");
  }

  const std::vector<int> s_colors = colors_on_precolored(t);
  for (const auto& [v, c] : d.u_coloring) {
    if (!std::binary_search(t.palette.begin(), t.palette.end(), c)) {
      throw std::runtime_error("U-coloring invalid: color outside palette");
    }
    if (std::binary_search(s_colors.begin(), s_colors.end(), c)) {
      throw std::runtime_error("U-coloring invalid: reuses a color of the precolored set");
    }
    auto fit = t.forbidden.find(v);
    if (fit != t.forbidden.end() &&
        std::binary_search(fit->second.begin(), fit->second.end(), c)) {
      throw std::runtime_error("U-coloring invalid: forbidden color");
    }
    for (int u : g.adj[v]) {
      auto other = d.u_coloring.find(u);
      if (other != d.u_coloring.end() && other->second == c && u != v) {
        throw std::runtime_error("U-coloring invalid: monochromatic edge inside U");
      }
    }
  }

  ExactnessCheck check;
  check.piece_count = static_cast<int>(d.pieces.size());
  check.colors_on_u = static_cast<int>(colors_on_u(d).size());
  check.budget = 2 * d.k - static_cast<int>(t.precolored.size()) + 1;
  check.exact = check.piece_count + check.colors_on_u <= check.budget;
  return check;
}

RecolorResult recolor(const Graph& g, const Template& t, const LightDecomposition& d) {
  const int k = d.k;
  if (!is_good(t, k)) throw std::runtime_error("template not good");
  if (static_cast<int>(t.palette.size()) < 3 * k) throw std::runtime_error("palette too small");
  const ExactnessCheck check = validate_decomposition(g, t, d);
  if (!check.exact) throw std::runtime_error("decomposition not exact");

  const std::vector<int> s_colors = colors_on_precolored(t);
  const std::vector<int> u_colors = colors_on_u(d);
  std::vector<int> free_colors;
  for (int c : t.palette) {
    if (!std::binary_search(s_colors.begin(), s_colors.end(), c) &&
        !std::binary_search(u_colors.begin(), u_colors.end(), c)) {
      free_colors.push_back(c);
    }
  }

  const int s_size = static_cast<int>(t.precolored.size());
  const int floor = 2 * k - s_size - check.colors_on_u + 1;
  std::vector<std::vector<int>> lists;
  for (const auto& piece : d.pieces) {
    std::set<int> banned;
    for (int v : piece) {
      auto it = t.forbidden.find(v);
      if (it != t.forbidden.end()) banned.insert(it->second.begin(), it->second.end());
    }
    std::vector<int> list;
    for (int c : free_colors) {
      if (!banned.count(c)) list.push_back(c);
    }
    if (static_cast<int>(list.size()) < floor) {
      throw std::logic_error("piece list below the guaranteed floor");
    }
    lists.push_back(std::move(list));
  }

  HallInstance inst;
  inst.palette = free_colors;
  inst.lists = lists;
  const HallResult sdr = solve_sdr(inst);
  if (!sdr.feasible) throw std::runtime_error("Hall failure under lemma hypotheses");

  Coloring col;
  col.palette = t.palette;
  col.color.assign(g.n, Coloring::kUncolored);
  for (const auto& [v, c] : t.precolored) col.color[v] = c;
  for (const auto& [v, c] : d.u_coloring) col.color[v] = c;
  for (std::size_t j = 0; j < d.pieces.size(); ++j) {
    for (int v : d.pieces[j]) col.color[v] = sdr.sdr[j];
  }
  if (!respects_template(g, t, col)) {
    throw std::logic_error("recoloring produced a non-respecting coloring");
  }

  RecolorResult result;
  result.coloring = std::move(col);
  result.certificate.free_colors = std::move(free_colors);
  result.certificate.piece_lists = std::move(lists);
  result.certificate.piece_colors = sdr.sdr;
  result.certificate.list_floor = floor;
  result.certificate.exactness = check;
  return result;
}

RecolorInstance sample_recolor_instance(int k, int palette_size, Rng& rng) {
  if (k < 1) throw std::runtime_error("k must be positive");
  if (palette_size < 3 * k) throw std::runtime_error("palette too small");

  for (int attempt = 0; attempt < 500; ++attempt) {
    const int n = rng.uniform_int(std::max(2, k), 2 * k + 2);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.chance(2, 5)) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, std::move(edges));

    Template t;
    t.palette.resize(palette_size);
    for (int c = 0; c < palette_size; ++c) t.palette[c] = c;

    const int s_size = rng.uniform_int(0, std::min({n, 2 * k - 1, 3}));
    const std::vector<int> s_verts = rng.sample_indices(n, s_size);
    for (int v : s_verts) {
      for (int c = 0; c < palette_size; ++c) {
        bool clash = false;
        for (int u : g.adj[v]) {
          auto it = t.precolored.find(u);
          if (it != t.precolored.end() && it->second == c) clash = true;
        }
        if (!clash) {
          t.precolored[v] = c;
          break;
        }
      }
    }

    for (int v = 0; v < n; ++v) {
      if (t.precolored.count(v)) continue;
      const int f = rng.uniform_int(0, k - 1);
      if (f > 0) t.forbidden[v] = rng.sample_indices(palette_size, f);
    }

    LightDecomposition d;
    d.k = k;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
      if (!t.precolored.count(v)) rest.push_back(v);
    }
    const std::vector<int> s_colors = colors_on_precolored(t);
    const int u_size = rng.uniform_int(0, std::min<int>(2, rest.size()));
    bool stuck = false;
    for (int i = 0; i < u_size && !stuck; ++i) {
      const int v = rest[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(rest.size()) - 1))];
      if (d.u_coloring.count(v)) continue;
      std::vector<int> avail;
      auto fit = t.forbidden.find(v);
      for (int c : t.palette) {
        if (std::binary_search(s_colors.begin(), s_colors.end(), c)) continue;
        if (fit != t.forbidden.end() &&
            std::binary_search(fit->second.begin(), fit->second.end(), c)) {
          continue;
        }
        bool clash = false;
        for (int u : g.adj[v]) {
          auto other = d.u_coloring.find(u);
          if (other != d.u_coloring.end() && other->second == c) clash = true;
        }
        if (!clash) avail.push_back(c);
      }
      if (avail.empty()) {
        stuck = true;
        break;
      }
      d.u_coloring[v] = avail[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(avail.size()) - 1))];
    }
    if (stuck) continue;

    std::vector<char> placed(n, 0);
    for (const auto& [v, c] : d.u_coloring) placed[v] = 1;
    for (int v : rest) {
      if (placed[v]) continue;
      std::vector<int> piece{v};
      placed[v] = 1;
      long long weight = forbidden_weight(t, {v});
      for (int w : rest) {
        if (placed[w]) continue;
        auto fit = t.forbidden.find(w);
        const long long fw = fit == t.forbidden.end() ? 0 : static_cast<long long>(fit->second.size());
        if (weight + fw >= k) continue;
        bool stable = true;
        for (int u : piece) {
          if (g.adjacent(u, w)) stable = false;
        }
        if (!stable) continue;
        piece.push_back(w);
        placed[w] = 1;
        weight += fw;
      }
      d.pieces.push_back(std::move(piece));
    }

    const ExactnessCheck check = validate_decomposition(g, t, d);
    if (!check.exact) continue;
    return {g, std::move(t), std::move(d)};
  }
  throw std::runtime_error("no recolor instance sampled");
}

}  // namespace gcx
