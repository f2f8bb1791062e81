#include <doctest.h>

#include <set>

#include "gcx/decomposition.hpp"
#include "helpers.hpp"

using namespace gcx;
using test::make_graph;

namespace {

Template base_template(std::vector<int> palette) { return empty_template(std::move(palette)); }

}  // namespace

TEST_CASE("validation reports exactness against the budget") {
  const Graph g = make_graph(3, {});
  LightDecomposition d;
  d.k = 1;
  d.pieces = {{0, 1, 2}};
  const ExactnessCheck check = validate_decomposition(g, base_template({0, 1, 2}), d);
  CHECK(check.budget == 3);
  CHECK(check.piece_count == 1);
  CHECK(check.colors_on_u == 0);
  CHECK(check.exact);  // 1 + 0 <= 3
}

TEST_CASE("validation rejects violations clause by clause") {
  const Graph g = make_graph(2, {{0, 1}});

  {
    Template t = base_template({0, 1, 2});
    t.forbidden[0] = {0};
    LightDecomposition d;
    d.k = 1;  // piece weight 1 = k
    d.pieces = {{0}, {1}};
    CHECK_THROWS_WITH(validate_decomposition(g, t, d), "lightness violated");
  }
  {
    LightDecomposition d;
    d.k = 1;
    d.pieces = {{0}};
    CHECK_THROWS_WITH(validate_decomposition(g, base_template({0, 1}), d),
                      "not a partition: uncovered vertex");
  }
  {
    LightDecomposition d;
    d.k = 1;
    d.pieces = {{0}, {0, 1}};
    CHECK_THROWS_WITH(validate_decomposition(g, base_template({0, 1}), d),
                      "not a partition: piece overlaps S, U or another piece");
  }
  {
    LightDecomposition d;
    d.k = 2;
    d.pieces = {{0, 1}};  // adjacent pair in one piece
    CHECK_THROWS_WITH(validate_decomposition(g, base_template({0, 1}), d), "piece not stable");
  }
  {
    Template t = base_template({0, 1});
    t.precolored[0] = 0;
    LightDecomposition d;
    d.k = 1;
    d.u_coloring[1] = 0;  // reuses the color of S
    CHECK_THROWS_WITH(validate_decomposition(g, t, d),
                      "U-coloring invalid: reuses a color of the precolored set");
  }
  {
    const Graph h = make_graph(2, {{0, 1}});
    LightDecomposition d;
    d.k = 1;
    d.u_coloring[0] = 0;
    d.u_coloring[1] = 0;  // monochromatic edge inside U
    CHECK_THROWS_WITH(validate_decomposition(h, base_template({0, 1}), d),
                      "U-coloring invalid: monochromatic edge inside U");
  }
}

TEST_CASE("exactness boundary is reported, not thrown") {
  const Graph g = make_graph(4, {});
  LightDecomposition d;
  d.k = 1;
  d.pieces = {{0}, {1}, {2}, {3}};  // R = 4 = budget + 1
  const ExactnessCheck check = validate_decomposition(g, base_template({0, 1, 2}), d);
  CHECK(check.budget == 3);
  CHECK_FALSE(check.exact);
}

TEST_CASE("recolor on a single free vertex") {
  const Graph g = make_graph(1, {});
  LightDecomposition d;
  d.k = 1;
  d.pieces = {{0}};
  const RecolorResult result = recolor(g, base_template({0, 1, 2}), d);
  CHECK(is_proper(g, result.coloring));
  CHECK(result.coloring.color[0] == 0);  // deterministic first free color
  CHECK(result.certificate.list_floor == 3);
}

TEST_CASE("recolor on the two-piece worked example") {
  const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  Template t;
  t.palette = {1, 2, 3, 4, 5, 6};
  t.precolored[0] = 1;
  t.forbidden[1] = {2};
  LightDecomposition d;
  d.k = 2;
  d.pieces = {{1}, {2}};

  const RecolorResult result = recolor(k3, t, d);
  // floor 2k - |S| - q + 1 = 4; lists derived from C' = {2,3,4,5,6}
  CHECK(result.certificate.list_floor == 4);
  CHECK(result.certificate.piece_lists[0] == std::vector<int>{3, 4, 5, 6});
  CHECK(result.certificate.piece_lists[1] == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(result.certificate.piece_colors == std::vector<int>{3, 2});
  CHECK(result.coloring.color == std::vector<int>{1, 3, 2});
  CHECK(respects_template(k3, t, result.coloring));
}

TEST_CASE("recolor with no pieces returns the precoloring plus U") {
  const Graph k2 = make_graph(2, {{0, 1}});
  Template t;
  t.palette = {1, 2, 3};
  t.precolored[0] = 1;
  LightDecomposition d;
  d.k = 1;
  d.u_coloring[1] = 2;
  const RecolorResult result = recolor(k2, t, d);
  CHECK(result.coloring.color == std::vector<int>{1, 2});
  CHECK(result.certificate.piece_colors.empty());
}

TEST_CASE("recolor validates its hypotheses") {
  const Graph g = make_graph(1, {});
  {
    Template t = base_template({0, 1, 2});
    t.forbidden[0] = {0};  // |F| = 1 > k-1 = 0
    LightDecomposition d;
    d.k = 1;
    d.pieces = {{0}};
    CHECK_THROWS_WITH(recolor(g, t, d), "template not good");
  }
  {
    LightDecomposition d;
    d.k = 1;
    d.pieces = {{0}};
    CHECK_THROWS_WITH(recolor(g, base_template({0, 1}), d), "palette too small");
  }
  {
    const Graph four = make_graph(4, {});
    LightDecomposition d;
    d.k = 1;
    d.pieces = {{0}, {1}, {2}, {3}};
    CHECK_THROWS_WITH(recolor(four, base_template({0, 1, 2}), d), "decomposition not exact");
  }
}

TEST_CASE("sampled exact instances always recolor cleanly") {
  Rng rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = rng.uniform_int(1, 4);
    const int palette = 3 * k + rng.uniform_int(0, 3);
    const RecolorInstance inst = sample_recolor_instance(k, palette, rng);
    const RecolorResult result = recolor(inst.graph, inst.tmpl, inst.decomposition);
    CHECK(respects_template(inst.graph, inst.tmpl, result.coloring));

    // pieces are monochromatic with pairwise distinct colors
    std::set<int> piece_colors;
    for (std::size_t j = 0; j < inst.decomposition.pieces.size(); ++j) {
      const int c = result.certificate.piece_colors[j];
      CHECK(piece_colors.insert(c).second);
      for (int v : inst.decomposition.pieces[j]) CHECK(result.coloring.color[v] == c);
    }
    // chained inequality: |L(Q_j)| >= 2k - |S| - q + 1 >= R
    const int floor = result.certificate.list_floor;
    CHECK(floor >= static_cast<int>(inst.decomposition.pieces.size()));
    for (const auto& list : result.certificate.piece_lists) {
      CHECK(static_cast<int>(list.size()) >= floor);
    }
  }
}
