// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "gcx/brute.hpp"
#include "gcx/chromatic.hpp"
#include "gcx/connectivity.hpp"
#include "gcx/corpus.hpp"
#include "gcx/decomposition.hpp"
#include "gcx/extract.hpp"
#include "gcx/hall.hpp"
#include "gcx/reduction.hpp"
#include "gcx/rng.hpp"
#include "gcx/templates.hpp"

using namespace gcx;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %d: %-28s %s  (%s)\n", criterion, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: exhaustive inequality sweep --------------------------------

void criterion_sweep() {
  const auto start = std::chrono::steady_clock::now();
  const SweepResult result = numerical_lemma_sweep(8, 3);
  char detail[160];
  std::snprintf(detail, sizeof detail, "%lld instances, %zu violations, %.1fs",
                result.instances, result.counterexamples.size(), seconds_since(start));
  report(1, "numerical inequality sweep", result.counterexamples.empty() && result.instances > 0,
         detail);
}

// ---- criterion 2: recoloring completion --------------------------------------

void criterion_recolor() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(20240001);
  int completed = 0, floor_ok = 0, hall_failures = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    const int k = 1 + i % 4;
    const int palette = 3 * k + (i / 4) % 4;
    const RecolorInstance inst = sample_recolor_instance(k, palette, rng);
    try {
      const RecolorResult result = recolor(inst.graph, inst.tmpl, inst.decomposition);
      if (respects_template(inst.graph, inst.tmpl, result.coloring)) ++completed;
      bool floors = true;
      for (const auto& list : result.certificate.piece_lists) {
        if (static_cast<int>(list.size()) < result.certificate.list_floor) floors = false;
      }
      if (floors) ++floor_ok;
    } catch (const std::exception&) {
      ++hall_failures;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d/%d colorings validated, %d floor checks, %d Hall failures, %.1fs", completed,
                total, floor_ok, hall_failures, seconds_since(start));
  report(2, "recoloring completion", completed == total && floor_ok == total && hall_failures == 0,
         detail);
}

// ---- criterion 3: residual Hall feasibility ----------------------------------

void criterion_residual() {
  const auto start = std::chrono::steady_clock::now();
  long long generated = 0, feasible = 0, middle_clean = 0;
  const int per_cell = 667;  // 15 cells -> 10,005 packages
  for (int k = 1; k <= 5; ++k) {
    for (int d = 1; d <= 3; ++d) {
      for (int i = 0; i < per_cell; ++i) {
        const ReductionPackage pkg =
            generate_package(k, d, 5000000ULL + static_cast<std::uint64_t>(i));
        ++generated;
        if (check_residual_feasibility(pkg).feasible) ++feasible;
        if (check_middle_range(pkg).empty()) ++middle_clean;
      }
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%lld packages, %lld feasible, %lld middle-clean, %.1fs", generated, feasible,
                middle_clean, seconds_since(start));
  report(3, "residual Hall feasibility", feasible == generated && middle_clean == generated,
         detail);
}

// ---- criterion 4: desk-scale extraction --------------------------------------

std::vector<Graph> desk_corpus() {
  std::vector<Graph> graphs;
  for (int n = 2; n <= 10; ++n) graphs.push_back(complete_graph(n));
  graphs.push_back(complete_multipartite({2, 2, 2}));
  graphs.push_back(complete_multipartite({3, 3, 3}));
  graphs.push_back(complete_multipartite({2, 2, 2, 2}));
  graphs.push_back(complete_multipartite({1, 2, 3, 4}));
  graphs.push_back(complete_multipartite({2, 2, 3}));
  graphs.push_back(complete_multipartite({2, 2, 2, 2, 2}));
  graphs.push_back(kneser_graph(4, 2));
  graphs.push_back(kneser_graph(5, 2));
  graphs.push_back(generate_corpus({"mycielski", {3, 1}}));
  graphs.push_back(generate_corpus({"mycielski", {5, 0}}));
  graphs.push_back(generate_corpus({"mycielski", {4, 1}}));
  const double probs[] = {0.3, 0.5, 0.7, 0.85};
  for (int i = 0; i < 200; ++i) {
    graphs.push_back(gnp(5 + i % 6, probs[i % 4], 9000 + static_cast<std::uint64_t>(i)));
  }
  return graphs;
}

void criterion_extraction() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<int, int>> cases = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
  long long attempted = 0, verified = 0, reverified = 0, oracle_hits = 0;
  for (const Graph& g : desk_corpus()) {
    if (g.n > 10 || g.n < 1) continue;
    const int chi = chromatic_number(g).chi;
    for (const auto& [k, m] : cases) {
      if (chi < std::max(m + 2 * k - 2, 3 * k + 1)) continue;
      ++attempted;
      const ExtractionCertificate cert = extract_subgraph(g, k, m);
      if (verify_certificate(g, cert)) ++verified;
      const Graph h = induced_subgraph(g, cert.subgraph_vertices).graph;
      if (brute::chromatic_number(h) == cert.chi_h && cert.chi_h >= m &&
          brute::is_k_connected(h, k + 1)) {
        ++reverified;
      }
      if (theorem_oracle(g, k, m).has_value()) ++oracle_hits;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%lld qualifying cases, %lld verified, %lld re-verified, %lld oracle hits, %.1fs",
                attempted, verified, reverified, oracle_hits, seconds_since(start));
  report(4, "desk-scale extraction",
         attempted > 0 && verified == attempted && reverified == attempted &&
             oracle_hits == attempted,
         detail);
}

// ---- criterion 5: solver-vs-oracle equivalence --------------------------------

Graph random_graph(int n, int percent, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(percent, 100)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

void criterion_oracles() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(20240005);
  int chi_match = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(rng.uniform_int(1, 8), rng.uniform_int(10, 90), rng);
    if (chromatic_number(g).chi == brute::chromatic_number(g)) ++chi_match;
  }
  int conn_match = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(rng.uniform_int(1, 10), rng.uniform_int(10, 90), rng);
    bool ok = vertex_connectivity(g) == brute::vertex_connectivity(g);
    for (int k = 1; k <= g.n + 1 && ok; ++k) {
      ok = is_k_connected(g, k) == brute::is_k_connected(g, k);
    }
    if (ok) ++conn_match;
  }
  int hall_match = 0;
  for (int i = 0; i < 500; ++i) {
    const int palette = rng.uniform_int(1, 8);
    HallInstance inst;
    for (int c = 0; c < palette; ++c) inst.palette.push_back(c);
    const int lists = rng.uniform_int(0, 12);
    for (int l = 0; l < lists; ++l) {
      inst.lists.push_back(rng.sample_indices(palette, rng.uniform_int(1, std::min(palette, 4))));
    }
    const HallResult res = solve_sdr(inst);
    const int deficiency = brute::hall_max_deficiency(inst.lists);
    bool ok = res.feasible == (deficiency == 0);
    if (!res.feasible) {
      std::set<int> uni;
      for (int idx : res.violator) uni.insert(inst.lists[idx].begin(), inst.lists[idx].end());
      ok = ok && static_cast<int>(res.violator.size() - uni.size()) == deficiency;
    }
    if (ok) ++hall_match;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail, "chi %d/500, connectivity %d/500, deficiency %d/500, %.1fs",
                chi_match, conn_match, hall_match, seconds_since(start));
  report(5, "solver-vs-oracle equivalence",
         chi_match == 500 && conn_match == 500 && hall_match == 500, detail);
}

// ---- criterion 6: checker sensitivity -----------------------------------------

void criterion_sensitivity() {
  const auto start = std::chrono::steady_clock::now();
  int mutations = 0, exact_flags = 0;
  auto try_mutation = [&](const ReductionPackage& mutated, const std::string& clause) {
    ++mutations;
    if (validate_package(mutated).failed_clauses() == std::vector<std::string>{clause}) {
      ++exact_flags;
    }
  };
  for (std::uint64_t seed = 0; mutations < 50; ++seed) {
    const ReductionPackage pkg = generate_package(4, 1 + static_cast<int>(seed % 3), seed);
    const std::vector<int> I = pkg.residual_indices();
    if (pkg.I0.empty()) continue;
    const int scheme = mutations % 8;
    if (scheme == 0) {
      ReductionPackage m = pkg;
      m.q[m.I0.front()] += 1;
      try_mutation(m, "decomposition");
    } else if (scheme == 1) {
      if (pkg.I1.empty() && pkg.I2.empty()) continue;
      ReductionPackage m = pkg;
      m.x[!m.I1.empty() ? m.I1.front() : m.I2.front()] = m.k;
      try_mutation(m, "budget inequality");
    } else if (scheme == 2) {
      ReductionPackage m = pkg;
      m.I0.erase(m.I0.begin());
      m.I1 = sorted_unique([&] {
        auto v = m.I1;
        v.push_back(pkg.I0.front());
        return v;
      }());
      try_mutation(m, "index-set consistency");
    } else if (scheme == 3) {
      if (pkg.I1.empty()) continue;
      ReductionPackage m = pkg;
      m.y[m.I1.front()] = m.k;
      try_mutation(m, "residual weights");
    } else if (scheme == 4) {
      ReductionPackage m = pkg;
      const int i = m.I0.front();
      m.used_outside[i] = 2 * m.k - m.t_prime - m.s_cap[i] - m.p[i] + 1;
      try_mutation(m, "outside-colors bound");
    } else if (scheme == 5) {
      ReductionPackage m = pkg;
      int target = -1;
      for (int i : I) {
        const int floor = m.palette_size - m.used_outside[i] - m.y[i];
        if (floor >= 1 && static_cast<int>(m.lists[i].size()) >= floor) target = i;
      }
      if (target < 0) continue;
      ReductionPackage shrunk = m;
      shrunk.lists[target].resize(
          static_cast<std::size_t>(shrunk.palette_size - shrunk.used_outside[target] -
                                   shrunk.y[target] - 1));
      try_mutation(shrunk, "list-size bound");
    } else if (scheme == 6) {
      ReductionPackage m = pkg;
      m.p_total += 1;
      try_mutation(m, "aggregate identities");
    } else {
      if (pkg.I1.empty()) continue;
      ReductionPackage m = pkg;
      const int i = m.I1.front();
      const long long floor =
          static_cast<long long>(m.t_cls[i]) *
          (m.palette_size - 3 * m.k + m.t_prime + m.s1 + m.s_cap[i] + m.q[i]);
      if (floor < 1) continue;
      m.x[i] = static_cast<int>(floor - 1);
      try_mutation(m, "excess lower bound");
    }
  }

  // Hand-built Hall-violating families must come back with valid certificates.
  bool violators_ok = true;
  const std::vector<HallInstance> bad = {
      {{0, 1}, {{0}, {0}}},
      {{0, 1, 2}, {{0, 1}, {0, 1}, {0, 1}}},
      {{0, 1, 2, 3}, {{0}, {0}, {1, 2}, {1, 2}, {1, 2}}},
  };
  for (const HallInstance& inst : bad) {
    const HallResult res = solve_sdr(inst);
    if (res.feasible) {
      violators_ok = false;
      continue;
    }
    std::set<int> uni;
    for (int i : res.violator) uni.insert(inst.lists[i].begin(), inst.lists[i].end());
    if (static_cast<int>(uni.size()) >= static_cast<int>(res.violator.size())) violators_ok = false;
  }

  char detail[160];
  std::snprintf(detail, sizeof detail, "%d/%d exact clause flags, violator certificates %s, %.1fs",
                exact_flags, mutations, violators_ok ? "valid" : "INVALID",
                seconds_since(start));
  report(6, "checker sensitivity", mutations == 50 && exact_flags == 50 && violators_ok, detail);
}

// ---- criterion 7: boundary exploration ----------------------------------------

void criterion_boundary() {
  const auto start = std::chrono::steady_clock::now();
  bool well_formed = true;
  long long sampled = 0, found = 0;
  for (int k = 1; k <= 4; ++k) {
    const BoundaryReport rep = boundary_search_d0(k, 2500, 777);
    if (rep.modes.size() != 2) well_formed = false;
    for (const auto& mode : rep.modes) {
      sampled += mode.sampled;
      found += mode.hall_bad;
      if (mode.hall_bad != mode.bad_pairs + mode.bad_middle + mode.bad_large) well_formed = false;
      if (mode.examples.size() != mode.example_violators.size()) well_formed = false;
      for (const auto& example : mode.examples) {
        if (!validate_package(example).all_pass()) well_formed = false;
      }
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail, "%lld packages sampled, %lld hall-bad found, %.1fs", sampled,
                found, seconds_since(start));
  report(7, "d=0 boundary exploration", well_formed && sampled > 0, detail);
}

}  // namespace

int main() {
  criterion_sweep();
  criterion_recolor();
  criterion_residual();
  criterion_extraction();
  criterion_oracles();
  criterion_sensitivity();
  criterion_boundary();
  std::printf("ACCEPTANCE: %d/7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
