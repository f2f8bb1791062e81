#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gcx/brute.hpp"
#include "gcx/chromatic.hpp"
#include "gcx/connectivity.hpp"
#include "gcx/corpus.hpp"
#include "gcx/decomposition.hpp"
#include "gcx/extract.hpp"
#include "gcx/hall.hpp"
#include "gcx/io.hpp"
#include "gcx/reduction.hpp"
#include "gcx/report.hpp"
#include "gcx/templates.hpp"

namespace {

using gcx::io::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

// Explicit flag wins, then GCX_SEED, then the built-in default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GCX_SEED")) return std::strtoull(env, nullptr, 10);
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph coloring, Hall feasibility and connected-subgraph extraction toolkit"};
  app.require_subcommand(1);

  std::string graph_path, template_path, decomp_path, instance_path, package_path, config_path;
  std::string out_path, csv_path, gen_name;
  std::vector<int> gen_params;
  bool as_json = false, as_edge_list = false, want_min_violator = false;
  int k = 1, m = 2, d = 1, kmax = 8, dmax = 3, samples = 1000, check_k = 0;
  double edge_prob = 0.5;
  std::optional<std::uint64_t> seed_flag;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "emit JSON"); };

  auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number with coloring certificate");
  chi_cmd->add_option("graph", graph_path)->required();
  add_json(chi_cmd);

  auto* conn_cmd = app.add_subcommand("connectivity", "exact vertex connectivity");
  conn_cmd->add_option("graph", graph_path)->required();
  conn_cmd->add_option("--check-k", check_k, "also decide k-connectedness");
  add_json(conn_cmd);

  auto* respect_cmd = app.add_subcommand("respect", "search for a template-respecting coloring");
  respect_cmd->add_option("graph", graph_path)->required();
  respect_cmd->add_option("template", template_path)->required();
  add_json(respect_cmd);

  auto* recolor_cmd =
      app.add_subcommand("recolor", "complete a good template along an exact decomposition");
  recolor_cmd->add_option("graph", graph_path)->required();
  recolor_cmd->add_option("template", template_path)->required();
  recolor_cmd->add_option("decomposition", decomp_path)->required();
  recolor_cmd->add_option("--k", k)->required();
  add_json(recolor_cmd);

  auto* hall_cmd = app.add_subcommand("hall", "distinct representatives or a violating subfamily");
  hall_cmd->add_option("instance", instance_path)->required();
  hall_cmd->add_flag("--min-violator", want_min_violator,
                     "also search for a minimum-size violating subfamily (<= 20 lists)");
  add_json(hall_cmd);

  auto* vp_cmd = app.add_subcommand("validate-package", "check every ledger clause of a package");
  vp_cmd->add_option("package", package_path)->required();
  add_json(vp_cmd);

  auto* gp_cmd = app.add_subcommand("gen-package", "sample a ledger-valid package");
  gp_cmd->add_option("--k", k)->required();
  gp_cmd->add_option("--d", d)->required();
  gp_cmd->add_option("--seed", seed_flag);
  add_json(gp_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep-numerical", "exhaustive inequality verification");
  sweep_cmd->add_option("--kmax", kmax);
  sweep_cmd->add_option("--dmax", dmax);
  sweep_cmd->add_option("--csv", csv_path, "write every enumerated instance as CSV");
  add_json(sweep_cmd);

  auto* boundary_cmd = app.add_subcommand("boundary-d0", "exploration at palette size 3k-1");
  boundary_cmd->add_option("--k", k)->required();
  boundary_cmd->add_option("--samples", samples);
  boundary_cmd->add_option("--seed", seed_flag);
  add_json(boundary_cmd);

  auto* extract_cmd = app.add_subcommand("extract", "certified connected high-chromatic subgraph");
  extract_cmd->add_option("graph", graph_path)->required();
  extract_cmd->add_option("--k", k)->required();
  extract_cmd->add_option("--m", m)->required();
  add_json(extract_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive statement-level oracle (n <= 12)");
  oracle_cmd->add_option("graph", graph_path)->required();
  oracle_cmd->add_option("--k", k)->required();
  oracle_cmd->add_option("--m", m)->required();
  add_json(oracle_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "deterministic test-graph generators");
  corpus_cmd->add_option("--gen", gen_name)->required();
  corpus_cmd->add_option("--params", gen_params);
  corpus_cmd->add_option("--p", edge_prob);
  corpus_cmd->add_option("--seed", seed_flag);
  corpus_cmd->add_option("--out", out_path);
  corpus_cmd->add_flag("--edges", as_edge_list, "write a 0-indexed edge list instead of DIMACS");
  add_json(corpus_cmd);

  auto* report_cmd = app.add_subcommand("report", "run a battery config and emit one bundle");
  report_cmd->add_option("config", config_path)->required();
  report_cmd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*chi_cmd) {
      const gcx::Graph g = gcx::io::read_graph_file(graph_path);
      const gcx::ChromaticResult result = gcx::chromatic_number(g);
      const int kappa = gcx::vertex_connectivity(g);
      if (as_json) {
        emit(gcx::io::coloring_certificate(result.chi, result.witness, kappa), "");
      } else {
        std::cout << "chi = " << result.chi << ", connectivity = " << kappa << "\n";
      }
    } else if (*conn_cmd) {
      const gcx::Graph g = gcx::io::read_graph_file(graph_path);
      const int kappa = gcx::vertex_connectivity(g);
      json j{{"connectivity", kappa}};
      if (check_k > 0) j["k_connected"] = gcx::is_k_connected(g, check_k);
      if (as_json) {
        emit(j, "");
      } else {
        std::cout << "connectivity = " << kappa;
        if (check_k > 0) std::cout << ", " << check_k << "-connected: " << (gcx::is_k_connected(g, check_k) ? "yes" : "no");
        std::cout << "\n";
      }
    } else if (*respect_cmd) {
      const gcx::Graph g = gcx::io::read_graph_file(graph_path);
      const gcx::Template t = gcx::io::template_from_json(load_json(template_path));
      const auto col = gcx::find_respecting_coloring(g, t);
      if (as_json) {
        emit(col ? json{{"found", true}, {"coloring", col->color}} : json{{"found", false}}, "");
      } else if (col) {
        std::cout << "respecting coloring found\n";
      } else {
        std::cout << "NONE\n";
      }
    } else if (*recolor_cmd) {
      const gcx::Graph g = gcx::io::read_graph_file(graph_path);
      const gcx::Template t = gcx::io::template_from_json(load_json(template_path));
      const gcx::LightDecomposition dec =
          gcx::io::decomposition_from_json(load_json(decomp_path), k);
      const gcx::RecolorResult result = gcx::recolor(g, t, dec);
      if (as_json) {
        emit(gcx::io::recolor_result_to_json(result), "");
      } else {
        std::cout << "recolor completed with " << result.certificate.piece_colors.size()
                  << " piece colors\n";
      }
    } else if (*hall_cmd) {
      const gcx::HallInstance inst = gcx::io::hall_instance_from_json(load_json(instance_path));
      const gcx::HallResult result = gcx::solve_sdr(inst);
      json j = gcx::io::hall_result_to_json(result);
      if (want_min_violator) {
        const auto smallest = gcx::min_violator(inst);
        j["min_violator"] = smallest ? json(*smallest) : json();
      }
      if (as_json) {
        emit(j, "");
      } else if (result.feasible) {
        std::cout << "feasible\n";
      } else {
        std::cout << "Hall-bad subfamily of size " << result.violator.size() << "\n";
      }
    } else if (*vp_cmd) {
      const gcx::ReductionPackage pkg = gcx::io::package_from_json(load_json(package_path));
      const gcx::PackageReport report = gcx::validate_package(pkg);
      if (as_json) {
        emit(gcx::io::package_report_to_json(report), "");
      } else {
        for (const auto& check : report.checks) {
          std::cout << (check.pass ? "pass" : "FAIL") << "  " << check.clause
                    << (check.detail.empty() ? "" : "  (" + check.detail + ")") << "\n";
        }
      }
      return report.all_pass() ? 0 : 1;
    } else if (*gp_cmd) {
      const gcx::ReductionPackage pkg =
          gcx::generate_package(k, d, resolve_seed(seed_flag, 0));
      emit(gcx::io::package_to_json(pkg), "");
    } else if (*sweep_cmd) {
      std::ofstream csv;
      std::function<void(const gcx::SweepRow&)> sink;
      if (!csv_path.empty()) {
        csv.open(csv_path);
        csv << gcx::io::sweep_csv_header() << "\n";
        sink = [&csv](const gcx::SweepRow& row) { csv << gcx::io::sweep_row_csv(row) << "\n"; };
      }
      const gcx::SweepResult result = gcx::numerical_lemma_sweep(kmax, dmax, sink);
      if (as_json) {
        emit(gcx::io::sweep_summary_to_json(result), "");
      } else {
        std::cout << result.instances << " instances, " << result.counterexamples.size()
                  << " counterexamples\n";
      }
      return result.counterexamples.empty() ? 0 : 1;
    } else if (*boundary_cmd) {
      const gcx::BoundaryReport report =
          gcx::boundary_search_d0(k, samples, resolve_seed(seed_flag, 0));
      if (as_json) {
        emit(gcx::io::boundary_report_to_json(report), "");
      } else {
        for (const auto& mode : report.modes) {
          std::cout << mode.mode << ": sampled " << mode.sampled << ", hall-bad " << mode.hall_bad
                    << " (pairs " << mode.bad_pairs << ", middle " << mode.bad_middle
                    << ", large " << mode.bad_large << "), packages with singleton lists "
                    << mode.singleton_lists << "\n";
        }
      }
    } else if (*extract_cmd) {
      const gcx::Graph g = gcx::io::read_graph_file(graph_path);
      const gcx::ExtractionCertificate cert = gcx::extract_subgraph(g, k, m);
      const bool verified = gcx::verify_certificate(g, cert);
      if (as_json) {
        json j = gcx::io::certificate_to_json(cert);
        j["verified"] = verified;
        emit(j, "");
      } else {
        std::cout << "subgraph of " << cert.subgraph_vertices.size() << " vertices, chi "
                  << cert.chi_h << ", method " << cert.method
                  << (verified ? ", verified" : ", VERIFICATION FAILED") << "\n";
      }
      return verified ? 0 : 1;
    } else if (*oracle_cmd) {
      const gcx::Graph g = gcx::io::read_graph_file(graph_path);
      const auto verts = gcx::theorem_oracle(g, k, m);
      if (as_json) {
        emit(verts ? json{{"found", true}, {"subgraph", *verts}} : json{{"found", false}}, "");
      } else if (verts) {
        std::cout << "subgraph of " << verts->size() << " vertices\n";
      } else {
        std::cout << "NONE\n";
      }
    } else if (*corpus_cmd) {
      gcx::CorpusSpec spec;
      spec.generator = gen_name;
      spec.params = gen_params;
      spec.edge_prob = edge_prob;
      spec.seed = resolve_seed(seed_flag, 0);
      const gcx::Graph g = gcx::generate_corpus(spec);
      if (as_json) {
        emit(json{{"n", g.n}, {"edges", g.edges}}, out_path);
      } else {
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!out_path.empty()) {
          file.open(out_path);
          out = &file;
        }
        if (as_edge_list) {
          gcx::io::write_edge_list(*out, g);
        } else {
          gcx::io::write_dimacs(*out, g);
        }
      }
    } else if (*report_cmd) {
      const gcx::ReportOutcome outcome = gcx::run_report(load_json(config_path));
      emit(outcome.bundle, out_path);
      return outcome.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
