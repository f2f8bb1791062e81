#include "gcx/report.hpp"

#include <stdexcept>
#include <string>

#include "gcx/corpus.hpp"
#include "gcx/decomposition.hpp"
#include "gcx/extract.hpp"
#include "gcx/io.hpp"
#include "gcx/reduction.hpp"

namespace gcx {
namespace {

using nlohmann::json;

CorpusSpec corpus_spec_from_json(const json& j) {
  CorpusSpec spec;
  spec.generator = j.at("generator").get<std::string>();
  if (j.contains("params")) {
    for (const auto& p : j.at("params")) spec.params.push_back(p.get<int>());
  }
  if (j.contains("p")) spec.edge_prob = j.at("p").get<double>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

json run_sweep_item(const json& item) {
  const SweepResult result = numerical_lemma_sweep(item.at("kmax").get<int>(),
                                                   item.at("dmax").get<int>());
  json out = io::sweep_summary_to_json(result);
  out["type"] = "sweep";
  out["ok"] = result.counterexamples.empty();
  return out;
}

json run_packages_item(const json& item) {
  const int k = item.at("k").get<int>();
  const int d = item.at("d").get<int>();
  const int count = item.at("count").get<int>();
  const std::uint64_t seed = item.value("seed", 0ULL);
  long long feasible = 0, infeasible = 0, middle_findings = 0;
  for (int i = 0; i < count; ++i) {
    const ReductionPackage pkg = generate_package(k, d, seed + static_cast<std::uint64_t>(i));
    if (check_residual_feasibility(pkg).feasible) {
      ++feasible;
    } else {
      ++infeasible;
    }
    middle_findings += static_cast<long long>(check_middle_range(pkg).size());
  }
  return json{{"type", "packages"}, {"k", k},
              {"d", d},             {"count", count},
              {"seed", seed},       {"hall_feasible", feasible},
              {"hall_bad", infeasible}, {"middle_findings", middle_findings},
              {"ok", infeasible == 0 && middle_findings == 0}};
}

json run_recolor_item(const json& item) {
  const int k = item.at("k").get<int>();
  const int palette = item.value("palette", 3 * k);
  const int count = item.at("count").get<int>();
  Rng rng(item.value("seed", 0ULL));
  long long completed = 0;
  for (int i = 0; i < count; ++i) {
    const RecolorInstance inst = sample_recolor_instance(k, palette, rng);
    const RecolorResult result = recolor(inst.graph, inst.tmpl, inst.decomposition);
    if (respects_template(inst.graph, inst.tmpl, result.coloring)) ++completed;
  }
  return json{{"type", "recolor"}, {"k", k},       {"palette", palette},
              {"count", count},    {"completed", completed}, {"ok", completed == count}};
}

json run_extract_item(const json& item) {
  const Graph g = generate_corpus(corpus_spec_from_json(item.at("graph")));
  const int k = item.at("k").get<int>();
  const int m = item.at("m").get<int>();
  const ExtractionCertificate cert = extract_subgraph(g, k, m);
  const bool verified = verify_certificate(g, cert);
  json out{{"type", "extract"}, {"k", k}, {"m", m}, {"certificate", io::certificate_to_json(cert)},
           {"verified", verified}, {"ok", verified}};
  return out;
}

json run_boundary_item(const json& item) {
  const BoundaryReport report = boundary_search_d0(item.at("k").get<int>(),
                                                   item.at("samples").get<int>(),
                                                   item.value("seed", 0ULL));
  json out = io::boundary_report_to_json(report);
  out["type"] = "boundary";
  out["ok"] = true;  // exploration only, no pass/fail on existence
  return out;
}

}  // namespace

ReportOutcome run_report(const nlohmann::json& config) {
  ReportOutcome outcome;
  json items = json::array();
  long long failures = 0;
  const json battery = config.value("battery", json::array());
  for (const auto& item : battery) {
    json result;
    try {
      const std::string type = item.at("type").get<std::string>();
      if (type == "sweep") {
        result = run_sweep_item(item);
      } else if (type == "packages") {
        result = run_packages_item(item);
      } else if (type == "recolor") {
        result = run_recolor_item(item);
      } else if (type == "extract") {
        result = run_extract_item(item);
      } else if (type == "boundary") {
        result = run_boundary_item(item);
      } else {
        throw std::runtime_error("unknown battery item type: " + type);
      }
    } catch (const std::exception& e) {
      result = json{{"type", item.value("type", "unknown")}, {"ok", false}, {"error", e.what()}};
    }
    if (!result.value("ok", false)) ++failures;
    items.push_back(std::move(result));
  }
  outcome.bundle = json{{"items", items},
                        {"summary", {{"total", items.size()}, {"failures", failures}}}};
  outcome.ok = failures == 0;
  return outcome;
}

}  // namespace gcx
