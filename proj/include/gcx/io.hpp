#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gcx/decomposition.hpp"
#include "gcx/extract.hpp"
#include "gcx/graph.hpp"
#include "gcx/hall.hpp"
#include "gcx/reduction.hpp"
#include "gcx/templates.hpp"

namespace gcx::io {

using json = nlohmann::json;

// DIMACS .col: "c" comments, one "p edge <n> <m>" header, "e u v" lines with
// 1-indexed endpoints.
Graph parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// Plain edge list: "u v" per line, 0-indexed, '#' comments; n is one more
// than the largest endpoint.
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Sniffs the format from the first significant line.
Graph read_graph_file(const std::string& path);

json coloring_certificate(int chi, const Coloring& witness, int connectivity);

json template_to_json(const Template& t);
Template template_from_json(const json& j);

json hall_instance_to_json(const HallInstance& inst);
HallInstance hall_instance_from_json(const json& j);
json hall_result_to_json(const HallResult& res);

json decomposition_to_json(const LightDecomposition& d);
LightDecomposition decomposition_from_json(const json& j, int k);

json recolor_result_to_json(const RecolorResult& r);

json package_to_json(const ReductionPackage& pkg);
ReductionPackage package_from_json(const json& j);
json package_report_to_json(const PackageReport& report);

json sweep_row_to_json(const SweepRow& row);
json sweep_summary_to_json(const SweepResult& result);
std::string sweep_csv_header();
std::string sweep_row_csv(const SweepRow& row);

json residual_check_to_json(const ResidualCheck& check);
json obstruction_findings_to_json(const std::vector<ObstructionFinding>& findings);
json boundary_report_to_json(const BoundaryReport& report);

json certificate_to_json(const ExtractionCertificate& cert);
ExtractionCertificate certificate_from_json(const json& j);

}  // namespace gcx::io
