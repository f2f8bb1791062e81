#include "gcx/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gcx::io {
namespace {

std::vector<int> int_vector(const json& j) {
  std::vector<int> v;
  for (const auto& e : j) v.push_back(e.get<int>());
  return v;
}

std::vector<std::vector<int>> int_matrix(const json& j) {
  std::vector<std::vector<int>> m;
  for (const auto& row : j) m.push_back(int_vector(row));
  return m;
}

int parse_vertex_key(const std::string& key) {
  std::size_t pos = 0;
  const int v = std::stoi(key, &pos);
  if (pos != key.size()) throw std::runtime_error("bad vertex key: " + key);
  return v;
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag.empty() || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "edge") throw std::runtime_error("bad DIMACS header");
      continue;
    }
    if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw std::runtime_error("bad DIMACS edge line");
      if (n < 0) throw std::runtime_error("DIMACS edge before header");
      edges.emplace_back(u - 1, v - 1);
      continue;
    }
    throw std::runtime_error("unknown DIMACS line: " + line);
  }
  if (n < 0) throw std::runtime_error("missing DIMACS header");
  if (m >= 0 && m != static_cast<long long>(edges.size())) {
    throw std::runtime_error("DIMACS edge count mismatch");
  }
  return Graph::from_edges(n, std::move(edges));
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.n << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) throw std::runtime_error("bad edge list line: " + line);
    edges.emplace_back(u, v);
    n = std::max({n, u + 1, v + 1});
  }
  return Graph::from_edges(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# " << g.n << " vertices\n";
  for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::streampos start = in.tellg();
  bool dimacs = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c" || tag == "#") continue;
    dimacs = (tag == "p" || tag == "e");
    break;
  }
  in.clear();
  in.seekg(start);
  return dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

json coloring_certificate(int chi, const Coloring& witness, int connectivity) {
  return json{{"chi", chi}, {"coloring", witness.color}, {"connectivity", connectivity}};
}

json template_to_json(const Template& t) {
  json s = json::object();
  for (const auto& [v, c] : t.precolored) s[std::to_string(v)] = c;
  json f = json::object();
  for (const auto& [v, colors] : t.forbidden) f[std::to_string(v)] = colors;
  return json{{"palette", t.palette}, {"S", s}, {"F", f}};
}

Template template_from_json(const json& j) {
  Template t;
  t.palette = sorted_unique(int_vector(j.at("palette")));
  if (j.contains("S")) {
    for (const auto& [key, value] : j.at("S").items()) {
      t.precolored[parse_vertex_key(key)] = value.get<int>();
    }
  }
  if (j.contains("F")) {
    for (const auto& [key, value] : j.at("F").items()) {
      auto colors = sorted_unique(int_vector(value));
      if (!colors.empty()) t.forbidden[parse_vertex_key(key)] = std::move(colors);
    }
  }
  return t;
}

json hall_instance_to_json(const HallInstance& inst) {
  return json{{"palette", inst.palette}, {"lists", inst.lists}};
}

HallInstance hall_instance_from_json(const json& j) {
  HallInstance inst;
  inst.palette = sorted_unique(int_vector(j.at("palette")));
  inst.lists = int_matrix(j.at("lists"));
  for (auto& list : inst.lists) list = sorted_unique(std::move(list));
  return inst;
}

json hall_result_to_json(const HallResult& res) {
  if (res.feasible) return json{{"feasible", true}, {"sdr", res.sdr}};
  return json{{"feasible", false}, {"violator", res.violator}};
}

json decomposition_to_json(const LightDecomposition& d) {
  json u = json::object();
  for (const auto& [v, c] : d.u_coloring) u[std::to_string(v)] = c;
  return json{{"U", u}, {"pieces", d.pieces}};
}

LightDecomposition decomposition_from_json(const json& j, int k) {
  LightDecomposition d;
  d.k = k;
  if (j.contains("U")) {
    for (const auto& [key, value] : j.at("U").items()) {
      d.u_coloring[parse_vertex_key(key)] = value.get<int>();
    }
  }
  d.pieces = int_matrix(j.at("pieces"));
  return d;
}

json recolor_result_to_json(const RecolorResult& r) {
  return json{{"coloring", r.coloring.color},
              {"certificate",
               {{"free_colors", r.certificate.free_colors},
                {"piece_lists", r.certificate.piece_lists},
                {"piece_colors", r.certificate.piece_colors},
                {"list_floor", r.certificate.list_floor},
                {"budget",
                 {{"R", r.certificate.exactness.piece_count},
                  {"q", r.certificate.exactness.colors_on_u},
                  {"budget", r.certificate.exactness.budget},
                  {"exact", r.certificate.exactness.exact}}}}}};
}

json package_to_json(const ReductionPackage& pkg) {
  json j{{"k", pkg.k},
         {"d", pkg.d},
         {"palette_size", pkg.palette_size},
         {"chi", pkg.chi},
         {"s_cap", pkg.s_cap},
         {"p", pkg.p},
         {"q", pkg.q},
         {"t_i", pkg.t_cls},
         {"x", pkg.x},
         {"y", pkg.y},
         {"I0", pkg.I0},
         {"I1", pkg.I1},
         {"I2", pkg.I2},
         {"t", pkg.t},
         {"t_prime", pkg.t_prime},
         {"p_total", pkg.p_total},
         {"s1", pkg.s1},
         {"used_outside", pkg.used_outside},
         {"lists", pkg.lists}};
  if (pkg.witness_j) j["J"] = *pkg.witness_j;
  return j;
}

ReductionPackage package_from_json(const json& j) {
  ReductionPackage pkg;
  pkg.k = j.at("k").get<int>();
  pkg.d = j.at("d").get<int>();
  pkg.palette_size = j.at("palette_size").get<int>();
  pkg.chi = j.at("chi").get<int>();
  pkg.s_cap = int_vector(j.at("s_cap"));
  pkg.p = int_vector(j.at("p"));
  pkg.q = int_vector(j.at("q"));
  pkg.t_cls = int_vector(j.at("t_i"));
  pkg.x = int_vector(j.at("x"));
  pkg.y = int_vector(j.at("y"));
  pkg.I0 = int_vector(j.at("I0"));
  pkg.I1 = int_vector(j.at("I1"));
  pkg.I2 = int_vector(j.at("I2"));
  pkg.t = j.at("t").get<int>();
  pkg.t_prime = j.at("t_prime").get<int>();
  pkg.p_total = j.at("p_total").get<int>();
  pkg.s1 = j.at("s1").get<int>();
  pkg.used_outside = int_vector(j.at("used_outside"));
  pkg.lists = int_matrix(j.at("lists"));
  if (j.contains("J")) pkg.witness_j = int_vector(j.at("J"));
  return pkg;
}

json package_report_to_json(const PackageReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"clause", c.clause}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return json{{"valid", report.all_pass()}, {"checks", checks}};
}

json sweep_row_to_json(const SweepRow& row) {
  return json{{"k", row.k},         {"d", row.d},   {"r", row.r},   {"t_prime", row.t_prime},
              {"a", row.a},         {"b", row.b},   {"t", row.t},   {"lhs", row.lhs},
              {"k_t_prime", row.rhs}, {"D1", row.d1}, {"D2", row.d2}};
}

json sweep_summary_to_json(const SweepResult& result) {
  json cex = json::array();
  for (const auto& row : result.counterexamples) cex.push_back(sweep_row_to_json(row));
  return json{{"instances", result.instances}, {"counterexamples", cex}};
}

std::string sweep_csv_header() { return "k,d,r,t_prime,a,b,t_vector,lhs,k_t_prime,D1,D2"; }

std::string sweep_row_csv(const SweepRow& row) {
  std::ostringstream os;
  os << row.k << ',' << row.d << ',' << row.r << ',' << row.t_prime << ',' << row.a << ','
     << row.b << ',';
  for (std::size_t i = 0; i < row.t.size(); ++i) os << (i ? ";" : "") << row.t[i];
  os << ',' << row.lhs << ',' << row.rhs << ',' << row.d1 << ',' << row.d2;
  return os.str();
}

json residual_check_to_json(const ResidualCheck& check) {
  return json{{"feasible", check.feasible}, {"violator", check.violator}, {"notes", check.notes}};
}

json obstruction_findings_to_json(const std::vector<ObstructionFinding>& findings) {
  json arr = json::array();
  for (const auto& f : findings) {
    arr.push_back(json{{"indices", f.indices}, {"union_size", f.union_size}, {"kind", f.kind}});
  }
  return arr;
}

json boundary_report_to_json(const BoundaryReport& report) {
  json modes = json::array();
  for (const auto& m : report.modes) {
    json examples = json::array();
    for (std::size_t i = 0; i < m.examples.size(); ++i) {
      examples.push_back(json{{"package", package_to_json(m.examples[i])},
                              {"violator", m.example_violators[i]}});
    }
    modes.push_back(json{{"mode", m.mode},
                         {"sampled", m.sampled},
                         {"hall_bad_found", m.hall_bad},
                         {"bad_pairs", m.bad_pairs},
                         {"bad_middle", m.bad_middle},
                         {"bad_large", m.bad_large},
                         {"singleton_lists", m.singleton_lists},
                         {"examples", examples}});
  }
  return json{{"k", report.k}, {"samples", report.samples}, {"seed", report.seed}, {"modes", modes}};
}

json certificate_to_json(const ExtractionCertificate& cert) {
  return json{{"graph_hash", cert.graph_hash},
              {"k", cert.k},
              {"m", cert.m},
              {"chi_g", cert.chi_g},
              {"chi_h", cert.chi_h},
              {"connectivity_ok", cert.connectivity_ok},
              {"subgraph", cert.subgraph_vertices},
              {"method", cert.method}};
}

ExtractionCertificate certificate_from_json(const json& j) {
  ExtractionCertificate cert;
  cert.graph_hash = j.at("graph_hash").get<std::string>();
  cert.k = j.at("k").get<int>();
  cert.m = j.at("m").get<int>();
  cert.chi_g = j.at("chi_g").get<int>();
  cert.chi_h = j.at("chi_h").get<int>();
  cert.connectivity_ok = j.at("connectivity_ok").get<bool>();
  cert.subgraph_vertices = int_vector(j.at("subgraph"));
  cert.method = j.at("method").get<std::string>();
  return cert;
}

}  // namespace gcx::io
