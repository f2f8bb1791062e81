#pragma once

#include <json.hpp>

namespace gcx {

struct ReportOutcome {
  nlohmann::json bundle;
  bool ok = true;  // false when any battery item hard-failed
};

// Runs a declared battery of work items and collects one bundle with
// per-item certificates plus a summary. Deterministic under fixed seeds.
// Config schema: {"battery": [item...]} with item types
//   {"type":"sweep","kmax":int,"dmax":int}
//   {"type":"packages","k":int,"d":int,"count":int,"seed":int}
//   {"type":"recolor","k":int,"palette":int,"count":int,"seed":int}
//   {"type":"extract","graph":{corpus spec},"k":int,"m":int}
//   {"type":"boundary","k":int,"samples":int,"seed":int}
ReportOutcome run_report(const nlohmann::json& config);

}  // namespace gcx
