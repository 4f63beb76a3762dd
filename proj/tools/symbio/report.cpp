#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace symbio::cli {

std::uint64_t require_seed(const Options& o, const std::string& command) {
  if (!o.seed) throw UsageError(command + " is randomized and requires --seed <u64>");
  return *o.seed;
}

Json cells_json(const life::CellSet& cells) {
  Json out = Json::array();
  for (const life::Cell& c : cells.cells()) out.push_back({c.x, c.y});
  return out;
}

Json motion_json(const life::RigidMotion& m) {
  return Json{{"symmetry", life::symmetry_name(m.linear)},
              {"matrix", {m.linear.a, m.linear.b, m.linear.c, m.linear.d}},
              {"translation", {m.dx, m.dy}},
              {"text", m.to_string()}};
}

Json period_json(const life::PeriodReport& r) {
  return Json{{"period", r.period},
              {"motion", motion_json(r.motion)},
              {"exact", r.exact()},
              {"residue", cells_json(r.residue)}};
}

std::string render_output(const RunReport& r, const Options& o) {
  if (o.json) {
    Json doc;
    doc["command"] = r.command;
    doc["input"] = r.input;
    doc["ok"] = r.ok;
    doc["result"] = r.result;
    doc["trace"] = r.trace;
    if (o.timing) doc["timing_ms"] = r.millis;
    return doc.dump(2) + "\n";
  }
  std::string out = r.text;
  if (!out.empty() && out.back() != '\n') out += '\n';
  if (o.timing) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.millis;
    out += "time: " + t.str() + " ms\n";
  }
  return out;
}

}  // namespace symbio::cli
