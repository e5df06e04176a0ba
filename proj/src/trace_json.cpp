#include "popwilf/trace_json.hpp"

#include <algorithm>

#include <json.hpp>

namespace popwilf {

TraceStepWire to_wire(const StepRecord& rec) {
  TraceStepWire wire;
  wire.step = rec.step;
  wire.case_tag = to_string(rec.case_tag);
  for (const Cell& c : rec.b) wire.b.push_back({c.row, c.col});
  for (const auto& [row, col] : rec.before) wire.before.push_back({row, col});
  for (const auto& [row, col] : rec.after) wire.after.push_back({row, col});
  return wire;
}

std::string trace_to_json(const Trace& trace) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const StepRecord& rec : trace.steps) {
    nlohmann::ordered_json j;
    j["step"] = rec.step;
    j["case"] = to_string(rec.case_tag);
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const Cell& c : rec.b) cells.push_back({c.row, c.col});
    j["b"] = std::move(cells);
    nlohmann::ordered_json before;
    for (const auto& [row, col] : rec.before) before[std::to_string(row)] = col;
    j["before"] = std::move(before);
    nlohmann::ordered_json after;
    for (const auto& [row, col] : rec.after) after[std::to_string(row)] = col;
    j["after"] = std::move(after);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<TraceStepWire> parse_trace_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(errc::syntax_error, std::string("trace JSON: ") + e.what());
  }
  if (!arr.is_array()) raise(errc::syntax_error, "trace JSON: expected an array");
  std::vector<TraceStepWire> out;
  for (const auto& j : arr) {
    TraceStepWire wire;
    wire.step = j.at("step").get<int>();
    wire.case_tag = j.at("case").get<std::string>();
    for (const auto& cell : j.at("b"))
      wire.b.push_back({cell.at(0).get<int>(), cell.at(1).get<int>()});
    for (const auto& [key, val] : j.at("before").items())
      wire.before.push_back({std::stoi(key), val.get<int>()});
    for (const auto& [key, val] : j.at("after").items())
      wire.after.push_back({std::stoi(key), val.get<int>()});
    std::sort(wire.before.begin(), wire.before.end());
    std::sort(wire.after.begin(), wire.after.end());
    out.push_back(std::move(wire));
  }
  return out;
}

}  // namespace popwilf
