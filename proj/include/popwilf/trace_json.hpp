#pragma once

#include <array>
#include <string>
#include <vector>

#include "popwilf/bijection.hpp"

namespace popwilf {

// Wire form of one trace step, as serialized:
//   {"step":1,"case":"II","b":[[10,4],...],"before":{"1":1,...},"after":{"1":3,...}}
struct TraceStepWire {
  int step = 0;
  std::string case_tag;
  std::vector<std::array<int, 2>> b;
  std::vector<std::pair<int, int>> before;  // (row, col), ascending rows
  std::vector<std::pair<int, int>> after;

  friend bool operator==(const TraceStepWire&, const TraceStepWire&) = default;
};

TraceStepWire to_wire(const StepRecord& rec);

// JSON array of step records, two-space indented, trailing newline.
std::string trace_to_json(const Trace& trace);

std::vector<TraceStepWire> parse_trace_json(const std::string& text);

}  // namespace popwilf
