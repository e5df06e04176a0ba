#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "popwilf/core.hpp"

namespace popwilf {

// One line per row: a filled dot at the 1, a middle dot on empty in-shape
// squares, plus the canonical text form as a legend line.
std::string render_ascii(const Transversal& t);

// Minimal static SVG: the shape's squares plus one circle per 1.
std::string render_svg(const Transversal& t);

// Command-line entry point; args excludes the program name.
// Exit codes: 0 success, 1 verification failure or internal check tripped,
// 2 invalid input or usage.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace popwilf
