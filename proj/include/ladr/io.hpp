#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ladr/gadgets.hpp"
#include "ladr/geometry.hpp"
#include "ladr/hitting.hpp"

namespace ladr {

// JSON documents carry exact rationals: integers, or strings "p" / "p/q".
// Decimal numbers are rejected unless lossy is set; with lossy they convert
// exactly from their binary value.

// {"rectangles": [{"id": string, "w": int, "h": int, "x": rational, "y": rational}, ...]}
Instance parse_instance_json(const std::string& text, bool lossy = false);
std::string format_instance_json(const Instance& instance);

// {"positions": [{"id": string, "x": rational, "y": rational}, ...]}
Layout parse_layout_json(const std::string& text, bool lossy = false);
std::string format_layout_json(const Layout& layout);

// [[x, y], ...]
PointSet parse_points_json(const std::string& text, bool lossy = false);
std::string format_points_json(const PointSet& points);

// {"horizontals": [y, ...], "verticals": [x, ...]}
LineSet parse_lines_json(const std::string& text, bool lossy = false);
std::string format_lines_json(const LineSet& lines);

// {"n", "m", "k", "epsilon_sep", "labels": [per-point group label, ...]}
std::string format_gadget_meta_json(const GadgetInstance& gadget);

// DIMACS CNF, exactly three literals per clause. Returns (n, clauses).
std::pair<int, std::vector<std::array<int, 3>>> parse_dimacs(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ladr
