#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nodalsplit/point.hpp"

namespace nodalsplit::app {

// Node file: a JSON array whose entries are rational coordinate lists
// ([1, "-2/3", 0]) or orbits {"minpoly": "b^2-b-1", "point": ["b", "1", "0"]}.
// The orbit's variable is the one identifier in its minimal polynomial.
// Throws Error(InvalidArgument) or a SyntaxError on malformed input.
std::vector<ProjPoint> parse_nodes(const std::string& json_text, std::size_t dimension);
std::vector<ProjPoint> parse_nodes(const nlohmann::json& doc, std::size_t dimension);

nlohmann::ordered_json point_to_json(const ProjPoint& p);
// "(a : a^2 : 1) over a^2-a-1 = 0" or "(1 : 0 : 2)".
std::string describe_point(const ProjPoint& p);

// Reads a file when the argument names one, otherwise returns it unchanged.
std::string file_or_text(const std::string& arg);

}  // namespace nodalsplit::app
