#include "nodes_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "nodalsplit/errors.hpp"

namespace nodalsplit::app {

namespace {

Error bad(const std::string& what) { return Error(ErrorCode::kInvalidArgument, "node file: " + what); }

Rat rational_entry(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Rat::parse(v.get<std::string>());
    } catch (const std::exception&) {
      throw bad("'" + v.get<std::string>() + "' is not a rational number");
    }
  }
  throw bad("coordinates must be integers or strings, got " + v.dump());
}

std::string orbit_variable(const std::string& minpoly) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < minpoly.size();) {
    if (std::isalpha(static_cast<unsigned char>(minpoly[i])) || minpoly[i] == '_') {
      std::size_t j = i;
      while (j < minpoly.size() && (std::isalnum(static_cast<unsigned char>(minpoly[j])) || minpoly[j] == '_')) ++j;
      names.insert(minpoly.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  if (names.size() != 1) throw bad("minimal polynomial '" + minpoly + "' must use exactly one variable");
  return *names.begin();
}

ProjPoint orbit_entry(const nlohmann::json& v, std::size_t dimension) {
  if (!v.contains("minpoly") || !v["minpoly"].is_string()) throw bad("orbit entry needs a string \"minpoly\"");
  if (!v.contains("point") || !v["point"].is_array()) throw bad("orbit entry needs a \"point\" array");
  std::string mp = v["minpoly"].get<std::string>();
  std::string var = orbit_variable(mp);
  FieldRef k = NumberField::create(QPoly(parse_univariate(mp, var)), var);
  if (k->degree() < 1) throw bad("minimal polynomial '" + mp + "' is constant");
  std::vector<NFElem> coords;
  for (const auto& c : v["point"]) {
    if (c.is_number_integer()) {
      coords.emplace_back(rational_entry(c));
    } else if (c.is_string()) {
      coords.push_back(k->from_poly(QPoly(parse_univariate(c.get<std::string>(), var))));
    } else {
      throw bad("orbit coordinates must be strings or integers, got " + c.dump());
    }
  }
  if (coords.size() != dimension)
    throw bad("point has " + std::to_string(coords.size()) + " coordinates, expected " + std::to_string(dimension));
  return ProjPoint(std::move(coords));
}

}  // namespace

std::vector<ProjPoint> parse_nodes(const nlohmann::json& doc, std::size_t dimension) {
  if (!doc.is_array()) throw bad("top level must be an array");
  std::vector<ProjPoint> out;
  for (const auto& v : doc) {
    if (v.is_array()) {
      std::vector<Rat> c;
      for (const auto& x : v) c.push_back(rational_entry(x));
      if (c.size() != dimension)
        throw bad("point has " + std::to_string(c.size()) + " coordinates, expected " + std::to_string(dimension));
      out.emplace_back(c);
    } else if (v.is_object()) {
      out.push_back(orbit_entry(v, dimension));
    } else {
      throw bad("entries must be arrays or objects, got " + v.dump());
    }
    bool all_zero = true;
    for (const auto& c : out.back().coords()) all_zero = all_zero && c.is_zero();
    if (all_zero) throw bad("the zero vector is not a point");
  }
  return out;
}

std::vector<ProjPoint> parse_nodes(const std::string& json_text, std::size_t dimension) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw bad(e.what());
  }
  return parse_nodes(doc, dimension);
}

nlohmann::ordered_json point_to_json(const ProjPoint& p) {
  nlohmann::ordered_json coords = nlohmann::ordered_json::array();
  for (const auto& c : p.coords()) coords.push_back(c.to_string());
  if (p.is_rational()) return coords;
  nlohmann::ordered_json out;
  out["minpoly"] = to_string(p.field()->minpoly(), p.field()->var());
  out["point"] = coords;
  return out;
}

std::string describe_point(const ProjPoint& p) {
  if (p.is_rational()) return p.to_string();
  return p.to_string() + " over " + to_string(p.field()->minpoly(), p.field()->var()) + " = 0";
}

std::string file_or_text(const std::string& arg) {
  std::error_code ec;
  if (arg.empty() || !std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace nodalsplit::app
