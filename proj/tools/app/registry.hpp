#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodalsplit/split.hpp"

namespace nodalsplit::app {

struct TypeClaim {
  int m = 0, n = 0;
  TypeStatus status = TypeStatus::kInconclusive;
  std::string evidence;  // empty: the status alone is compared
};

struct NamedForm {
  std::string name, text;
};

// Baked-in data for one worked example. Plane examples hold a sextic and its
// contact conic; the surface example holds a quartic in P³ and its nodes.
struct ExampleRecord {
  std::string id;
  std::string title;
  bool surface = false;

  std::vector<NamedForm> pieces;  // auxiliary forms, in the order they are defined
  std::string curve;              // sextic, or the quartic surface
  std::string conic;              // plane examples only
  std::string nodes;              // node file contents (JSON)
  std::string correction;         // where the stored data departs from the printed source

  std::optional<NamedForm> cn, cn1;  // claimed certificate c_n² − δ·c_{n−1}²
  std::string node_conic;            // conic through all but the rational node
  int tangent_count = 6;

  SplitOutcome outcome = SplitOutcome::kUndetermined;
  int m = 0, n = 0;
  std::vector<TypeClaim> types;
  std::optional<Criterion24> criterion;
  int quartic_dim = -1;  // claimed dimension of the (2,4) quartic system
  bool six_node_conics_empty = false;

  // Surface example: the pullback factor written through f_i = a1·w + a2 etc.
  std::string factor_a2, factor_b2, factor_c2, misprint_a1;
};

const std::vector<ExampleRecord>& example_registry();
// Replaces "(name)" by the parenthesized piece text.
std::string expand(const ExampleRecord& e, std::string text);
// Throws UnknownExample.
const ExampleRecord& find_example(const std::string& id);

}  // namespace nodalsplit::app
