#include "registry.hpp"

#include "nodalsplit/errors.hpp"

namespace nodalsplit::app {

namespace {

std::vector<ExampleRecord> build() {
  std::vector<ExampleRecord> out;
  const std::string bound_evidence_6 = "bound 12 < ";

  {
    ExampleRecord e;
    e.id = "split6";
    e.title = "6-nodal sextic, split of type (3,3)";
    e.pieces = {{"c2", "x*y+y*z+z*x"}, {"c3", "x^3+y^3+z^3"}};
    e.curve = "(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2";
    e.conic = "z^2-4*x*y";
    e.nodes = R"([{"minpoly": "a^6+3*a^5+3*a^4+a^3+3*a^2+3*a+1", "point": ["a", "-a^5-2*a^4-a^3-3*a-1", "1"]}])";
    e.cn = NamedForm{"c3", "x^3+y^3+z^3"};
    e.cn1 = NamedForm{"c2", "x*y+y*z+z*x"};
    e.outcome = SplitOutcome::kSplit;
    e.m = 3;
    e.n = 3;
    e.types = {{3, 3, TypeStatus::kSplit, ""},
               {2, 4, TypeStatus::kExcludedByBound, bound_evidence_6 + "14"},
               {1, 5, TypeStatus::kExcludedByBound, bound_evidence_6 + "20"}};
    out.push_back(e);
  }
  {
    ExampleRecord e;
    e.id = "nonsplit6a";
    e.title = "6-nodal sextic from four lines, non-splitting";
    e.pieces = {{"c3", "2*x^3-x^2*y+3*x^2*z-2*x*y^2-4*x*z^2+y^3+y*z^2"},
                {"l1*l2*l3*l4", "z*(x-y)*(2*x-y)*(x+y-2*z)"}};
    e.curve = "(2*x^3-x^2*y+3*x^2*z-2*x*y^2-4*x*z^2+y^3+y*z^2)^2-z*(x-y)*(2*x-y)*(x+y-2*z)*(z^2-4*x*y)";
    e.conic = "z^2-4*x*y";
    e.nodes = "[[1,1,0],[1,2,0],[1,-1,0],[0,0,1],[1,1,1],[2,4,3]]";
    e.outcome = SplitOutcome::kNonSplitting;
    e.types = {{3, 3, TypeStatus::kExcludedByDimension, "no conic through the 6 nodes"},
               {2, 4, TypeStatus::kExcludedByBound, bound_evidence_6 + "14"},
               {1, 5, TypeStatus::kExcludedByBound, bound_evidence_6 + "20"}};
    out.push_back(e);
  }
  {
    ExampleRecord e;
    e.id = "nonsplit6b";
    e.title = "6-nodal sextic with nodes in general position, non-splitting";
    e.pieces = {{"c3''", "3328*x^3+1392*x^2*y-672*x^2*z+180*x*y^2-516*x*y*z-180*x*z^2+10*y^3-33*y^2*z-45*y*z^2"},
                {"c4''", "10496*x^4+6272*x^3*y-2528*x^3*z+1200*x^2*y^2-912*x^2*y*z+1176*x^2*z^2+80*x*y^3"
                         "-90*x*y^2*z+246*x*y*z^2+2*y^4-5*y^3*z+15*y^2*z^2"}};
    e.curve = "(c3'')^2-432*(z^2-4*x*y)*(c4'')";
    e.conic = "z^2-4*x*y";
    e.nodes = "[[0,0,1],[0,3,2],[-1,4,0],[-1,10,6],[-1,16,8],[-3,36,28]]";
    e.correction = "node (-3:36:38) of the source list is not on the curve; (-3:36:28) is the node";
    e.outcome = SplitOutcome::kNonSplitting;
    e.types = {{3, 3, TypeStatus::kExcludedByDimension, "no conic through the 6 nodes"},
               {2, 4, TypeStatus::kExcludedByBound, bound_evidence_6 + "14"},
               {1, 5, TypeStatus::kExcludedByBound, bound_evidence_6 + "20"}};
    out.push_back(e);
  }
  {
    ExampleRecord e;
    e.id = "split7-33";
    e.title = "7-nodal sextic, split of type (3,3)";
    e.pieces = {{"c2", "z^2-4*x*y"}, {"c3", "y^2*z-3*x*y*z+z^3-x^2*z"}, {"c4", "(z^2-x*y-y^2+x^2)^2"}};
    e.curve = "(y^2*z-3*x*y*z+z^3-x^2*z)^2-(z^2-4*x*y)*(z^2-x*y-y^2+x^2)^2";
    e.conic = "z^2-4*x*y";
    e.nodes = R"([[0,0,1],
      {"minpoly": "4*a^4+2*a^2-1", "point": ["a", "2*a^3+a", "1"]},
      {"minpoly": "b^2-b-1", "point": ["b", "1", "0"]}])";
    e.cn = NamedForm{"c3", "y^2*z-3*x*y*z+z^3-x^2*z"};
    e.cn1 = NamedForm{"sqrt(c4)", "z^2-x*y-y^2+x^2"};
    e.node_conic = "z^2-x*y-y^2+x^2";
    e.outcome = SplitOutcome::kSplit;
    e.m = 3;
    e.n = 3;
    e.types = {{3, 3, TypeStatus::kSplit, ""}, {1, 5, TypeStatus::kExcludedByBound, "bound 14 < 20"}};
    out.push_back(e);
  }
  {
    ExampleRecord e;
    e.id = "split7-24";
    e.title = "7-nodal sextic from a syzygetic quartic surface, split of type (2,4)";
    e.surface = true;
    e.pieces = {{"f1", "x*w-y^2+z^2"}, {"f2", "y*w-x^2+z^2"}, {"f3", "z*w-x^2+y^2"}};
    e.curve = "(f3)^2-4*(f1)*(f2)";
    e.nodes = "[[0,0,0,1],[0,1,1,-1],[-1,0,1,1],[1,1,0,1],[1,1,1,0],[-1,1,1,0],[1,-1,1,0],[1,1,-1,0]]";
    e.outcome = SplitOutcome::kSplit;
    e.m = 2;
    e.n = 4;
    e.types = {{3, 3, TypeStatus::kExcludedByDimension, ""}, {2, 4, TypeStatus::kSplit, ""},
               {1, 5, TypeStatus::kExcludedByBound, "bound 14 < 20"}};
    e.criterion = Criterion24::kHolds;
    e.factor_a2 = "-y^2+z^2";
    e.factor_b2 = "-x^2+z^2";
    e.factor_c2 = "-x^2+y^2";
    e.misprint_a1 = "x";
    e.correction =
        "the second factor of the pullback is taken with a2 in its last term; with a1 it is not bihomogeneous";
    out.push_back(e);
  }
  {
    ExampleRecord e;
    e.id = "nonsplit7";
    e.title = "7-nodal sextic, non-splitting";
    e.pieces = {{"c2'", "-61*x^2+20*x*y+4*x*z+4*y^2-4*y*z+z^2"},
                {"c3'", "-13*x^2*y+168*x^2*z-74*x*y*z-8*x*z^2-8*y^2*z+7*y*z^2"},
                {"c4'", "x^2*y^2+16*x^2*y*z-112*x^2*z^2-4*x*y^2*z+64*x*y*z^2-y^2*z^2"}};
    e.curve = "(c3')^2-4*(c2')*(c4')";
    e.conic = "(c2')";
    e.nodes = "[[0,0,1],[0,1,0],[1,0,0],[1,1,1],[1,-2,1],[-1,6,3],[1,2,-3]]";
    e.outcome = SplitOutcome::kNonSplitting;
    e.types = {{3, 3, TypeStatus::kExcludedByDimension, "no conic through any 6 of the 7 nodes"},
               {2, 4, TypeStatus::kExcludedByDimension, ""},
               {1, 5, TypeStatus::kExcludedByBound, "bound 14 < 20"}};
    e.criterion = Criterion24::kFailsB;
    e.quartic_dim = 1;
    e.six_node_conics_empty = true;
    out.push_back(e);
  }
  return out;
}

}  // namespace

const std::vector<ExampleRecord>& example_registry() {
  static const std::vector<ExampleRecord> registry = build();
  return registry;
}

std::string expand(const ExampleRecord& e, std::string text) {
  for (const auto& piece : e.pieces) {
    const std::string key = "(" + piece.name + ")";
    for (std::size_t at = text.find(key); at != std::string::npos; at = text.find(key, at + piece.text.size() + 2))
      text.replace(at, key.size(), "(" + piece.text + ")");
  }
  return text;
}

const ExampleRecord& find_example(const std::string& id) {
  for (const auto& e : example_registry())
    if (e.id == id) return e;
  std::string known;
  for (const auto& e : example_registry()) known += (known.empty() ? "" : ", ") + e.id;
  throw Error(ErrorCode::kUnknownExample, "unknown example '" + id + "' (known: " + known + ")");
}

}  // namespace nodalsplit::app
