// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "nodalsplit/binary_form.hpp"
#include "nodalsplit/conic.hpp"
#include "nodalsplit/cover.hpp"
#include "nodalsplit/errors.hpp"
#include "nodalsplit/linsys.hpp"
#include "nodalsplit/quartic.hpp"
#include "nodalsplit/split.hpp"
#include "testing.hpp"

namespace ns = nodalsplit;
using ns::Form;
using ns::Rat;
using ns::test::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;

  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

// The example report must pass and contain every listed check as PASS.
void example_passes(Outcome& out, const std::string& id, const std::vector<std::string>& checks) {
  ns::app::Report rep = ns::app::verify_example(id, {});
  out.need(rep.exit_code() == 0, id + " report verdict " + rep.verdict());
  std::map<std::string, ns::app::CheckStatus> seen;
  for (const auto& c : rep.checks) {
    if (c.status == ns::app::CheckStatus::kFail || c.status == ns::app::CheckStatus::kUndetermined)
      out.failures.push_back(id + ": " + c.name + " -> " + c.observed);
    if (!seen.count(c.name) || c.status != ns::app::CheckStatus::kPass) seen[c.name] = c.status;
  }
  for (const auto& name : checks) {
    auto it = seen.find(name);
    out.need(it != seen.end() && it->second == ns::app::CheckStatus::kPass, id + ": check '" + name + "' missing or not passing");
  }
}

ns::SplittingReport split_of(const std::string& id) {
  auto ex = ns::test::plane_example(id);
  return ns::splitting_type(ex.gamma, ex.conic, ex.nodes);
}

std::string outcome_text(const ns::SplittingReport& r) {
  if (r.outcome == ns::SplitOutcome::kSplit) return "Split(" + std::to_string(r.m) + "," + std::to_string(r.n) + ")";
  return ns::to_string(r.outcome);
}

const ns::TypeResult* type_of(const ns::SplittingReport& r, int m, int n) {
  for (const auto& t : r.types)
    if (t.m == m && t.n == n) return &t;
  return nullptr;
}

bool status_is(const ns::SplittingReport& r, int m, int n, ns::TypeStatus s) {
  const ns::TypeResult* t = type_of(r, m, n);
  return t && t->status == s;
}

Outcome criterion1() {
  Outcome out;
  example_passes(out, "split6", {"nodes", "singular locus", "certificate identity", "certificate conditions", "contact",
                                 "splitting type"});
  auto ex = ns::test::plane_example("split6");
  Form c3 = ns::test::plane("x^3+y^3+z^3"), c2 = ns::test::plane("x*y+y*z+z*x");
  out.need(c3 * c3 - ns::delta2() * c2 * c2 == ex.gamma, "certificate identity recomputed");
  out.need(ex.nodes.size() == 1 && ex.nodes[0].orbit_size() == 6, "one orbit of six nodes");
  out.need(ns::verify_node(ex.gamma, ex.nodes[0]).node, "orbit verifies as nodes");
  auto prof = ns::contact_profile(ex.gamma, ns::delta2(), ns::ConicParam::standard());
  out.need(prof.kind == ns::ContactKind::kSimpleContact && prof.tangent_count == 6, "SimpleContact with 6 tangent points");
  auto sr = split_of("split6");
  out.need(outcome_text(sr) == "Split(3,3)", "splitting type " + outcome_text(sr));
  return out;
}

// Six rational nodes, no conic through them, and the NonSplitting evidence shape.
void nonsplit6_shape(Outcome& out, const std::string& id) {
  auto ex = ns::test::plane_example(id);
  out.need(ns::test::orbit_total(ex.nodes) == 6, id + ": six nodes");
  ns::FormSpace conics = ns::FormSpace::plane(2);
  std::vector<ns::LinCondition> conds;
  for (const auto& p : ex.nodes) conds.push_back(ns::cond_point(conics, p));
  out.need(ns::system_solve(conics, conds).dimension == -1, id + ": conic system empty");
  auto sr = ns::splitting_type(ex.gamma, ex.conic, ex.nodes);
  out.need(sr.outcome == ns::SplitOutcome::kNonSplitting, id + ": outcome " + outcome_text(sr));
  out.need(status_is(sr, 2, 4, ns::TypeStatus::kExcludedByBound), id + ": (2,4) excluded by bound");
  out.need(status_is(sr, 1, 5, ns::TypeStatus::kExcludedByBound), id + ": (1,5) excluded by bound");
  out.need(status_is(sr, 3, 3, ns::TypeStatus::kExcludedByDimension), id + ": (3,3) excluded by the conic system");
}

Outcome criterion2() {
  Outcome out;
  example_passes(out, "nonsplit6a", {"nodes", "singular locus", "conics through the nodes", "contact", "splitting type",
                                     "type (2,4)", "type (1,5)", "type (3,3)"});
  nonsplit6_shape(out, "nonsplit6a");
  return out;
}

Outcome criterion3() {
  Outcome out;
  example_passes(out, "nonsplit6b", {"nodes", "singular locus", "conics through the nodes", "contact", "splitting type",
                                     "type (2,4)", "type (1,5)", "type (3,3)"});
  nonsplit6_shape(out, "nonsplit6b");
  auto ex = ns::test::plane_example("nonsplit6b");
  auto prof = ns::contact_profile(ex.gamma, ns::delta2(), ns::ConicParam::standard());
  out.need(ex.conic == ns::delta2() && prof.kind == ns::ContactKind::kSimpleContact, "SimpleContact against z^2-4xy");
  return out;
}

Outcome criterion4() {
  Outcome out;
  example_passes(out, "split7-33", {"nodes", "singular locus", "nodes on a conic", "certificate identity",
                                    "certificate conditions", "contact", "splitting type"});
  auto ex = ns::test::plane_example("split7-33");
  std::multiset<int> orbits;
  for (const auto& p : ex.nodes) orbits.insert(p.orbit_size());
  out.need(orbits == std::multiset<int>{1, 2, 4}, "orbits of sizes 1, 4, 2");
  Form c = ns::test::plane("z^2-x*y-y^2+x^2");
  int on = 0;
  for (const auto& p : ex.nodes) {
    out.need(ns::verify_node(ex.gamma, p).node, "node " + p.to_string());
    if (ns::vanishes_at(c, p)) on += p.orbit_size();
  }
  out.need(on == 6, "six nodes on z^2-xy-y^2+x^2");
  auto sr = split_of("split7-33");
  out.need(outcome_text(sr) == "Split(3,3)", "splitting type " + outcome_text(sr));
  return out;
}

Outcome criterion5() {
  Outcome out;
  example_passes(out, "split7-24", {"surface nodes", "general position", "syzygetic", "branch conic", "contact",
                                    "sextic nodes", "pullback product", "second factor with a1", "criterion (2,4)",
                                    "splitting type"});
  auto ex = ns::test::surface_example("split7-24");
  out.need(ex.nodes.size() == 8, "eight listed nodes");
  for (const auto& p : ex.nodes) out.need(ns::verify_surface_node(ex.surface, p).node, "surface node " + p.to_string());
  out.need(static_cast<bool>(ns::general_position_p3(ex.nodes)), "general position");
  auto sz = ns::syzygetic_test(ex.surface, ex.nodes);
  out.need(sz.syzygetic && sz.system && sz.system->dimension == 2, "quadric system of dimension 2");
  auto cs = ns::center_at_node(ex.surface, ex.nodes[0]);
  auto pr = ns::project_quartic(cs.quartic);
  out.need(pr.delta == ns::delta2(), "branch conic z^2-4xy");
  return out;
}

Outcome criterion6() {
  Outcome out;
  example_passes(out, "nonsplit7", {"nodes", "singular locus", "six-node conic systems", "contact", "criterion (2,4)",
                                    "quartic system", "splitting type"});
  auto ex = ns::test::plane_example("nonsplit7");
  out.need(ex.nodes.size() == 7, "seven rational nodes");
  for (const auto& p : ex.nodes) out.need(p.is_rational() && ns::verify_node(ex.gamma, p).node, "node " + p.to_string());
  auto frame = ns::make_frame(ex.gamma, ex.conic, ex.nodes);
  auto c = ns::criterion_24_7nodal(frame);
  out.need(c.verdict == ns::Criterion24::kFailsB, std::string("criterion verdict ") + ns::to_string(c.verdict));
  out.need(c.quartic_dim == 1, "quartic system dimension " + std::to_string(c.quartic_dim));
  auto sr = ns::splitting_type(frame);
  out.need(sr.outcome == ns::SplitOutcome::kNonSplitting, "outcome " + outcome_text(sr));
  return out;
}

Outcome criterion7() {
  Outcome out;
  auto a = split_of("split7-33"), c = split_of("nonsplit7");
  auto ex = ns::test::surface_example("split7-24");
  auto cs = ns::center_at_node(ex.surface, ex.nodes[0]);
  auto pr = ns::project_quartic(cs.quartic);
  std::vector<ns::ProjPoint> images;
  for (std::size_t i = 1; i < ex.nodes.size(); ++i) {
    ns::ProjPoint moved = ex.nodes[i].transformed(cs.m);
    const auto& m = moved.coords();
    images.emplace_back(std::vector<ns::NFElem>{m[0], m[1], m[2]});
  }
  auto b = ns::splitting_type(pr.gamma, pr.delta, images);
  std::set<std::string> outcomes{outcome_text(a), outcome_text(b), outcome_text(c)};
  out.need(outcomes == std::set<std::string>{"Split(3,3)", "Split(2,4)", "NonSplitting"},
           "outcomes " + outcome_text(a) + ", " + outcome_text(b) + ", " + outcome_text(c));
  return out;
}

// Compact re-run of the property suites; the full versions live in the gtest binary.
Outcome criterion8() {
  Outcome out;
  constexpr int kCases = 200, kConfigs = 50;
  auto suite = [&](const std::string& name, int cases, std::uint64_t seed, const std::function<bool(Rng&)>& body) {
    Rng rng(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i)
      if (!body(rng)) ++bad;
    out.need(bad == 0, name + ": " + std::to_string(bad) + " of " + std::to_string(cases) + " cases failed");
  };
  const auto& pv = ns::plane_vars();
  suite("pullback multiplicativity", kCases, 11, [&](Rng& rng) {
    Form f = ns::test::random_form(rng, pv, rng.range(0, 3), 6), g = ns::test::random_form(rng, pv, rng.range(0, 3), 6);
    return ns::pullback_curve(f * g) == ns::pullback_curve(f) * ns::pullback_curve(g);
  });
  suite("involution fixes pullbacks", kCases, 12, [&](Rng& rng) {
    ns::BiForm f = ns::pullback_curve(ns::test::random_form(rng, pv, rng.range(0, 6), 6));
    return ns::involution_biform(f) == f;
  });
  suite("branch conic pulls back to r^2", kCases, 13, [&](Rng& rng) {
    Form f = ns::test::random_form(rng, pv, rng.range(0, 4), 6);
    ns::BiForm r = ns::ramification_form();
    return ns::pullback_curve(ns::delta2() * f) == r * r * ns::pullback_curve(f);
  });
  suite("Euler identity", kCases, 14, [&](Rng& rng) {
    int d = rng.range(1, 6);
    Form f = ns::test::random_form(rng, pv, d, 7), sum(pv, d);
    for (int v = 0; v < 3; ++v) sum += Form::variable(pv, v) * f.partial(v);
    return sum == Rat(d) * f;
  });
  suite("square root of a square", kCases, 15, [&](Rng& rng) {
    ns::BinaryForm g = ns::test::random_binary(rng, rng.range(0, 6), 9);
    auto root = ns::binary_form_sqrt(g * g);
    return root && (*root == g || *root == -g);
  });
  suite("fraction-free rank", kCases, 16, [&](Rng& rng) {
    auto rows = static_cast<std::size_t>(rng.range(1, 12)), cols = static_cast<std::size_t>(rng.range(1, 15));
    ns::RatMatrix m = rng.coin(50) ? ns::test::random_matrix(rng, rows, cols, 20)
                                   : ns::test::random_low_rank(rng, rows, cols, static_cast<std::size_t>(rng.range(1, 5)), 9);
    return ns::eliminate(m, cols).rank == ns::test::naive_rank(m);
  });
  ns::FormSpace bi = ns::FormSpace::bi(2, 2);
  suite("(2,2) through 7 general points", kConfigs, 17, [&](Rng& rng) {
    std::vector<std::pair<ns::ProjPoint, ns::ProjPoint>> pts;
    do {
      pts.clear();
      for (int i = 0; i < 7; ++i)
        pts.push_back({ns::ProjPoint::of({1, rng.range(-9, 9)}), ns::ProjPoint::of({rng.range(1, 5), rng.range(-9, 9)})});
    } while (!ns::general_position_p1xp1(pts));
    std::vector<ns::LinCondition> conds;
    for (const auto& [a, b] : pts) conds.push_back(ns::cond_bipoint(bi, a, b));
    return ns::system_solve(bi, conds).dimension == 1;
  });
  ns::FormSpace quadrics = ns::FormSpace::space(2);
  suite("quadrics through 8 general points", kConfigs, 18, [&](Rng& rng) {
    std::vector<ns::ProjPoint> pts;
    do {
      pts.clear();
      for (int i = 0; i < 8; ++i) pts.push_back(ns::test::random_point(rng, 4, 6));
    } while (!ns::general_position_p3(pts));
    std::vector<ns::LinCondition> conds;
    for (const auto& p : pts) conds.push_back(ns::cond_point(quadrics, p));
    int dim = ns::system_solve(quadrics, conds).dimension;
    return dim >= 1 && dim <= 2;
  });
  return out;
}

Outcome criterion9() {
  Outcome out;
  auto ex = ns::test::plane_example("split6");
  Rng rng(909);
  for (int i = 0; i < 3; ++i) {
    ns::RatMatrix m;
    do m = ns::test::random_matrix(rng, 3, 3, 3);
    while (ns::test::naive_det(m).is_zero());
    ns::RatMatrix inv = ns::mat_inverse(m);
    // new point P' = M·P lies on γ' = γ∘M⁻¹
    Form gamma = ex.gamma.linear_change(inv), conic = ex.conic.linear_change(inv);
    std::vector<ns::ProjPoint> nodes;
    for (const auto& p : ex.nodes) nodes.push_back(p.transformed(m));
    try {
      auto sr = ns::splitting_type(gamma, conic, nodes);
      out.need(outcome_text(sr) == "Split(3,3)", "transform " + std::to_string(i) + ": " + outcome_text(sr));
    } catch (const ns::Error& e) {
      out.need(false, "transform " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"6-nodal split example", criterion1},
      {"6-nodal non-split example 1", criterion2},
      {"6-nodal non-split example 2", criterion3},
      {"7-nodal type (3,3) example", criterion4},
      {"7-nodal type (2,4) example", criterion5},
      {"7-nodal non-split example", criterion6},
      {"three 7-nodal outcomes are distinct", criterion7},
      {"property suites", criterion8},
      {"coordinate independence", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.need(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.ok) ++failed;
    std::printf("criterion %zu: %s  %s (%.1fs)\n", i + 1, out.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs);
    for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed;
}
