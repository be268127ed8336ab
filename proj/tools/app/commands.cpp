#include "commands.hpp"

#include <algorithm>

#include "nodalsplit/conic.hpp"
#include "nodalsplit/cover.hpp"
#include "nodalsplit/curve.hpp"
#include "nodalsplit/errors.hpp"
#include "nodalsplit/linsys.hpp"
#include "nodalsplit/quartic.hpp"
#include "nodalsplit/split.hpp"
#include "nodes_io.hpp"
#include "registry.hpp"

namespace nodalsplit::app {

namespace {

using Json = nlohmann::ordered_json;

std::string str(int v) { return std::to_string(v); }

int node_total(const std::vector<ProjPoint>& nodes) {
  int r = 0;
  for (const auto& p : nodes) r += p.orbit_size();
  return r;
}

std::string outcome_string(SplitOutcome o, int m, int n) {
  switch (o) {
    case SplitOutcome::kSplit: return "Split(" + str(m) + "," + str(n) + ")";
    case SplitOutcome::kNonSplitting: return "NonSplitting";
    case SplitOutcome::kUndetermined: return "Undetermined";
  }
  return "?";
}

std::string type_string(TypeStatus status, const std::string& evidence) {
  std::string out = to_string(status);
  if (!evidence.empty()) out += ": " + evidence;
  return out;
}

std::string contact_string(const ContactProfile& p) {
  bool tangent = p.kind == ContactKind::kSimpleContact || p.kind == ContactKind::kEvenContact;
  return std::string(to_string(p.kind)) + ", " + str(p.tangent_count) + (tangent ? " tangent points" : " intersection points");
}

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out + "}";
}

Json nodes_json(const std::vector<ProjPoint>& nodes) {
  Json out = Json::array();
  for (const auto& p : nodes) out.push_back(point_to_json(p));
  return out;
}

Json certificate_json(const SplitCertificate& c) {
  Json j;
  j["m"] = c.m;
  j["n"] = c.n;
  j["line"] = c.line ? Json(c.line->to_string()) : Json(nullptr);
  j["delta"] = c.delta.to_string();
  j["unit"] = c.unit.to_string();
  j["cn"] = c.cn.to_string();
  j["cn1"] = c.cn1.to_string();
  return j;
}

Json factor_json(const PullbackFactor& f) {
  Json j;
  j["field"] = f.e == 0 ? "Q" : "Q(sqrt(" + str(f.e) + "))";
  j["a"] = f.a.to_string();
  if (f.e != 0) j["a_sqrt"] = f.a_sqrt.to_string();
  j["unit"] = f.unit_rat.to_string();
  if (f.e != 0) j["unit_sqrt"] = f.unit_sqrt.to_string();
  return j;
}

Json split_json(const SplittingReport& sr) {
  Json j;
  j["outcome"] = outcome_string(sr.outcome, sr.m, sr.n);
  j["types"] = Json::array();
  for (const auto& t : sr.types) {
    Json tj;
    tj["type"] = "(" + str(t.m) + "," + str(t.n) + ")";
    tj["status"] = to_string(t.status);
    tj["evidence"] = t.evidence;
    if (t.dims) {
      tj["alpha"] = t.dims->alpha;
      Json subs = Json::array();
      for (std::size_t w : t.dims->witnesses) {
        const auto& s = t.dims->subsets[w];
        Json sj;
        sj["orbits"] = s.orbits;
        sj["dim_cn"] = s.dim_cn;
        sj["dim_cn1"] = s.dim_cn1;
        subs.push_back(sj);
      }
      tj["witnesses"] = subs;
    }
    if (t.criterion) {
      Json cj;
      cj["verdict"] = to_string(t.criterion->verdict);
      cj["conic_dim"] = t.criterion->conic_dim;
      cj["quartic_dim"] = t.criterion->quartic_dim;
      cj["detail"] = t.criterion->detail;
      tj["criterion"] = cj;
    }
    if (t.factor) tj["factor"] = factor_json(*t.factor);
    if (t.certificate) tj["certificate"] = certificate_json(*t.certificate);
    j["types"].push_back(tj);
  }
  j["notes"] = sr.notes;
  return j;
}

const TypeResult* find_type(const SplittingReport& sr, int m, int n) {
  for (const auto& t : sr.types)
    if (t.m == m && t.n == n) return &t;
  return nullptr;
}

void check_nodes(Report& rep, const Form& f, const std::vector<ProjPoint>& nodes, const std::string& name) {
  int ok = 0;
  std::string first_bad;
  for (const auto& p : nodes) {
    NodeCheck c = verify_node(f, p);
    if (c.node) {
      ok += p.orbit_size();
      continue;
    }
    if (first_bad.empty())
      first_bad = describe_point(p) + (!c.on_curve ? " is not on the locus" : !c.singular ? " is not singular" : " is singular but not a node");
  }
  std::string observed = str(ok) + " of " + str(node_total(nodes)) + " points are nodes";
  if (!first_bad.empty()) observed += "; " + first_bad;
  rep.expect(name, first_bad.empty(), observed);
}

void check_completeness(Report& rep, const Form& gamma, const std::vector<ProjPoint>& nodes, int seed,
                        const std::string& name, bool contradiction_on_failure) {
  try {
    CompletenessResult r = check_singular_locus(gamma, nodes, seed);
    if (r.complete)
      rep.add(name, CheckStatus::kPass, "no other singular points (shear " + str(r.shear_index) + ")");
    else
      rep.add(name, contradiction_on_failure ? CheckStatus::kFail : CheckStatus::kInfo, r.reason);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kShearExhausted) throw;
    rep.add(name, CheckStatus::kUndetermined, e.what());
  }
}

void compare_split(Report& rep, const SplittingReport& sr, const ExampleRecord& e) {
  rep.expect("splitting type", outcome_string(sr.outcome, sr.m, sr.n), outcome_string(e.outcome, e.m, e.n));
  for (const auto& claim : e.types) {
    std::string name = "type (" + str(claim.m) + "," + str(claim.n) + ")";
    const TypeResult* t = find_type(sr, claim.m, claim.n);
    std::string expected = type_string(claim.status, claim.evidence);
    if (!t) {
      rep.add(name, CheckStatus::kFail, "not examined", expected);
      continue;
    }
    bool ok = t->status == claim.status && (claim.evidence.empty() || t->evidence == claim.evidence);
    rep.add(name, ok ? CheckStatus::kPass : CheckStatus::kFail, type_string(t->status, t->evidence), expected);
  }
  for (const auto& t : sr.types)
    if (t.certificate) rep.info("certificate", "cn = " + t.certificate->cn.to_string() + ", cn1 = " + t.certificate->cn1.to_string());
  for (const auto& n : sr.notes) rep.notes.push_back(n);
}

// Subsets of whole orbits totalling k points.
std::vector<std::vector<std::size_t>> orbit_subsets(const std::vector<ProjPoint>& nodes, int k) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t n = nodes.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    int size = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) {
        size += nodes[i].orbit_size();
        idx.push_back(i);
      }
    if (size == k) out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int conic_dimension(const std::vector<ProjPoint>& nodes, const std::vector<std::size_t>& idx) {
  FormSpace conics = FormSpace::plane(2);
  std::vector<LinCondition> conds;
  for (std::size_t i : idx) conds.push_back(cond_point(conics, nodes[i]));
  return system_solve(conics, conds).dimension;
}

void verify_plane(Report& rep, const ExampleRecord& e, const RunOptions& opts) {
  Form gamma = parse_form(expand(e, e.curve), plane_vars());
  Form q = parse_form(expand(e, e.conic), plane_vars());
  std::vector<ProjPoint> nodes = parse_nodes(e.nodes, 3);
  int r = node_total(nodes);
  rep.data["curve"] = gamma.to_string();
  rep.data["conic"] = q.to_string();
  rep.data["nodes"] = nodes_json(nodes);

  rep.expect("degree", str(gamma.degree()), "6");
  rep.expect("conic class", to_string(classify_conic(q)), "Smooth");
  check_nodes(rep, gamma, nodes, "nodes");
  check_completeness(rep, gamma, nodes, opts.seed, "singular locus", true);

  if (e.cn && e.cn1) {
    Form cn = parse_form(e.cn->text, plane_vars()), cn1 = parse_form(e.cn1->text, plane_vars());
    bool same = cn * cn - q * cn1 * cn1 == gamma;
    rep.expect("certificate identity", same,
               e.cn->name + "^2 - delta*" + e.cn1->name + "^2 " + (same ? "equals" : "differs from") + " the curve");
    SplitCertificate cert{e.m, e.n, std::nullopt, q, Rat(1), cn, cn1};
    bool ok = verify_certificate(gamma, q, cert);
    rep.expect("certificate conditions", ok, ok ? "coprime, reduced, identity holds" : "rejected");
  }
  if (!e.node_conic.empty()) {
    Form c = parse_form(e.node_conic, plane_vars());
    int on = 0;
    for (const auto& p : nodes)
      if (vanishes_at(c, p)) on += p.orbit_size();
    std::string tail = " nodes on " + c.to_string() + " (" + to_string(classify_conic(c)) + ")";
    rep.expect("nodes on a conic", str(on) + tail, str(r - 1) + " nodes on " + c.to_string() + " (Smooth)");
  }

  SplitFrame frame = make_frame(gamma, q, nodes, opts.height);
  rep.expect("contact", contact_string(frame.contact), "SimpleContact, " + str(e.tangent_count) + " tangent points");
  bool irreducible = irreducibility_sextic(gamma, nodes);
  rep.expect("irreducible", irreducible, irreducible ? "no line through 5 nodes" : "a line passes through 5 nodes");

  if (r == 6 && e.outcome == SplitOutcome::kNonSplitting) {
    std::vector<std::size_t> all(nodes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    rep.expect("conics through the nodes", "dim " + str(conic_dimension(nodes, all)), "dim -1");
  }
  if (e.six_node_conics_empty) {
    auto subsets = orbit_subsets(nodes, 6);
    int empty = 0;
    for (const auto& s : subsets)
      if (conic_dimension(nodes, s) < 0) ++empty;
    rep.expect("six-node conic systems", str(empty) + " of " + str(static_cast<int>(subsets.size())) + " empty",
               str(static_cast<int>(subsets.size())) + " of " + str(static_cast<int>(subsets.size())) + " empty");
  }
  if (e.criterion) {
    Criterion24Result c = criterion_24_7nodal(frame);
    rep.expect("criterion (2,4)", to_string(c.verdict), to_string(*e.criterion));
    if (e.quartic_dim >= 0) rep.expect("quartic system", "dim " + str(c.quartic_dim), "dim " + str(e.quartic_dim));
  }

  SplittingReport sr = splitting_type(frame, SplitOptions{opts.height, {}});
  compare_split(rep, sr, e);
  rep.data["splitting"] = split_json(sr);
}

void verify_surface(Report& rep, const ExampleRecord& e, const RunOptions& opts) {
  Form surface = parse_form(expand(e, e.curve), space_vars());
  std::vector<ProjPoint> nodes = parse_nodes(e.nodes, 4);
  rep.data["surface"] = surface.to_string();
  rep.data["nodes"] = nodes_json(nodes);

  check_nodes(rep, surface, nodes, "surface nodes");
  try {
    CompletenessResult c = surface_nodes_complete(surface, nodes, opts.seed);
    rep.add("surface singular locus", c.complete ? CheckStatus::kPass : CheckStatus::kUndetermined,
            c.complete ? "no other singular points" : c.reason);
  } catch (const Error& ex) {
    if (ex.code() != ErrorCode::kShearExhausted) throw;
    rep.add("surface singular locus", CheckStatus::kUndetermined, ex.what());
  }
  GeneralPositionP3 gp = general_position_p3(nodes);
  rep.expect("general position", gp ? std::string("general") : to_string(gp.kind) + std::string(" ") + index_list(gp.indices),
             "general");

  SyzygeticResult sz = syzygetic_test(surface, nodes);
  bool syz_ok = sz.syzygetic && sz.system && sz.system->dimension == 2 &&
                std::find(sz.subset.begin(), sz.subset.end(), 0U) != sz.subset.end();
  rep.expect("syzygetic", syz_ok,
             sz.syzygetic ? "dim " + str(sz.system->dimension) + " quadric system through nodes " + index_list(sz.subset)
                          : "not detected");
  if (sz.syzygetic) {
    Json sj;
    sj["assigned_nodes"] = sz.subset;
    Json qs = Json::array();
    for (const auto& qd : sz.quadrics) qs.push_back(qd.to_string());
    sj["quadrics"] = qs;
    Json tern = Json::array();
    for (const auto& t : sz.ternary) tern.push_back(t.to_string());
    sj["ternary_form"] = tern;
    rep.data["syzygetic"] = sj;
  }

  CenteredSurface cs = center_at_node(surface, nodes[0]);
  QuarticProjection pr = project_quartic(cs.quartic, opts.height);
  rep.data["g2"] = cs.quartic.g2.to_string();
  rep.data["g3"] = cs.quartic.g3.to_string();
  rep.data["g4"] = cs.quartic.g4.to_string();
  rep.data["sextic"] = pr.gamma.to_string();
  rep.expect("branch conic", pr.delta.to_string(), delta2().to_string());
  rep.expect("contact", pr.contact ? contact_string(*pr.contact) : "no rational point on the conic",
             "SimpleContact, 6 tangent points");

  std::vector<ProjPoint> images;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    ProjPoint moved = nodes[i].transformed(cs.m);
    const auto& c = moved.coords();
    images.emplace_back(std::vector<NFElem>{c[0], c[1], c[2]});
  }
  rep.data["sextic_nodes"] = nodes_json(images);
  check_nodes(rep, pr.gamma, images, "sextic nodes");
  check_completeness(rep, pr.gamma, images, opts.seed, "sextic singular locus", true);
  bool irreducible = irreducibility_sextic(pr.gamma, images);
  rep.expect("irreducible", irreducible, irreducible ? "no line through 5 nodes" : "a line passes through 5 nodes");

  const CoverContext& cc = cover_context();
  auto pull = [&](const std::string& text) { return parse_form(text, plane_vars()).substitute(cc.map); };
  BiForm s = BiForm::variable(0), t = BiForm::variable(1), u = BiForm::variable(2), v = BiForm::variable(3);
  BiForm a = s * s * pull(e.factor_b2) - s * t * pull(e.factor_c2) + t * t * pull(e.factor_a2);
  // report the member of {A, σA} with the smaller first degree
  if (a.d1() > a.d2()) a = a.swap_factors();
  BiForm f = pullback_curve(pr.gamma);
  Rat ratio;
  bool prop = (a * a.swap_factors()).proportional_to(f, &ratio);
  rep.expect("pullback product", prop,
             prop ? "A*sigma(A) = " + ratio.to_string() + " * pullback, A of bidegree (" + str(a.d1()) + "," + str(a.d2()) + ")"
                  : "A*sigma(A) is not proportional to the pullback");
  BiForm lead = u * u * pull(e.factor_b2), last = v * v * pull(e.misprint_a1);
  bool misprint_form = lead.d1() == last.d1() && lead.d2() == last.d2();
  rep.expect("second factor with a1", !misprint_form,
             misprint_form ? "bihomogeneous"
                           : "terms of bidegree (" + str(lead.d1()) + "," + str(lead.d2()) + ") and (" + str(last.d1()) +
                                 "," + str(last.d2()) + "); not a form");
  rep.data["pullback_factor"] = a.to_string();

  SplitFrame frame = make_frame(pr.gamma, pr.delta, images, opts.height);
  if (e.criterion) {
    Criterion24Result c = criterion_24_7nodal(frame);
    rep.expect("criterion (2,4)", to_string(c.verdict), to_string(*e.criterion));
  }
  SplittingReport sr = splitting_type(frame, SplitOptions{opts.height, {}});
  compare_split(rep, sr, e);
  rep.data["splitting"] = split_json(sr);

  if (const TypeResult* t24 = find_type(sr, 2, 4); t24 && t24->factor && t24->factor->e == 0) {
    const BiForm& found = t24->factor->a;
    bool match = found.proportional_to(a) || found.proportional_to(a.swap_factors());
    rep.expect("factor found by search", match, match ? "matches A up to a scalar and the involution" : found.to_string());
  }
  const TypeResult* t33 = find_type(sr, 3, 3);
  bool split33 = t33 && t33->status == TypeStatus::kSplit;
  auto cfg = detect_33_configuration(surface, nodes, 0);
  rep.expect("(3,3) configuration", cfg.has_value() == split33,
             cfg ? "six nodes " + index_list(cfg->nodes) + " on a conic in " + cfg->hyperplane.to_string()
                 : "no six nodes on a conic in a hyperplane");
}

Form read_plane(const std::string& arg) { return parse_form(file_or_text(arg), plane_vars()); }

Report analyze_impl(const std::string& command, const std::string& curve, const std::string& conic,
                    const std::optional<std::string>& nodes_arg, const RunOptions& opts) {
  Report rep;
  rep.command = command;
  Form gamma = read_plane(curve), q = read_plane(conic);
  rep.data["curve"] = gamma.to_string();
  rep.data["conic"] = q.to_string();
  rep.info("degree", str(gamma.degree()));
  if (q.degree() != 2) throw Error(ErrorCode::kDegreeMismatch, "the conic must have degree 2");
  ConicClass cls = classify_conic(q);
  rep.info("conic class", to_string(cls));
  bool reduced = reduced_by_line_test(gamma);
  rep.info("reduced", reduced ? "yes" : "no squarefree restriction to a test line; likely a multiple component");

  std::optional<ContactProfile> contact;
  if (cls == ConicClass::kSmooth) {
    if (auto base = find_rational_point(q, opts.height)) {
      contact = contact_profile(gamma, q, parametrize_conic(q, *base));
      rep.info("contact", contact_string(*contact));
    } else {
      rep.add("contact", CheckStatus::kUndetermined, "no rational point of height <= " + str(opts.height) + " on the conic");
    }
  }
  if (!nodes_arg) return rep;

  std::vector<ProjPoint> nodes = parse_nodes(file_or_text(*nodes_arg), 3);
  rep.data["nodes"] = nodes_json(nodes);
  check_nodes(rep, gamma, nodes, "nodes");
  check_completeness(rep, gamma, nodes, opts.seed, "singular locus", true);
  int r = node_total(nodes);
  if (gamma.degree() == 6 && r <= 7) {
    bool irr = irreducibility_sextic(gamma, nodes);
    rep.info("irreducible", irr ? "yes: no line through 5 nodes" : "no: a line passes through 5 nodes");
  }
  if (cls != ConicClass::kSmooth || !contact) return rep;
  if (contact->kind != ContactKind::kEvenContact && contact->kind != ContactKind::kSimpleContact) {
    rep.info("splitting type", "not examined: the conic is not an even contact conic");
    return rep;
  }
  SplittingReport sr = splitting_type(gamma, q, nodes, SplitOptions{opts.height, {}});
  rep.add("splitting type", sr.outcome == SplitOutcome::kUndetermined ? CheckStatus::kUndetermined : CheckStatus::kInfo,
          outcome_string(sr.outcome, sr.m, sr.n));
  for (const auto& t : sr.types)
    rep.info("type (" + str(t.m) + "," + str(t.n) + ")", type_string(t.status, t.evidence));
  for (const auto& t : sr.types)
    if (t.certificate) rep.info("certificate", "cn = " + t.certificate->cn.to_string() + ", cn1 = " + t.certificate->cn1.to_string());
  for (const auto& n : sr.notes) rep.notes.push_back(n);
  rep.data["splitting"] = split_json(sr);
  return rep;
}

}  // namespace

Report verify_example(const std::string& id, const RunOptions& opts) {
  const ExampleRecord& e = find_example(id);
  Report rep;
  rep.command = "verify-example";
  rep.subject = e.id;
  rep.data["title"] = e.title;
  Json pieces;
  for (const auto& p : e.pieces) pieces[p.name] = p.text;
  rep.data["pieces"] = pieces;
  if (!e.correction.empty()) rep.notes.push_back("data correction: " + e.correction);
  if (e.surface)
    verify_surface(rep, e, opts);
  else
    verify_plane(rep, e, opts);
  return rep;
}

Report analyze(const std::string& curve, const std::string& conic, const std::optional<std::string>& nodes,
               const RunOptions& opts) {
  return analyze_impl("analyze", curve, conic, nodes, opts);
}

Report split_type(const std::string& curve, const std::string& conic, const std::string& nodes,
                  const RunOptions& opts) {
  return analyze_impl("split-type", curve, conic, nodes, opts);
}

Report pullback(const std::string& curve, const RunOptions& opts) {
  (void)opts;
  Report rep;
  rep.command = "pullback";
  Form gamma = read_plane(curve);
  BiForm f = pullback_curve(gamma);
  rep.data["curve"] = gamma.to_string();
  rep.data["pullback"] = f.to_string();
  rep.info("pullback", f.to_string());
  rep.info("bidegree", "(" + str(f.d1()) + "," + str(f.d2()) + ")");
  bool invariant = involution_biform(f) == f;
  rep.expect("involution invariant", invariant, invariant ? "yes" : "no");
  auto back = descend(f);
  bool descends = back && *back == gamma;
  rep.expect("descends to the curve", descends, descends ? "yes" : "no");

  Json factors = Json::array();
  int d = gamma.degree();
  for (int m = d / 2; m >= 1; --m) {
    int n = d - m;
    std::string name = "factor (" + str(m) + "," + str(n) + ")";
    try {
      auto fac = factor_pullback(f, m, n);
      if (fac) {
        rep.info(name, "A = " + fac->a.to_string() + (fac->e ? " + sqrt(" + str(fac->e) + ")*(" + fac->a_sqrt.to_string() + ")" : ""));
        Json fj = factor_json(*fac);
        fj["type"] = "(" + str(m) + "," + str(n) + ")";
        factors.push_back(fj);
      } else {
        rep.info(name, "none found");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSearchBudgetExceeded) throw;
      rep.info(name, e.what());
    }
  }
  rep.data["factors"] = factors;
  return rep;
}

Report project_quartic(const std::string& g2, const std::string& g3, const std::string& g4, const RunOptions& opts) {
  Report rep;
  rep.command = "project-quartic";
  NodeCenteredQuartic x{read_plane(g2), read_plane(g3), read_plane(g4)};
  QuarticProjection pr = nodalsplit::project_quartic(x, opts.height);
  rep.data["surface"] = x.surface().to_string();
  rep.data["sextic"] = pr.gamma.to_string();
  rep.data["conic"] = pr.delta.to_string();
  rep.data["reduced"] = pr.reduced;
  rep.info("surface", x.surface().to_string());
  rep.info("branch sextic", pr.gamma.to_string());
  rep.info("branch conic", pr.delta.to_string());
  if (!pr.reduced) {
    rep.info("reduced", "NotReduced: the branch curve has a multiple component");
    return rep;
  }
  rep.info("reduced", "yes");
  if (pr.contact) {
    rep.info("contact", contact_string(*pr.contact));
    rep.data["contact"] = to_string(pr.contact->kind);
  } else {
    rep.add("contact", CheckStatus::kUndetermined, "no rational point of height <= " + str(opts.height) + " on g2");
  }
  return rep;
}

Report syzygetic(const std::string& surface_arg, const std::string& nodes_arg, const RunOptions& opts) {
  Report rep;
  rep.command = "syzygetic";
  Form surface = parse_form(file_or_text(surface_arg), space_vars());
  if (surface.degree() != 4) throw Error(ErrorCode::kDegreeMismatch, "the surface must be a quartic");
  std::vector<ProjPoint> nodes = parse_nodes(file_or_text(nodes_arg), 4);
  rep.data["surface"] = surface.to_string();
  rep.data["nodes"] = nodes_json(nodes);
  check_nodes(rep, surface, nodes, "nodes");
  try {
    CompletenessResult c = surface_nodes_complete(surface, nodes, opts.seed);
    rep.info("singular locus", c.complete ? "no other singular points" : "not certified: " + c.reason);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kShearExhausted) throw;
    rep.info("singular locus", std::string("not certified: ") + e.what());
  }
  bool all_rational = std::all_of(nodes.begin(), nodes.end(), [](const ProjPoint& p) { return p.is_rational(); });
  if (all_rational) {
    GeneralPositionP3 gp = general_position_p3(nodes);
    rep.info("general position", gp ? std::string("general") : to_string(gp.kind) + std::string(" ") + index_list(gp.indices));
  } else {
    rep.notes.push_back("only rational nodes enter the 8-subset search");
  }
  SyzygeticResult sz = syzygetic_test(surface, nodes);
  rep.data["syzygetic"] = sz.syzygetic;
  if (sz.syzygetic) {
    rep.info("syzygetic", "yes: dim " + str(sz.system->dimension) + " quadric system through nodes " + index_list(sz.subset));
    Json qs = Json::array();
    for (const auto& qd : sz.quadrics) qs.push_back(qd.to_string());
    rep.data["assigned_nodes"] = sz.subset;
    rep.data["quadrics"] = qs;
    Json tern = Json::array();
    for (const auto& t : sz.ternary) tern.push_back(t.to_string());
    rep.data["ternary_form"] = tern;
  } else {
    rep.info("syzygetic", "not detected");
  }
  return rep;
}

}  // namespace nodalsplit::app
