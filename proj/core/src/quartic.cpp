#include "nodalsplit/quartic.hpp"

#include <cstdint>
#include <functional>

#include "nodalsplit/errors.hpp"
#include "nodalsplit/factor.hpp"
#include "nodalsplit/matrix.hpp"

namespace nodalsplit {

namespace {

Form to_space(const Form& g) {
  TermMap t;
  for (const auto& [e, c] : g.terms()) t.emplace(Exponent{e[0], e[1], e[2], 0}, c);
  return Form(space_vars(), g.degree(), std::move(t));
}

Form w_power(unsigned k) { return Form::variable(space_vars(), 3).pow(k); }

// Coefficient of w^k as a plane form.
Form w_coefficient(const Form& f, unsigned k) {
  TermMap t;
  for (const auto& [e, c] : f.terms())
    if (e[3] == k) t.emplace(Exponent{e[0], e[1], e[2], 0}, c);
  return Form(plane_vars(), f.degree() - static_cast<int>(k), std::move(t));
}

void require_space(const Form& f, int degree, const char* what) {
  if (f.nvars() != 4) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be a form in x, y, z, w");
  if (f.degree() != degree)
    throw Error(ErrorCode::kDegreeMismatch, std::string(what) + " must have degree " + std::to_string(degree));
}

void require_plane(const Form& f, int degree, const char* what) {
  if (f.nvars() != 3) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be a form in x, y, z");
  if (f.degree() != degree && !f.is_zero())
    throw Error(ErrorCode::kDegreeMismatch, std::string(what) + " must have degree " + std::to_string(degree));
}

void check_centered(const NodeCenteredQuartic& x) {
  require_plane(x.g2, 2, "g2");
  require_plane(x.g3, 3, "g3");
  require_plane(x.g4, 4, "g4");
  if (x.g2.is_zero() || classify_conic(x.g2) != ConicClass::kSmooth)
    throw Error(ErrorCode::kNodeDegenerate, "g2 = " + x.g2.to_string() + " has rank < 3; (0:0:0:1) is not a node");
}

// Solves Σ c_i·columns[i] = rhs over Q.
std::optional<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& rhs) {
  std::size_t n = columns.size();
  std::vector<std::vector<Rat>> a(rhs.size(), std::vector<Rat>(n + 1));
  for (std::size_t r = 0; r < rhs.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = columns[c][r];
    a[r][n] = -rhs[r];
  }
  for (const auto& v : field_kernel<Rat>(std::move(a), n + 1)) {
    if (v[n].is_zero()) continue;
    Rat inv = Rat(1) / v[n];
    std::vector<Rat> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i] * inv;
    return out;
  }
  return std::nullopt;
}

std::vector<Rat> coefficient_vector(const Form& f, const std::vector<Exponent>& basis) {
  std::vector<Rat> out;
  for (const auto& e : basis) out.push_back(f.coeff(e));
  return out;
}

// num / den when den divides num exactly.
std::optional<Form> divide_exact(const Form& num, const Form& den) {
  int d = num.degree() - den.degree();
  if (d < 0) return std::nullopt;
  std::vector<Exponent> qb = monomial_basis(num.nvars(), d), nb = monomial_basis(num.nvars(), num.degree());
  std::vector<std::vector<Rat>> cols;
  for (const auto& e : qb) cols.push_back(coefficient_vector(Form::monomial(num.vars(), e) * den, nb));
  auto sol = solve_columns(cols, coefficient_vector(num, nb));
  if (!sol) return std::nullopt;
  return Form::from_coefficients(num.vars(), d, qb, *sol);
}

UPoly<NFElem> specialize(const BiPoly& f, const NFElem& x) {
  std::vector<NFElem> c;
  for (const auto& p : f) c.push_back(p.eval(x));
  return UPoly<NFElem>(std::move(c));
}

QPoly at_infinity(const Form& f) {  // f(t, 1, 0)
  QPoly out;
  for (const auto& [e, c] : f.terms())
    if (e[2] == 0) out = out + QPoly::monomial(c, e[0]);
  return out;
}

// A common zero of g2, g3, g4 over Q̄ is the direction of a line through the
// node that lies on the surface.
bool common_zero(const Form& g2, const Form& g3, const Form& g4) {
  const std::vector<Rat> e1 = {Rat(1), Rat(0), Rat(0)};
  if (g2.eval(e1).is_zero() && g3.eval(e1).is_zero() && g4.eval(e1).is_zero()) return true;
  QPoly inf = gcd(gcd(at_infinity(g2), at_infinity(g3)), at_infinity(g4));
  if (inf.is_zero() || inf.degree() > 0) return true;

  BiPoly a = affine_chart(g2), b = affine_chart(g3), c = affine_chart(g4);
  QPoly r = resultant_y(a, b, 2, 3);
  if (r.is_zero()) return true;  // g2 irreducible, so it divides g3 and meets g4
  if (r.degree() <= 0) return false;
  for (const auto& term : upoly_factor(squarefree_part(r)).factors) {
    FieldRef k = NumberField::create_trusted(term.factor, "a");
    UPoly<NFElem> h = gcd(gcd(specialize(a, k->gen()), specialize(b, k->gen())), specialize(c, k->gen()));
    if (h.is_zero() || h.degree() > 0) return true;
  }
  return false;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int rank_of_points(const std::vector<std::vector<Rat>>& pts, const std::vector<std::size_t>& idx) {
  RatMatrix rows;
  for (std::size_t i : idx) rows.push_back(pts[i]);
  return rank_of(rows, pts.empty() ? 0 : pts[0].size());
}

std::vector<std::vector<Rat>> rational_points(const std::vector<ProjPoint>& points, const char* what) {
  std::vector<std::vector<Rat>> out;
  for (const auto& p : points) {
    if (!p.is_rational()) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " needs rational points");
    if (p.size() != 4) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " needs points in P^3");
    out.push_back(p.rational_coords());
  }
  return out;
}

}  // namespace

Form NodeCenteredQuartic::surface() const {
  return to_space(g2) * w_power(2) + Rat(2) * (to_space(g3) * w_power(1)) + to_space(g4);
}

NodeCenteredQuartic node_centered(const Form& f) {
  require_space(f, 4, "surface");
  if (!w_coefficient(f, 4).is_zero() || !w_coefficient(f, 3).is_zero())
    throw Error(ErrorCode::kNodeDegenerate, "(0:0:0:1) is not a singular point of the surface");
  NodeCenteredQuartic out{w_coefficient(f, 2), Rat(1, 2) * w_coefficient(f, 1), w_coefficient(f, 0)};
  if (out.g2.is_zero() || classify_conic(out.g2) != ConicClass::kSmooth)
    throw Error(ErrorCode::kNodeDegenerate, "(0:0:0:1) is singular but not a node");
  return out;
}

CenteredSurface center_at_node(const Form& f, const ProjPoint& p) {
  require_space(f, 4, "surface");
  if (!p.is_rational() || p.size() != 4)
    throw Error(ErrorCode::kInvalidArgument, "the node to center at must be a rational point of P^3");
  std::vector<Rat> c = p.rational_coords();
  std::size_t k = 4;
  while (k-- > 0)
    if (!c[k].is_zero()) break;
  // Columns of M⁻¹: the unit vectors other than e_k, then P.
  RatMatrix inv(4, std::vector<Rat>(4));
  std::size_t col = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != k) inv[i][col++] = Rat(1);
  for (std::size_t i = 0; i < 4; ++i) inv[i][3] = c[i];
  CenteredSurface out{node_centered(f.linear_change(inv)), mat_inverse(inv)};
  return out;
}

QuarticProjection project_quartic(const NodeCenteredQuartic& x, int height) {
  check_centered(x);
  QuarticProjection out;
  out.gamma = x.g3 * x.g3 - x.g2 * x.g4;
  out.delta = x.g2;
  out.reduced = !out.gamma.is_zero() && reduced_by_line_test(out.gamma);
  // A non-reduced branch curve is reported as such; the line test and the
  // contact analysis assume a reduced curve.
  if (!out.reduced) return out;
  if (common_zero(x.g2, x.g3, x.g4))
    throw Error(ErrorCode::kLineThroughNode, "the surface contains a line through (0:0:0:1)");
  if (auto base = find_rational_point(x.g2, height))
    out.contact = contact_profile(out.gamma, out.delta, parametrize_conic(out.delta, *base));
  return out;
}

Form alpha1_map(const NodeCenteredQuartic& x, const Form& hyperplane) {
  require_space(hyperplane, 1, "hyperplane");
  Rat cw = hyperplane.coeff(Exponent{0, 0, 0, 1});
  if (cw.is_zero())
    throw Error(ErrorCode::kHyperplaneThroughNode, "hyperplane " + hyperplane.to_string() + " passes through (0:0:0:1)");
  Form ell = (Rat(1) / cw) * w_coefficient(hyperplane, 0);
  return x.g2 * ell - x.g3;
}

Form alpha2_map(const NodeCenteredQuartic& x, const Form& a1, const Form& a2) {
  require_plane(a1, 1, "a1");
  require_plane(a2, 2, "a2");
  if (a1.is_zero()) throw Error(ErrorCode::kQuadricSingularAtNode, "the quadric is singular at (0:0:0:1)");
  return a1 * x.g3 - a2 * x.g2;
}

Form alpha2_map(const NodeCenteredQuartic& x, const Form& quadric) {
  require_space(quadric, 2, "quadric");
  if (!w_coefficient(quadric, 2).is_zero())
    throw Error(ErrorCode::kInvalidArgument, "the quadric does not pass through (0:0:0:1)");
  return alpha2_map(x, w_coefficient(quadric, 1), w_coefficient(quadric, 0));
}

NodeCheck verify_surface_node(const Form& f, const ProjPoint& p) {
  require_space(f, f.degree(), "surface");
  return verify_node(f, p);
}

const char* to_string(GeneralPositionP3::Kind k) {
  switch (k) {
    case GeneralPositionP3::Kind::kGeneral: return "General";
    case GeneralPositionP3::Kind::kCollinearTriple: return "CollinearTriple";
    case GeneralPositionP3::Kind::kCoplanarFive: return "CoplanarFive";
  }
  return "?";
}

GeneralPositionP3 general_position_p3(const std::vector<ProjPoint>& points) {
  auto pts = rational_points(points, "general position test");
  for (const auto& idx : subsets(pts.size(), 3))
    if (rank_of_points(pts, idx) < 3) return {GeneralPositionP3::Kind::kCollinearTriple, idx};
  for (const auto& idx : subsets(pts.size(), 5))
    if (rank_of_points(pts, idx) < 4) return {GeneralPositionP3::Kind::kCoplanarFive, idx};
  return {};
}

SyzygeticResult syzygetic_test(const Form& f, const std::vector<ProjPoint>& nodes) {
  require_space(f, 4, "surface");
  SyzygeticResult out;
  std::vector<std::size_t> rational;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].is_rational()) rational.push_back(i);
  FormSpace quadrics = FormSpace::space(2);
  for (const auto& pick : subsets(rational.size(), 8)) {
    std::vector<ProjPoint> pts;
    std::vector<std::size_t> idx;
    for (std::size_t j : pick) {
      idx.push_back(rational[j]);
      pts.push_back(nodes[rational[j]]);
    }
    if (!general_position_p3(pts)) continue;
    std::vector<LinCondition> conds;
    for (const auto& p : pts) conds.push_back(cond_point(quadrics, p));
    LinSysReport rep = system_solve(quadrics, conds);
    if (rep.dimension != 2) continue;
    out.syzygetic = true;
    out.subset = idx;
    for (const auto& k : rep.kernel) out.quadrics.push_back(quadrics.form(k));
    out.system = std::move(rep);
    // f as a ternary quadratic form in the three quadrics.
    std::vector<Exponent> tb = monomial_basis(3, 2), fb = monomial_basis(4, 4);
    std::vector<std::vector<Rat>> cols;
    for (const auto& e : tb) {
      Form prod = Form::constant(space_vars(), Rat(1));
      for (int v = 0; v < 3; ++v) prod = prod * out.quadrics[static_cast<std::size_t>(v)].pow(e[static_cast<std::size_t>(v)]);
      cols.push_back(coefficient_vector(prod, fb));
    }
    if (auto sol = solve_columns(cols, coefficient_vector(f, fb))) out.ternary = std::move(*sol);
    return out;
  }
  return out;
}

std::optional<Configuration33> detect_33_configuration(const Form& f, const std::vector<ProjPoint>& nodes,
                                                       std::size_t p0) {
  require_space(f, 4, "surface");
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (i != p0 && nodes[i].is_rational()) candidates.push_back(i);
  std::vector<std::vector<Rat>> all(nodes.size());
  for (std::size_t i : candidates) all[i] = nodes[i].rational_coords();

  FormSpace conics = FormSpace::plane(2);
  for (const auto& pick : subsets(candidates.size(), 6)) {
    std::vector<std::vector<Rat>> pts;
    std::vector<std::size_t> idx;
    for (std::size_t j : pick) {
      idx.push_back(candidates[j]);
      pts.push_back(all[candidates[j]]);
    }
    Elimination plane = eliminate(pts, 4);
    if (plane.rank != 3) continue;
    bool four_collinear = false;
    for (const auto& four : subsets(6, 4))
      if (rank_of_points(pts, four) < 3) four_collinear = true;
    if (four_collinear) continue;

    // The kernel of the hyperplane row has unit vectors at the free columns,
    // so those coordinates are coordinates on the hyperplane.
    std::vector<Rat> h = plane.kernel[0];
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < 4; ++c)
      if (!h[c].is_zero()) {
        for (std::size_t d = 0; d < 4; ++d)
          if (d != c) free.push_back(d);
        break;
      }
    std::vector<LinCondition> conds;
    for (const auto& p : pts) conds.push_back(cond_point(conics, ProjPoint(std::vector<Rat>{p[free[0]], p[free[1]], p[free[2]]})));
    LinSysReport rep = system_solve(conics, conds);
    if (rep.dimension < 0) continue;
    Configuration33 out;
    out.nodes = idx;
    out.hyperplane = Form::from_coefficients(space_vars(), 1, monomial_basis(4, 1), h).primitive();
    out.conic = conics.form(rep.kernel[0]).primitive();
    return out;
  }
  return std::nullopt;
}

CompletenessResult surface_nodes_complete(const Form& f, const std::vector<ProjPoint>& nodes, int seed) {
  require_space(f, 4, "surface");
  std::vector<Form> grad = f.partials();
  for (const auto& p : nodes) {
    bool sing = vanishes_at(f, p);
    for (const auto& g : grad) sing = sing && vanishes_at(g, p);
    if (!sing) return {false, -1, "claimed point " + p.to_string() + " is not a singular point"};
  }
  std::size_t p0 = 0;
  while (p0 < nodes.size() && !nodes[p0].is_rational()) ++p0;
  if (p0 == nodes.size()) return {false, -1, "no rational node to project from"};

  CenteredSurface centered = center_at_node(f, nodes[p0]);
  QuarticProjection proj;
  try {
    proj = project_quartic(centered.quartic);
  } catch (const Error& e) {
    return {false, -1, e.what()};
  }
  if (!proj.reduced) return {false, -1, "the branch curve is not reduced"};
  // Two nodes on one line through the centre would put the line on the
  // surface, so the images are distinct; each singular point of the branch
  // curve has at most one preimage besides the centre.
  std::vector<ProjPoint> images;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i == p0) continue;
    ProjPoint moved = nodes[i].transformed(centered.m);
    const auto& c = moved.coords();
    images.emplace_back(std::vector<NFElem>{c[0], c[1], c[2]});
  }
  CompletenessResult r = check_singular_locus(proj.gamma, images, seed);
  if (!r.complete) r.reason = "projection from " + nodes[p0].to_string() + ": " + r.reason;
  return r;
}

NodeCenteredQuartic quartic_from_sextic(const Form& gamma, const Form& q, int height) {
  require_plane(gamma, 6, "sextic");
  require_plane(q, 2, "conic");
  if (classify_conic(q) != ConicClass::kSmooth) throw Error(ErrorCode::kConicNotSmooth, "conic is not smooth");
  auto base = find_rational_point(q, height);
  if (!base) throw Error(ErrorCode::kPointNotOnConic, "no rational point of height <= " + std::to_string(height));
  ConicParam param = parametrize_conic(q, *base);
  ContactProfile prof = contact_profile(gamma, q, param);
  if (prof.kind != ContactKind::kEvenContact && prof.kind != ContactKind::kSimpleContact)
    throw Error(ErrorCode::kInvalidArgument, "the conic is not an even contact conic of the sextic");

  // γ|q = c·h²; lift h to a cubic g3, then γ/c = g3² − q·g4.
  BinaryForm r = restrict_to_conic(gamma, param);
  BinaryForm h2 = prof.contact_form * prof.contact_form;
  Rat c;
  for (int i = 0; i <= r.degree(); ++i)
    if (!h2.coeff(i).is_zero()) {
      c = r.coeff(i) / h2.coeff(i);
      break;
    }
  std::vector<Exponent> cubic = monomial_basis(3, 3);
  std::vector<std::vector<Rat>> cols;
  for (const auto& e : cubic) cols.push_back(restrict_to_conic(Form::monomial(plane_vars(), e), param).coeffs());
  auto lift = solve_columns(cols, prof.contact_form.coeffs());
  if (!lift) throw Error(ErrorCode::kInvalidArgument, "contact form does not lift to a cubic");
  Form g3 = Form::from_coefficients(plane_vars(), 3, cubic, *lift);
  Form scaled = (Rat(1) / c) * gamma;
  auto g4 = divide_exact(g3 * g3 - scaled, q);
  if (!g4) throw Error(ErrorCode::kInvalidArgument, "g3^2 - gamma is not divisible by the conic");
  return NodeCenteredQuartic{q, g3, *g4};
}

}  // namespace nodalsplit
