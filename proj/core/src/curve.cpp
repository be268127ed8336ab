#include "nodalsplit/curve.hpp"

#include <cstdint>

#include "nodalsplit/conic.hpp"
#include "nodalsplit/errors.hpp"
#include "nodalsplit/factor.hpp"
#include "nodalsplit/matrix.hpp"

namespace nodalsplit {

NodeCheck verify_node(const Form& f, const ProjPoint& p) {
  if (static_cast<std::size_t>(f.nvars()) != p.size())
    throw Error(ErrorCode::kInvalidArgument, "point dimension does not match the form");
  NodeCheck out;
  ProjPoint q = p.normalized();
  out.on_curve = vanishes_at(f, q);
  if (!out.on_curve) return out;
  std::vector<Form> grad = f.partials();
  out.singular = true;
  for (const auto& g : grad)
    if (!vanishes_at(g, q)) out.singular = false;
  if (!out.singular) return out;

  std::size_t k = q.size();
  while (k-- > 0)
    if (!q.coords()[k].is_zero()) break;
  std::vector<int> chart;
  for (int i = 0; i < f.nvars(); ++i)
    if (static_cast<std::size_t>(i) != k) chart.push_back(i);
  std::size_t n = chart.size();
  std::vector<std::vector<NFElem>> h(n, std::vector<NFElem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      h[i][j] = eval_form(grad[static_cast<std::size_t>(chart[i])].partial(chart[j]), q);
      h[j][i] = h[i][j];
    }
  if (n == 2) {
    out.discriminant = h[0][1] * h[0][1] - h[0][0] * h[1][1];
  } else {  // surface: Hessian determinant of the affine chart
    out.discriminant = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                       h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                       h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  }
  out.node = !out.discriminant.is_zero();
  return out;
}

RatMatrix shear_matrix(int index) {
  // splitmix64 stream; M = U·L with unitriangular factors, so det M = 1.
  std::uint64_t state = 0x243f6a8885a308d3ULL + static_cast<std::uint64_t>(index) * 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  auto entry = [&]() { return Rat(static_cast<long>(next() % 7) - 3); };
  RatMatrix u = identity_matrix(3), l = identity_matrix(3);
  u[0][1] = entry();
  u[0][2] = entry();
  u[1][2] = entry();
  l[1][0] = entry();
  l[2][0] = entry();
  l[2][1] = entry();
  return mat_mul(u, l);
}

BiPoly affine_chart(const Form& f) {
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    std::size_t j = e[1];
    if (out.size() <= j) out.resize(j + 1);
    out[j] = out[j] + QPoly::monomial(c, e[0]);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

QPoly resultant_y(const BiPoly& a, const BiPoly& b, int total_degree_a, int total_degree_b) {
  if (a.empty() || b.empty()) return QPoly();
  std::size_t da = a.size() - 1, db = b.size() - 1, n = da + db;
  int samples = total_degree_a * total_degree_b + 1;
  std::vector<Rat> xs, ys;
  for (int i = 0; i < samples; ++i) {
    Rat x((i % 2 ? 1 : -1) * ((i + 1) / 2));
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t j = 0; j <= da; ++j) m[r][r + j] = a[da - j].eval(x);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t j = 0; j <= db; ++j) m[db + r][r + j] = b[db - j].eval(x);
    xs.push_back(x);
    ys.push_back(determinant(std::move(m)));
  }
  return interpolate(xs, ys);
}

namespace {

UPoly<NFElem> specialize_x(const BiPoly& f, const NFElem& x) {
  std::vector<NFElem> c;
  for (const auto& p : f) c.push_back(p.eval(x));
  return UPoly<NFElem>(std::move(c));
}

QPoly gcd_all(const std::vector<QPoly>& ps) {
  QPoly g;
  for (const auto& p : ps) g = gcd(g, p);
  return g;
}

Form restrict_to_line_at_infinity(const Form& f) {
  TermMap t;
  for (const auto& [e, c] : f.terms())
    if (e[2] == 0) t.emplace(e, c);
  return Form(f.vars(), f.degree(), std::move(t));
}

// x(t,1,0) as a polynomial in t; the point (1:0:0) is handled separately.
QPoly infinity_poly(const Form& f) {
  QPoly out;
  Form line = restrict_to_line_at_infinity(f);
  for (const auto& [e, c] : line.terms()) out = out + QPoly::monomial(c, e[0]);
  return out;
}

struct ClaimedImage {
  QPoly x_minpoly;
  NFElem x, y;
};

}  // namespace

CompletenessResult check_singular_locus(const Form& gamma, const std::vector<ProjPoint>& claimed, int seed) {
  if (gamma.nvars() != 3) throw Error(ErrorCode::kInvalidArgument, "singular locus check needs a plane curve");
  std::vector<Form> grad = gamma.partials();
  for (const auto& p : claimed) {
    if (p.size() != 3) throw Error(ErrorCode::kInvalidArgument, "claimed point is not a plane point");
    bool sing = vanishes_at(gamma, p);
    for (const auto& g : grad) sing = sing && vanishes_at(g, p);
    if (!sing) return {false, -1, "claimed point " + p.to_string() + " is not a singular point"};
  }

  for (int idx = seed; idx < seed + 20; ++idx) {
    RatMatrix m = shear_matrix(idx);
    Form f = gamma.linear_change(mat_inverse(m));
    std::vector<ClaimedImage> images;
    bool usable = true;
    for (const auto& p : claimed) {
      ProjPoint q = p.transformed(m);
      if (q.coords()[2].is_zero()) {
        usable = false;
        break;
      }
      NFElem zi = q.coords()[2].inverse();
      ClaimedImage ci{QPoly(), q.coords()[0] * zi, q.coords()[1] * zi};
      ci.x_minpoly = ci.x.minimal_polynomial();
      if (ci.x_minpoly.degree() != p.orbit_size()) {
        usable = false;
        break;
      }
      for (const auto& other : images)
        if (other.x_minpoly == ci.x_minpoly) usable = false;
      images.push_back(std::move(ci));
    }
    if (!usable) continue;

    std::vector<Form> fgrad = f.partials();
    // Line at infinity: the point (1:0:0), then the chart y = 1.
    {
      bool sing = f.eval(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).is_zero();
      for (const auto& g : fgrad) sing = sing && g.eval(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).is_zero();
      if (sing) return {false, idx, "unclaimed singular point on the line z = 0"};
      QPoly g = gcd_all({infinity_poly(f), infinity_poly(fgrad[0]), infinity_poly(fgrad[1]), infinity_poly(fgrad[2])});
      if (g.is_zero() || g.degree() > 0) return {false, idx, "unclaimed singular point on the line z = 0"};
    }

    BiPoly F = affine_chart(f), Fx = affine_chart(fgrad[0]), Fy = affine_chart(fgrad[1]);
    int d = f.degree();
    QPoly r1 = resultant_y(F, Fx, d, d - 1);
    QPoly r2 = resultant_y(F, Fy, d, d - 1);
    if (r1.is_zero() || r2.is_zero()) continue;
    QPoly g = gcd(r1, r2);
    std::vector<bool> matched(images.size(), false);
    if (g.degree() > 0) {
      for (const auto& term : upoly_factor(squarefree_part(g)).factors) {
        FieldRef k = NumberField::create_trusted(term.factor, "a");
        NFElem theta = k->gen();
        UPoly<NFElem> h = gcd(gcd(specialize_x(F, theta), specialize_x(Fx, theta)), specialize_x(Fy, theta));
        if (h.degree() <= 0) continue;
        h = squarefree_part(h);
        if (h.degree() >= 2)
          return {false, idx, "two singular points share the x-coordinate root of " + to_string(term.factor)};
        NFElem y0 = -h.coeff(0) / h.coeff(1);
        QPoly monic = term.factor.monic();
        std::size_t j = 0;
        while (j < images.size() && !(images[j].x_minpoly == monic)) ++j;
        if (j == images.size())
          return {false, idx, "unclaimed singular point with x-coordinate root of " + to_string(monic)};
        if (!(y0.as_poly().eval(images[j].x) == images[j].y))
          return {false, idx, "unclaimed singular point with x-coordinate root of " + to_string(monic)};
        matched[j] = true;
      }
    }
    for (std::size_t j = 0; j < images.size(); ++j)
      if (!matched[j]) return {false, idx, "claimed point " + claimed[j].to_string() + " not found"};
    return {true, idx, ""};
  }
  throw Error(ErrorCode::kShearExhausted,
              "no usable shear among indices " + std::to_string(seed) + ".." + std::to_string(seed + 19));
}

bool singular_locus_complete(const Form& gamma, const std::vector<ProjPoint>& claimed, int seed) {
  return check_singular_locus(gamma, claimed, seed).complete;
}

bool reduced_by_line_test(const Form& gamma) {
  static const long kLines[5][6] = {{1, 2, 3, 5, 1, -7}, {1, -3, 4, 2, 1, 5}, {2, 1, -5, 3, 7, 1},
                                    {1, 5, -2, -4, 1, 3}, {3, -1, 1, 1, 4, -6}};
  for (const auto& l : kLines) {
    BinaryForm r = restrict_along(gamma, line_through({Rat(l[0]), Rat(l[1]), Rat(l[2])},
                                                      {Rat(l[3]), Rat(l[4]), Rat(l[5])}));
    if (r.is_zero()) continue;
    bool squarefree = true;
    for (const auto& t : binary_squarefree_decomposition(r))
      if (t.multiplicity > 1) squarefree = false;
    if (squarefree) return true;
  }
  return false;
}

bool irreducibility_sextic(const Form& gamma, const std::vector<ProjPoint>& nodes) {
  if (gamma.nvars() != 3 || gamma.degree() != 6)
    throw Error(ErrorCode::kDegreeMismatch, "irreducibility test needs a plane sextic");
  int r = 0;
  for (const auto& p : nodes) r += p.orbit_size();
  if (r > 7) throw Error(ErrorCode::kTooManyNodes, "irreducibility test covers at most 7 nodes, got " + std::to_string(r));
  // A line through five or more nodes of a nodal sextic with at most seven
  // nodes is defined over Q, so it contains whole Galois orbits: testing unions
  // of orbits is the same as testing all five-point subsets.
  std::size_t n = nodes.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    int size = 0;
    RatMatrix rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1U << i))) continue;
      size += nodes[i].orbit_size();
      for (auto& row : rational_rows(nodes[i].coords())) rows.push_back(std::move(row));
    }
    if (size < 5) continue;
    if (rank_of(rows, 3) < 3) return false;
  }
  return true;
}

}  // namespace nodalsplit
