#include "nodalsplit/conic.hpp"

#include <cstdlib>
#include <numeric>

#include "nodalsplit/errors.hpp"
#include "nodalsplit/factor.hpp"
#include "nodalsplit/matrix.hpp"

namespace nodalsplit {

const char* to_string(ConicClass c) {
  switch (c) {
    case ConicClass::kSmooth: return "Smooth";
    case ConicClass::kRankTwo: return "RankTwo";
    case ConicClass::kRankOne: return "RankOne";
  }
  return "?";
}

const char* to_string(ContactKind k) {
  switch (k) {
    case ContactKind::kNotContact: return "NotContact";
    case ContactKind::kContact: return "Contact";
    case ContactKind::kEvenContact: return "EvenContact";
    case ContactKind::kSimpleContact: return "SimpleContact";
  }
  return "?";
}

const Form& delta2() {
  static const Form d = parse_form("z^2-4*x*y", plane_vars());
  return d;
}

RatMatrix conic_matrix(const Form& q) {
  if (q.nvars() != 3 || q.degree() != 2) throw Error(ErrorCode::kDegreeMismatch, "conic must be a plane quadratic form");
  RatMatrix m(3, std::vector<Rat>(3));
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] += c;
    } else {
      m[idx[0]][idx[1]] += c / Rat(2);
      m[idx[1]][idx[0]] += c / Rat(2);
    }
  }
  return m;
}

ConicClass classify_conic(const Form& q) {
  if (q.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero conic");
  int r = rank_of(conic_matrix(q), 3);
  return r == 3 ? ConicClass::kSmooth : (r == 2 ? ConicClass::kRankTwo : ConicClass::kRankOne);
}

ConicParam ConicParam::standard() {
  return ConicParam{{BinaryForm(2, {Rat(1), Rat(0), Rat(0)}), BinaryForm(2, {Rat(0), Rat(0), Rat(1)}),
                     BinaryForm(2, {Rat(0), Rat(2), Rat(0)})}};
}

ProjPoint ConicParam::point_at(const Rat& s, const Rat& t) const {
  return ProjPoint(std::vector<Rat>{p[0].eval(s, t), p[1].eval(s, t), p[2].eval(s, t)});
}

std::vector<NFElem> ConicParam::point_at(const NFElem& s, const NFElem& t) const {
  return {p[0].eval(s, t), p[1].eval(s, t), p[2].eval(s, t)};
}

ConicParam parametrize_conic(const Form& q, const ProjPoint& base) {
  if (classify_conic(q) != ConicClass::kSmooth) throw Error(ErrorCode::kConicNotSmooth, "conic is not smooth");
  if (base.size() != 3 || !base.is_rational())
    throw Error(ErrorCode::kInvalidArgument, "base point must be a rational point of the plane");
  if (!vanishes_at(q, base))
    throw Error(ErrorCode::kPointNotOnConic, "base point " + base.to_string() + " is not on " + q.to_string());
  RatMatrix a = conic_matrix(q);
  std::vector<Rat> p0 = base.rational_coords();
  std::vector<Rat> polar = mat_vec(a, p0);  // B(P0, v) = polar·v
  // e2: a standard vector inside the polar plane, independent of P0 when combined;
  // e1: a standard vector off the polar plane.
  std::vector<std::vector<Rat>> kernel = eliminate({polar}, 3).kernel;
  std::vector<Rat> e2;
  for (const auto& k : kernel) {
    bool prop = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (k[static_cast<std::size_t>(i)] * p0[static_cast<std::size_t>(j)] !=
            k[static_cast<std::size_t>(j)] * p0[static_cast<std::size_t>(i)])
          prop = false;
    if (!prop) {
      e2 = k;
      break;
    }
  }
  std::vector<Rat> e1(3);
  for (std::size_t i = 0; i < 3; ++i)
    if (!polar[i].is_zero()) {
      e1[i] = 1;
      break;
    }
  // X(s,t) = −Q(s e1 + t e2)·P0 + 2·L(s,t)·(s e1 + t e2), L(s,t) = s·B(P0,e1).
  Rat b1 = 0;
  for (std::size_t i = 0; i < 3; ++i) b1 += polar[i] * e1[i];
  auto bil = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
    return std::inner_product(u.begin(), u.end(), mat_vec(a, v).begin(), Rat(0));
  };
  Rat q11 = bil(e1, e1), q12 = bil(e1, e2), q22 = bil(e2, e2);
  ConicParam out;
  for (std::size_t i = 0; i < 3; ++i) {
    // coefficients of s², st, t²
    Rat cs2 = -q11 * p0[i] + Rat(2) * b1 * e1[i];
    Rat cst = -Rat(2) * q12 * p0[i] + Rat(2) * b1 * e2[i];
    Rat ct2 = -q22 * p0[i];
    out.p[i] = BinaryForm(2, {cs2, cst, ct2});
  }
  return out;
}

BinaryForm restrict_along(const Form& f, const std::array<BinaryForm, 3>& images) {
  if (f.nvars() != 3) throw Error(ErrorCode::kInvalidArgument, "restriction needs a plane form");
  int d = f.degree();
  std::array<std::vector<BinaryForm>, 3> pw;
  for (std::size_t i = 0; i < 3; ++i) {
    pw[i].push_back(BinaryForm(0, {Rat(1)}));
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * images[i]);
  }
  BinaryForm out = BinaryForm::zero(images[0].degree() * d);
  for (const auto& [e, c] : f.terms()) out = out + c * (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
  return out;
}

BinaryForm restrict_to_conic(const Form& f, const ConicParam& param) { return restrict_along(f, param.p); }

std::array<BinaryForm, 3> line_through(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  return {BinaryForm(1, {a[0], b[0]}), BinaryForm(1, {a[1], b[1]}), BinaryForm(1, {a[2], b[2]})};
}

bool line_tangent_to_conic(const Form& line, const Form& q) {
  if (line.nvars() != 3 || line.degree() != 1) throw Error(ErrorCode::kDegreeMismatch, "not a line");
  RatMatrix a = conic_matrix(q);
  std::vector<Rat> l(3);
  for (int i = 0; i < 3; ++i) {
    Exponent e{};
    e[static_cast<std::size_t>(i)] = 1;
    l[static_cast<std::size_t>(i)] = line.coeff(e);
  }
  // adj(A) via cofactors
  auto cof = [&](std::size_t i, std::size_t j) {
    std::size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
  };
  Rat v = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) v += l[i] * cof(j, i) * l[j];
  return v.is_zero();
}

namespace {

// Points of the conic at the roots of an irreducible binary factor.
std::vector<NFElem> root_point(const BinaryForm& factor, const ConicParam& param) {
  if (factor.degree() == 1) {
    if (factor.coeff(0).is_zero())  // factor ∝ t: the parameter (1:0)
      return param.point_at(NFElem(1), NFElem(0));
    // s·c0 + t·c1 = 0 at (−c1/c0 : 1)
    return param.point_at(NFElem(-factor.coeff(1) / factor.coeff(0)), NFElem(1));
  }
  FieldRef k = NumberField::create_trusted(factor.dehomogenize(), "a");
  return param.point_at(k->gen(), NFElem(1));
}

bool smooth_at_roots(const Form& gamma, const BinaryForm& f, const ConicParam& param) {
  std::vector<Form> partials = gamma.partials();
  for (const auto& term : factor_binary_form(f).factors) {
    std::vector<NFElem> pt = root_point(term.factor, param);
    bool smooth = false;
    for (const auto& g : partials)
      if (!g.eval(pt).is_zero()) smooth = true;
    if (!smooth) return false;
  }
  return true;
}

}  // namespace

ContactProfile contact_profile(const Form& gamma, const Form& q, const ConicParam& param) {
  if (classify_conic(q) != ConicClass::kSmooth) throw Error(ErrorCode::kConicNotSmooth, "conic is not smooth");
  BinaryForm r = restrict_to_conic(gamma, param);
  if (r.is_zero())
    throw Error(ErrorCode::kCommonComponent, "the curve contains the conic " + q.to_string());
  ContactProfile out;
  out.multiplicities = binary_squarefree_decomposition(r);
  int min_mult = 1 << 30;
  bool all_even = true;
  BinaryForm radical(0, {Rat(1)}), half(0, {Rat(1)});
  for (const auto& t : out.multiplicities) {
    min_mult = std::min(min_mult, t.multiplicity);
    if (t.multiplicity % 2) all_even = false;
    radical = radical * t.factor;
    if (t.multiplicity % 2 == 0) half = half * t.factor.pow(static_cast<unsigned>(t.multiplicity / 2));
  }
  if (out.multiplicities.empty()) min_mult = 0;  // constant restriction: no intersection
  out.smooth_at_intersections = true;
  for (const auto& t : out.multiplicities)
    if (!smooth_at_roots(gamma, t.factor, param)) out.smooth_at_intersections = false;

  if (min_mult >= 2 && out.smooth_at_intersections) {
    out.kind = ContactKind::kContact;
    if (all_even) out.kind = ContactKind::kEvenContact;
    bool all_two = out.multiplicities.size() == 1 && out.multiplicities[0].multiplicity == 2;
    if (all_two && radical.degree() == gamma.degree()) out.kind = ContactKind::kSimpleContact;
  }
  out.contact_form = all_even ? half : radical;
  out.tangent_count = out.kind == ContactKind::kSimpleContact ? out.contact_form.degree() : radical.degree();
  return out;
}

std::optional<ProjPoint> find_rational_point(const Form& q, int height) {
  Form qi = q.primitive();
  std::vector<std::pair<Exponent, long long>> terms;
  bool small = true;
  for (const auto& [e, c] : qi.terms()) {
    if (!c.num().fits_slong_p() || abs(c.num()) > (1L << 30)) small = false;
    terms.emplace_back(e, small ? c.num().get_si() : 0);
  }
  auto is_zero_at = [&](long x, long y, long z) {
    if (small) {
      __int128 acc = 0;
      long v[3] = {x, y, z};
      for (const auto& [e, c] : terms) {
        __int128 m = c;
        for (int i = 0; i < 3; ++i)
          for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) m *= v[i];
        acc += m;
      }
      return acc == 0;
    }
    return qi.eval(std::vector<Rat>{Rat(x), Rat(y), Rat(z)}).is_zero();
  };
  for (long h = 1; h <= height; ++h) {
    for (long x = -h; x <= h; ++x)
      for (long y = -h; y <= h; ++y)
        for (long z = -h; z <= h; ++z) {
          if (std::max({std::labs(x), std::labs(y), std::labs(z)}) != h) continue;
          // first nonzero coordinate positive
          long first = x != 0 ? x : (y != 0 ? y : z);
          if (first < 0) continue;
          if (std::gcd(std::gcd(std::labs(x), std::labs(y)), std::labs(z)) != 1) continue;
          if (is_zero_at(x, y, z)) return ProjPoint::of({x, y, z});
        }
  }
  return std::nullopt;
}

ConicNormalization normalize_conic(const Form& q, const ProjPoint& base) {
  ConicParam param = parametrize_conic(q, base);
  RatMatrix p(3, std::vector<Rat>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) p[i][j] = param.p[i].coeff(static_cast<int>(j));
  ConicParam std_param = ConicParam::standard();
  RatMatrix s(3, std::vector<Rat>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s[i][j] = std_param.p[i].coeff(static_cast<int>(j));
  ConicNormalization out{mat_mul(s, mat_inverse(p)), {}, Rat(0), base};
  out.m_inv = mat_inverse(out.m);
  Form moved = q.linear_change(out.m_inv);
  if (!moved.proportional_to(delta2(), &out.lambda))
    throw Error(ErrorCode::kInvalidArgument, "internal: normalized conic is not proportional to z^2-4xy");
  return out;
}

ConicNormalization normalize_conic(const Form& q, int height) {
  if (classify_conic(q) != ConicClass::kSmooth) throw Error(ErrorCode::kConicNotSmooth, "conic is not smooth");
  Rat ratio;
  if (q.proportional_to(delta2(), &ratio))  // already normalized; keep the coordinates
    return ConicNormalization{identity_matrix(3), identity_matrix(3), ratio, ProjPoint::of({1, 0, 0})};
  auto base = find_rational_point(q, height);
  if (!base)
    throw Error(ErrorCode::kPointNotOnConic, "no rational point of height <= " + std::to_string(height) + " on " +
                                                 q.to_string());
  return normalize_conic(q, *base);
}

}  // namespace nodalsplit
