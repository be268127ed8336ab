#include "nodalsplit/split.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nodalsplit/cover.hpp"
#include "nodalsplit/curve.hpp"
#include "nodalsplit/errors.hpp"
#include "nodalsplit/factor.hpp"
#include "nodalsplit/matrix.hpp"

namespace nodalsplit {

const char* to_string(Criterion24 c) {
  switch (c) {
    case Criterion24::kHolds: return "Holds";
    case Criterion24::kFailsA: return "FailsWith(iii-a)";
    case Criterion24::kFailsB: return "FailsWith(iii-b)";
    case Criterion24::kFailsC: return "FailsWith(iii-c)";
    case Criterion24::kFailsD: return "FailsWith(iii-d)";
    case Criterion24::kInconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(TypeStatus s) {
  switch (s) {
    case TypeStatus::kExcludedByBound: return "excluded-by-bound";
    case TypeStatus::kExcludedByDimension: return "excluded-by-dimension";
    case TypeStatus::kExcludedByCriterion: return "excluded-by-criterion";
    case TypeStatus::kSplit: return "split";
    case TypeStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(SplitOutcome o) {
  switch (o) {
    case SplitOutcome::kSplit: return "Split";
    case SplitOutcome::kNonSplitting: return "NonSplitting";
    case SplitOutcome::kUndetermined: return "Undetermined";
  }
  return "?";
}

int alpha_of(int m, int n) {
  if (m <= 0 || m > n) throw Error(ErrorCode::kInvalidArgument, "alpha needs 0 < m <= n");
  return (m * m + n * n - m - n) / 2;
}

bool node_bound_filter(int r, int m, int n, int d) {
  if (m + n != d) throw Error(ErrorCode::kDegreeMismatch, "m + n must equal the degree");
  return 2 * r >= m * m + n * n - d;
}

SplitFrame make_frame(const Form& gamma, const Form& conic, const std::vector<ProjPoint>& nodes, int height) {
  if (gamma.nvars() != 3) throw Error(ErrorCode::kInvalidArgument, "curve must be a plane form");
  SplitFrame f;
  f.original_gamma = gamma;
  f.original_conic = conic;
  f.norm = normalize_conic(conic, height);
  f.gamma = gamma.linear_change(f.norm.m_inv);
  for (const auto& p : nodes) {
    f.nodes.push_back(p.transformed(f.norm.m));
    f.node_count += p.orbit_size();
  }
  f.contact = contact_profile(f.gamma, delta2(), ConicParam::standard());
  return f;
}

namespace {

// Unions of orbits whose sizes add up to `target`, as sorted index lists in
// lexicographic order.
std::vector<std::vector<std::size_t>> orbit_unions(const std::vector<ProjPoint>& nodes, int target) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < nodes.size(); ++i) {
      if (nodes[i].orbit_size() > left) continue;
      cur.push_back(i);
      rec(i + 1, left - nodes[i].orbit_size());
      cur.pop_back();
    }
  };
  rec(0, target);
  return out;
}

std::vector<LinCondition> point_conditions(const FormSpace& space, const std::vector<ProjPoint>& nodes) {
  std::vector<LinCondition> out;
  for (const auto& p : nodes) out.push_back(cond_point(space, p));
  return out;
}

std::vector<LinCondition> pick(const std::vector<LinCondition>& all, const std::vector<std::size_t>& idx) {
  std::vector<LinCondition> out;
  for (std::size_t i : idx) out.push_back(all[i]);
  return out;
}

std::string curve_name(int degree) {
  switch (degree) {
    case 0: return "constant";
    case 1: return "line";
    case 2: return "conic";
    case 3: return "cubic";
    case 4: return "quartic";
    default: return "curve of degree " + std::to_string(degree);
  }
}

}  // namespace

DimCheck necessary_dim_check(const SplitFrame& frame, int m, int n) {
  DimCheck out;
  out.alpha = alpha_of(m, n);
  if (out.alpha > frame.node_count) return out;
  FormSpace sn = FormSpace::plane(n), sn1 = FormSpace::plane(n - 1);
  auto rows_n = point_conditions(sn, frame.nodes);
  auto rows_n1 = point_conditions(sn1, frame.nodes);
  LinCondition t = cond_divisible_on_conic(sn, ConicParam::standard(), frame.contact_form());
  for (const auto& subset : orbit_unions(frame.nodes, out.alpha)) {
    SubsetDims sd;
    sd.orbits = subset;
    auto conds = pick(rows_n, subset);
    conds.push_back(t);
    sd.dim_cn = system_solve(sn, conds).dimension;
    sd.dim_cn1 = system_solve(sn1, pick(rows_n1, subset)).dimension;
    if (sd.dim_cn >= n - m && sd.dim_cn1 >= 0) out.witnesses.push_back(out.subsets.size());
    out.subsets.push_back(std::move(sd));
  }
  out.passes = !out.witnesses.empty();
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

bool squarefree_nonzero(const BinaryForm& r) {
  if (r.is_zero()) return false;
  for (const auto& t : binary_squarefree_decomposition(r))
    if (t.multiplicity > 1) return false;
  return true;
}

// Two rational points spanning the line.
std::array<BinaryForm, 3> parametrize_line(const Form& line) {
  std::vector<Rat> l(3);
  for (std::size_t i = 0; i < 3; ++i) {
    Exponent e{};
    e[i] = 1;
    l[i] = line.coeff(e);
  }
  auto k = eliminate({l}, 3).kernel;
  return line_through(k[0], k[1]);
}

}  // namespace

bool verify_certificate(const Form& gamma, const Form& delta, const SplitCertificate& cert) {
  int d = gamma.degree(), m = cert.m, n = cert.n, k = n - m;
  if (m < 1 || m > n || m + n != d) throw Error(ErrorCode::kDegreeMismatch, "certificate type does not match the degree");
  if (delta.nvars() != 3 || delta.degree() != 2 || cert.delta.degree() != 2)
    throw Error(ErrorCode::kDegreeMismatch, "certificate conic must be a quadratic form");
  if (cert.cn.degree() != n || cert.cn1.degree() != n - 1)
    throw Error(ErrorCode::kDegreeMismatch, "certificate forms have the wrong degrees");
  if (!cert.delta.proportional_to(delta)) return false;
  if (cert.unit.is_zero()) return false;
  Form lk = Form::constant(plane_vars(), Rat(1));
  if (k > 0) {
    if (!cert.line || cert.line->degree() != 1) throw Error(ErrorCode::kDegreeMismatch, "certificate needs a line");
    if (!line_tangent_to_conic(*cert.line, delta))
      throw Error(ErrorCode::kNotTangentLine, cert.line->to_string() + " is not tangent to the conic");
    auto lp = parametrize_line(*cert.line);
    if (!squarefree_nonzero(restrict_along(gamma, lp))) return false;
    if (restrict_along(cert.cn, lp).is_zero() || restrict_along(cert.cn1, lp).is_zero()) return false;
    lk = cert.line->pow(static_cast<unsigned>(k));
  }
  if (!reduced_by_line_test(gamma)) return false;
  Form lhs = cert.unit * (gamma * lk);
  Form rhs = cert.cn * cert.cn - cert.delta * (cert.cn1 * cert.cn1);
  return (lhs - rhs).is_zero();
}

// ---------------------------------------------------------------------------
// Pullback factorization

namespace {

using KPoly = UPoly<NFElem>;

struct Piece {
  KPoly poly;  // constant 1 for the factor t
  int degree;  // as a binary form
  int multiplicity;
};

struct Grouping {
  KPoly a, b;  // dehomogenized in s
};

KPoly lift(const QPoly& p) {
  std::vector<NFElem> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return KPoly(std::move(c));
}

std::vector<Piece> factor_pieces(const KPoly& f, int form_degree, const FieldRef& k) {
  std::vector<Piece> out;
  if (!k) {
    std::vector<Rat> c;
    for (const auto& x : f.coeffs()) c.push_back(x.rational_value());
    for (const auto& t : upoly_factor(QPoly(c)).factors) out.push_back({lift(t.factor), t.factor.degree(), t.multiplicity});
  } else {
    for (const auto& t : factor_over_field(f, k)) out.push_back({t.factor, t.factor.degree(), t.multiplicity});
  }
  int tmult = form_degree - f.degree();
  if (tmult > 0) out.push_back({KPoly::constant(NFElem(1)), 1, tmult});
  return out;
}

// All A-parts of degree m; stops after cap + 1 entries.
std::vector<Grouping> groupings(const KPoly& f, int d, int m, const FieldRef& k, int cap) {
  std::vector<Piece> pieces = factor_pieces(f, d, k);
  std::vector<Grouping> out;
  std::vector<int> exps(pieces.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (static_cast<int>(out.size()) > cap) return;
    if (i == pieces.size()) {
      if (left != 0) return;
      KPoly a = KPoly::constant(NFElem(1));
      for (std::size_t j = 0; j < pieces.size(); ++j)
        if (exps[j]) a = a * pieces[j].poly.pow(static_cast<unsigned>(exps[j]));
      out.push_back({a, exact_div(f, a)});
      return;
    }
    for (int e = 0; e <= pieces[i].multiplicity && e * pieces[i].degree <= left; ++e) {
      exps[i] = e;
      rec(i + 1, left - e * pieces[i].degree);
    }
    exps[i] = 0;
  };
  rec(0, m);
  return out;
}

// F(s, 1, c, 1) as a polynomial in s.
KPoly specialize_uv(const BiForm& f, const Rat& c) {
  std::vector<NFElem> coef(static_cast<std::size_t>(f.d1()) + 1, NFElem(0));
  for (const auto& [e, v] : f.terms()) coef[e[0]] = coef[e[0]] + NFElem(v * c.pow(e[2]));
  return KPoly(std::move(coef));
}

std::vector<QPoly> lagrange_basis(const std::vector<Rat>& xs) {
  std::vector<QPoly> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    QPoly l = QPoly::constant(Rat(1));
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != k) l = (xs[k] - xs[j]).inverse() * (l * (QPoly::x() - QPoly::constant(xs[j])));
    out.push_back(l);
  }
  return out;
}

struct ProductPair {
  BiForm p1, p2;  // A·σA = p1 + √e·p2
};

ProductPair product_with_conjugate(const PullbackFactor& f) {
  BiForm sa = f.a.swap_factors(), sb = f.a_sqrt.swap_factors();
  ProductPair out{f.a * sa, f.a * sb + f.a_sqrt * sa};
  if (f.e != 0) out.p1 = out.p1 + Rat(f.e) * (f.a_sqrt * sb);
  return out;
}

// Finds unit ρ = ρ1 + √e·ρ2 with ρ·A·σA = F.
bool solve_unit(const BiForm& target, PullbackFactor& f) {
  ProductPair p = product_with_conjugate(f);
  if (f.e == 0) {
    Rat ratio;
    if (p.p1.is_zero() || !target.proportional_to(p.p1, &ratio)) return false;
    f.unit_rat = ratio;
    f.unit_sqrt = 0;
    return true;
  }
  std::map<Exponent, std::size_t, GrlexGreater> idx;
  for (const BiForm* b : std::initializer_list<const BiForm*>{&p.p1, &p.p2, &target})
    for (const auto& [e, c] : b->terms()) idx.emplace(e, idx.size());
  RatMatrix rows;
  for (const auto& [e, i] : idx) {
    rows.push_back({p.p1.coeff(e), Rat(f.e) * p.p2.coeff(e), -target.coeff(e)});
    rows.push_back({p.p2.coeff(e), p.p1.coeff(e), Rat(0)});
  }
  for (const auto& k : eliminate(rows, 3).kernel) {
    if (k[2].is_zero()) continue;
    f.unit_rat = k[0] / k[2];
    f.unit_sqrt = k[1] / k[2];
    return !(f.unit_rat.is_zero() && f.unit_sqrt.is_zero());
  }
  return false;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r.sign() <= 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t())) return std::nullopt;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), r.num().get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), r.den().get_mpz_t());
  return Rat(a, b);
}

}  // namespace

bool verify_pullback_factor(const BiForm& f, const PullbackFactor& factor) {
  ProductPair p = product_with_conjugate(factor);
  BiForm rat_part = factor.unit_rat * p.p1;
  BiForm irr_part = factor.unit_rat * p.p2 + factor.unit_sqrt * p.p1;
  if (factor.e != 0) rat_part = rat_part + (Rat(factor.e) * factor.unit_sqrt) * p.p2;
  return rat_part == f && irr_part.is_zero() && !f.is_zero();
}

std::optional<PullbackFactor> factor_pullback_over(const BiForm& f, int m, int n, int e, const FactorOptions& options) {
  int d = m + n;
  if (m < 1 || m > n) throw Error(ErrorCode::kInvalidArgument, "factor search needs 1 <= m <= n");
  if (f.d1() != d || f.d2() != d) throw Error(ErrorCode::kDegreeMismatch, "pullback bidegree must be (m+n, m+n)");
  if (f.is_zero()) return std::nullopt;
  FieldRef k;
  if (e != 0) k = NumberField::create(QPoly({Rat(-e), Rat(0), Rat(1)}), "w");

  struct Specialization {
    Rat c;
    std::vector<Grouping> groups;
  };
  std::vector<Specialization> specs;
  for (int i = 0; static_cast<int>(specs.size()) < options.specializations && i < 4 * options.specializations; ++i) {
    Rat c((i % 2 ? 1 : -1) * ((i + 1) / 2));
    KPoly fc = specialize_uv(f, c);
    if (fc.is_zero()) continue;
    Specialization s{c, groupings(fc, d, m, k, options.grouping_cap)};
    if (s.groups.empty()) return std::nullopt;  // no factor of degree m at this fiber
    specs.push_back(std::move(s));
  }
  if (static_cast<int>(specs.size()) < n + 1) return std::nullopt;
  std::vector<std::size_t> order(specs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return specs[a].groups.size() < specs[b].groups.size(); });
  order.resize(static_cast<std::size_t>(n) + 1);
  std::sort(order.begin(), order.end());
  std::vector<Specialization> chosen;
  for (std::size_t i : order) chosen.push_back(specs[i]);

  long long total = 1;
  for (const auto& s : chosen) {
    total *= static_cast<long long>(s.groups.size());
    if (total > options.grouping_cap)
      throw Error(ErrorCode::kSearchBudgetExceeded, "more than " + std::to_string(options.grouping_cap) +
                                                        " groupings for type (" + std::to_string(m) + "," +
                                                        std::to_string(n) + ")");
  }

  std::vector<Rat> xs;
  for (const auto& s : chosen) xs.push_back(s.c);
  std::vector<QPoly> lag = lagrange_basis(xs);
  std::size_t np = static_cast<std::size_t>(n) + 1;
  std::vector<std::size_t> pick(np, 0);
  while (true) {
    // Unknowns λ_0..λ_n, μ_0..μ_n: A(c_j,1,u,1) = Σ_k λ_k a_k(c_j) L_k(u) = μ_j b_j(u).
    std::vector<std::vector<NFElem>> rows;
    for (std::size_t j = 0; j < np; ++j) {
      const Grouping& gj = chosen[j].groups[pick[j]];
      for (std::size_t p = 0; p < np; ++p) {
        std::vector<NFElem> row(2 * np, NFElem(0));
        for (std::size_t kk = 0; kk < np; ++kk) {
          NFElem akc = chosen[kk].groups[pick[kk]].a.eval(NFElem(xs[j]));
          row[kk] = akc * NFElem(lag[kk].coeff(static_cast<int>(p)));
        }
        row[np + j] = -gj.b.coeff(static_cast<int>(p));
        rows.push_back(std::move(row));
      }
    }
    for (const auto& v : field_kernel(rows, 2 * np)) {
      bool ok = true;
      for (std::size_t kk = 0; kk < np; ++kk)
        if (v[kk].is_zero()) ok = false;
      if (!ok) continue;
      TermMap t1, t2;
      for (int i = 0; i <= m; ++i)
        for (int p = 0; p <= n; ++p) {
          NFElem c(0);
          for (std::size_t kk = 0; kk < np; ++kk)
            c = c + v[kk] * chosen[kk].groups[pick[kk]].a.coeff(i) * NFElem(lag[kk].coeff(p));
          if (c.is_zero()) continue;
          Exponent ex{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(m - i), static_cast<std::uint16_t>(p),
                      static_cast<std::uint16_t>(n - p)};
          const auto& co = c.coords();
          if (!co[0].is_zero()) t1.emplace(ex, co[0]);
          if (co.size() > 1 && !co[1].is_zero()) t2.emplace(ex, co[1]);
        }
      PullbackFactor cand{e, BiForm(m, n, t1), BiForm(m, n, t2), Rat(1), Rat(0)};
      if (!solve_unit(f, cand)) continue;
      if (e == 0) {
        if (auto r = rational_sqrt(cand.unit_rat)) {
          cand.a = *r * cand.a;
          cand.unit_rat = 1;
        }
      }
      if (verify_pullback_factor(f, cand)) return cand;
    }
    std::size_t i = 0;
    while (i < np && ++pick[i] == chosen[i].groups.size()) pick[i++] = 0;
    if (i == np) break;
  }
  return std::nullopt;
}

std::optional<PullbackFactor> factor_pullback(const BiForm& f, int m, int n, const FactorOptions& options) {
  if (auto r = factor_pullback_over(f, m, n, 0, options)) return r;
  for (int e : options.quadratic_fields)
    if (auto r = factor_pullback_over(f, m, n, e, options)) return r;
  return std::nullopt;
}

std::optional<SplitCertificate> extract_certificate(const SplitFrame& frame, const PullbackFactor& factor, int m,
                                                    int n) {
  if (factor.e != 0 || !factor.unit_sqrt.is_zero()) return std::nullopt;
  int k = n - m;
  BiForm lplus = BiForm::constant(Rat(1));
  std::optional<Form> line;
  if (k > 0) {
    for (int j = 0; j <= 20 && !line; ++j) {
      Rat jr(j);
      Form l = parse_form(std::to_string(j * j) + "*x+y-" + std::to_string(j) + "*z", plane_vars());
      if (!squarefree_nonzero(
              restrict_along(frame.gamma, line_through({Rat(1), -jr * jr, Rat(0)}, {Rat(0), jr, Rat(1)}))))
        continue;
      line = l;
      lplus = jr * BiForm::variable(0) - BiForm::variable(1);
    }
    if (!line) return std::nullopt;
  }
  BiForm dplus = factor.a * lplus.pow(static_cast<unsigned>(k));
  BiForm dminus = involution_biform(dplus);
  auto cn = descend(dplus + dminus);
  auto cn1 = descend_over_ramification(dplus - dminus);
  if (!cn || !cn1) return std::nullopt;
  // cn² − δ·cn1² = (4/ρ)·γ·l^k; pull squares out of 4/ρ.
  Rat u = Rat(4) / factor.unit_rat;
  Integer ab = u.num() * u.den();
  if (ab < 0) ab = -ab;
  auto [q0, m0] = split_square_factor(ab);
  Rat scale(u.den(), q0);
  Form c_n = scale * *cn, c_n1 = scale * *cn1;
  Rat unit(u.sign() < 0 ? Integer(-m0) : m0);
  Form lk = line ? line->pow(static_cast<unsigned>(k)) : Form::constant(plane_vars(), Rat(1));
  if (!((unit * (frame.gamma * lk)) - (c_n * c_n - delta2() * (c_n1 * c_n1))).is_zero()) return std::nullopt;
  const RatMatrix& mm = frame.norm.m;
  SplitCertificate cert;
  cert.m = m;
  cert.n = n;
  if (line) cert.line = line->linear_change(mm);
  cert.delta = delta2().linear_change(mm);
  cert.unit = unit;
  cert.cn = c_n.linear_change(mm);
  cert.cn1 = c_n1.linear_change(mm);
  return cert;
}

// ---------------------------------------------------------------------------
// The (2,4) criterion for 7-nodal sextics

Criterion24Result criterion_24_7nodal(const SplitFrame& frame) {
  if (frame.node_count != 7)
    throw Error(ErrorCode::kWrongNodeCount, "criterion needs 7 nodes, got " + std::to_string(frame.node_count));
  Criterion24Result out;
  const ConicParam std_param = ConicParam::standard();
  FormSpace s2 = FormSpace::plane(2), s3 = FormSpace::plane(3), s4 = FormSpace::plane(4);
  std::vector<std::size_t> all(frame.nodes.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  out.conic_dim = system_solve(s2, point_conditions(s2, frame.nodes)).dimension;
  if (out.conic_dim >= 0) {
    out.verdict = Criterion24::kFailsA;
    out.detail = "a conic passes through the 7 nodes";
    return out;
  }
  auto q4 = point_conditions(s4, frame.nodes);
  q4.push_back(cond_divisible_on_conic(s4, std_param, frame.contact_form()));
  out.quartic_dim = system_solve(s4, q4).dimension;
  if (out.quartic_dim < 2) {
    out.verdict = Criterion24::kFailsB;
    out.detail = "dim of quartics through the nodes and the contact divisor is " + std::to_string(out.quartic_dim) +
                 " < 2";
    return out;
  }
  auto c3 = point_conditions(s3, frame.nodes);
  LinCondition t3 = cond_divisible_on_conic(s3, std_param, frame.contact_form());
  for (const auto& triple : orbit_unions(frame.nodes, 3)) {
    RatMatrix coords;
    for (std::size_t i : triple)
      for (auto& row : rational_rows(frame.nodes[i].coords())) coords.push_back(row);
    if (rank_of(coords, 3) == 3) continue;
    ++out.collinear_triples;
    auto conds = pick(c3, triple);
    conds.push_back(t3);
    LinSysReport rep = system_solve(s3, conds);
    for (const auto& v : rep.kernel)
      if (!restrict_to_conic(s3.form(v), std_param).is_zero()) {
        out.verdict = Criterion24::kFailsC;
        out.detail = "a cubic through a collinear triple and the tangent points does not contain the conic";
        return out;
      }
  }
  for (const auto& five : orbit_unions(frame.nodes, 5)) {
    ++out.five_subsets;
    auto conds = pick(c3, five);
    conds.push_back(t3);
    if (system_solve(s3, conds).dimension >= 0) {
      out.verdict = Criterion24::kFailsD;
      out.detail = "a cubic passes through 5 nodes and the tangent points";
      return out;
    }
  }
  bool rational = std::all_of(frame.nodes.begin(), frame.nodes.end(), [](const ProjPoint& p) { return p.is_rational(); });
  if (!rational) {
    out.verdict = Criterion24::kInconclusive;
    out.detail = "triples and 5-sets splitting a Galois orbit are not examined";
    return out;
  }
  out.verdict = Criterion24::kHolds;
  return out;
}

// ---------------------------------------------------------------------------
// Decision procedure

namespace {

std::string dimension_evidence(const DimCheck& dc, int m, int n, int r) {
  if (dc.alpha > r) return "alpha = " + std::to_string(dc.alpha) + " > r = " + std::to_string(r);
  bool all_cn1 = true, all_cn = true;
  for (const auto& s : dc.subsets) {
    if (s.dim_cn1 >= 0) all_cn1 = false;
    if (s.dim_cn >= n - m) all_cn = false;
  }
  std::string which = dc.subsets.size() == 1 ? "the " + std::to_string(dc.alpha) + " nodes"
                                             : "any " + std::to_string(dc.alpha) + " of the " + std::to_string(r) +
                                                   " nodes";
  if (all_cn1) return "no " + curve_name(n - 1) + " through " + which;
  if (all_cn && dc.subsets.size() == 1)
    return "dim |" + std::to_string(n) + "L - nodes - T| = " + std::to_string(dc.subsets[0].dim_cn) + " < " +
           std::to_string(n - m);
  if (all_cn) return "dim |" + std::to_string(n) + "L - S - T| < " + std::to_string(n - m) + " for " + which;
  return "no subset of " + std::to_string(dc.alpha) + " nodes meets both dimension conditions";
}

}  // namespace

SplittingReport splitting_type(const Form& gamma, const Form& conic, const std::vector<ProjPoint>& nodes,
                               const SplitOptions& options) {
  return splitting_type(make_frame(gamma, conic, nodes, options.height), options);
}

SplittingReport splitting_type(const SplitFrame& frame, const SplitOptions& options) {
  SplittingReport rep;
  int d = frame.degree(), r = frame.node_count;
  if (frame.contact.kind != ContactKind::kSimpleContact) {
    rep.notes.push_back(std::string("contact profile is ") + to_string(frame.contact.kind) + ", not SimpleContact");
    return rep;
  }
  BiForm f = pullback_curve(frame.gamma);
  bool any_inconclusive = false;
  for (int m = d / 2; m >= 1; --m) {
    int n = d - m;
    TypeResult tr;
    tr.m = m;
    tr.n = n;
    if (!node_bound_filter(r, m, n, d)) {
      tr.status = TypeStatus::kExcludedByBound;
      tr.evidence = "bound " + std::to_string(2 * r) + " < " + std::to_string(m * m + n * n - d);
      rep.types.push_back(std::move(tr));
      continue;
    }
    tr.dims = necessary_dim_check(frame, m, n);
    if (!tr.dims->passes) {
      tr.status = TypeStatus::kExcludedByDimension;
      tr.evidence = dimension_evidence(*tr.dims, m, n, r);
      rep.types.push_back(std::move(tr));
      continue;
    }
    if (d == 6 && r == 7 && m == 2) {
      tr.criterion = criterion_24_7nodal(frame);
      Criterion24 v = tr.criterion->verdict;
      if (v != Criterion24::kHolds && v != Criterion24::kInconclusive) {
        tr.status = TypeStatus::kExcludedByCriterion;
        tr.evidence = std::string(to_string(v)) + ": " + tr.criterion->detail;
        rep.types.push_back(std::move(tr));
        continue;
      }
    }
    try {
      tr.factor = factor_pullback(f, m, n, options.factor);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSearchBudgetExceeded) throw;
      tr.evidence = e.what();
    }
    if (tr.factor) {
      tr.status = TypeStatus::kSplit;
      if (tr.factor->e == 0) {
        tr.certificate = extract_certificate(frame, *tr.factor, m, n);
        if (tr.certificate && !verify_certificate(frame.original_gamma, frame.original_conic, *tr.certificate))
          tr.certificate.reset();
      }
      tr.evidence = tr.factor->e == 0 ? "pullback factors over Q"
                                      : "pullback factors over Q(sqrt(" + std::to_string(tr.factor->e) + "))";
      if (tr.certificate) tr.evidence += "; certificate verified";
    } else {
      tr.status = TypeStatus::kInconclusive;
      if (tr.evidence.empty()) tr.evidence = "necessary conditions hold but no factorization was found";
      any_inconclusive = true;
    }
    rep.types.push_back(std::move(tr));
  }
  for (const auto& tr : rep.types)
    if (tr.status == TypeStatus::kSplit) {
      rep.outcome = SplitOutcome::kSplit;
      rep.m = tr.m;
      rep.n = tr.n;
      return rep;
    }
  rep.outcome = any_inconclusive ? SplitOutcome::kUndetermined : SplitOutcome::kNonSplitting;
  return rep;
}

}  // namespace nodalsplit
