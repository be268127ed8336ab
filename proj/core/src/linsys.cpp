#include "nodalsplit/linsys.hpp"

#include "nodalsplit/errors.hpp"
#include "nodalsplit/matrix.hpp"

namespace nodalsplit {

FormSpace FormSpace::plane(int degree) { return {Kind::kPlane, degree, 0, monomial_basis(3, degree)}; }
FormSpace FormSpace::space(int degree) { return {Kind::kSpace, degree, 0, monomial_basis(4, degree)}; }
FormSpace FormSpace::bi(int d1, int d2) { return {Kind::kBi, d1, d2, bimonomial_basis(d1, d2)}; }

std::string FormSpace::describe() const {
  switch (kind) {
    case Kind::kPlane: return "plane forms of degree " + std::to_string(d1);
    case Kind::kSpace: return "forms on P3 of degree " + std::to_string(d1);
    case Kind::kBi: return "biforms of bidegree (" + std::to_string(d1) + "," + std::to_string(d2) + ")";
  }
  return "";
}

Form FormSpace::form(const std::vector<Rat>& coeffs) const {
  if (kind == Kind::kBi) throw Error(ErrorCode::kInvalidArgument, "biform space has no plane forms");
  return Form::from_coefficients(kind == Kind::kPlane ? plane_vars() : space_vars(), d1, basis, coeffs);
}

BiForm FormSpace::biform(const std::vector<Rat>& coeffs) const {
  if (kind != Kind::kBi) throw Error(ErrorCode::kInvalidArgument, "not a biform space");
  return BiForm::from_coefficients(d1, d2, basis, coeffs);
}

namespace {

std::size_t nvars_of(const FormSpace& space) { return space.kind == FormSpace::Kind::kSpace ? 4 : 3; }

void check_point(const FormSpace& space, const ProjPoint& p) {
  if (space.kind == FormSpace::Kind::kBi) throw Error(ErrorCode::kInvalidArgument, "use cond_bipoint on P1xP1");
  if (p.size() != nvars_of(space))
    throw Error(ErrorCode::kInvalidArgument, "point " + p.to_string() + " does not match " + space.describe());
}

// powers[i][k] = coordinate i to the k.
std::vector<std::vector<NFElem>> power_table(const std::vector<NFElem>& c, int max) {
  std::vector<std::vector<NFElem>> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i].push_back(NFElem(1));
    for (int k = 1; k <= max; ++k) out[i].push_back(out[i].back() * c[i]);
  }
  return out;
}

NFElem monomial_value(const Exponent& e, const std::vector<std::vector<NFElem>>& pw) {
  NFElem v(1);
  for (std::size_t i = 0; i < pw.size(); ++i)
    if (e[i]) v = v * pw[i][e[i]];
  return v;
}

}  // namespace

LinCondition cond_point(const FormSpace& space, const ProjPoint& p) {
  check_point(space, p);
  auto pw = power_table(p.coords(), space.d1);
  std::vector<NFElem> values;
  for (const auto& e : space.basis) values.push_back(monomial_value(e, pw));
  return {"through " + p.to_string(), rational_rows(values)};
}

LinCondition cond_singular(const FormSpace& space, const ProjPoint& p) {
  check_point(space, p);
  auto pw = power_table(p.coords(), space.d1);
  LinCondition out{"singular at " + p.to_string(), {}};
  for (std::size_t i = 0; i < nvars_of(space); ++i) {
    std::vector<NFElem> values;
    for (auto e : space.basis) {
      if (e[i] == 0) {
        values.emplace_back(0);
        continue;
      }
      Rat k(static_cast<long>(e[i]));
      --e[i];
      values.push_back(NFElem(k) * monomial_value(e, pw));
    }
    for (auto& row : rational_rows(values)) out.rows.push_back(std::move(row));
  }
  return out;
}

LinCondition cond_divisible_on_conic(const FormSpace& space, const ConicParam& param, const BinaryForm& t) {
  if (space.kind != FormSpace::Kind::kPlane) throw Error(ErrorCode::kInvalidArgument, "conic conditions need plane forms");
  if (t.degree() > 2 * space.d1)
    throw Error(ErrorCode::kDegreeMismatch, "divisor degree exceeds the restriction degree");
  LinCondition out{"divisible by " + t.to_string() + " on the conic", {}};
  if (t.degree() == 0) return out;
  std::array<std::vector<BinaryForm>, 3> pw;
  for (std::size_t i = 0; i < 3; ++i) {
    pw[i].push_back(BinaryForm(0, {Rat(1)}));
    for (int k = 1; k <= space.d1; ++k) pw[i].push_back(pw[i].back() * param.p[i]);
  }
  out.rows.assign(static_cast<std::size_t>(t.degree()), std::vector<Rat>(space.size()));
  for (std::size_t m = 0; m < space.size(); ++m) {
    const Exponent& e = space.basis[m];
    std::vector<Rat> res = divisibility_residue(pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]], t);
    for (std::size_t k = 0; k < res.size(); ++k) out.rows[k][m] = res[k];
  }
  return out;
}

LinCondition cond_bipoint(const FormSpace& space, const ProjPoint& st, const ProjPoint& uv) {
  if (space.kind != FormSpace::Kind::kBi) throw Error(ErrorCode::kInvalidArgument, "cond_bipoint needs a biform space");
  if (st.size() != 2 || uv.size() != 2) throw Error(ErrorCode::kInvalidArgument, "P1 points need two coordinates");
  std::vector<NFElem> c = st.coords();
  c.insert(c.end(), uv.coords().begin(), uv.coords().end());
  auto pw = power_table(c, std::max(space.d1, space.d2));
  std::vector<NFElem> values;
  for (const auto& e : space.basis) values.push_back(monomial_value(e, pw));
  return {"through (" + st.to_string() + ", " + uv.to_string() + ")", rational_rows(values)};
}

LinSysReport system_solve(const FormSpace& space, const std::vector<LinCondition>& conditions) {
  LinSysReport out;
  out.space = space;
  RatMatrix rows;
  for (const auto& c : conditions) {
    out.labels.push_back(c.label);
    for (const auto& r : c.rows) {
      if (r.size() != space.size())
        throw Error(ErrorCode::kInvalidArgument, "condition '" + c.label + "' has rows of the wrong length");
      rows.push_back(r);
    }
  }
  out.equations = rows.size();
  Elimination e = eliminate(rows, space.size());
  out.rank = e.rank;
  out.dimension = static_cast<int>(space.size()) - e.rank - 1;
  out.kernel = std::move(e.kernel);
  return out;
}

bool general_position_p1xp1(const std::vector<std::pair<ProjPoint, ProjPoint>>& points) {
  for (const auto& [a, b] : points)
    if (!a.is_rational() || !b.is_rational() || a.size() != 2 || b.size() != 2)
      throw Error(ErrorCode::kInvalidArgument, "general position on P1xP1 is tested for rational points");
  std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    int same_first = 0, same_second = 0;
    for (std::size_t j = 0; j < n; ++j) {
      // a repeated point imposes one condition, not two
      if (j != i && points[i].first.equals(points[j].first) && points[i].second.equals(points[j].second)) return false;
      if (points[i].first.equals(points[j].first)) ++same_first;
      if (points[i].second.equals(points[j].second)) ++same_second;
    }
    if (same_first > 2 || same_second > 2) return false;
  }
  FormSpace s11 = FormSpace::bi(1, 1);
  std::vector<RatMatrix> rows;
  for (const auto& [a, b] : points) rows.push_back(cond_bipoint(s11, a, b).rows);
  if (n < 5) return true;
  std::vector<std::size_t> idx = {0, 1, 2, 3, 4};
  while (true) {
    RatMatrix m;
    for (std::size_t k : idx) m.push_back(rows[k][0]);
    if (rank_of(m, 4) < 4) return false;
    // next 5-combination in lexicographic order
    int k = 4;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - 5 + static_cast<std::size_t>(k)) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

}  // namespace nodalsplit
