#include "nodalsplit/point.hpp"

#include "nodalsplit/errors.hpp"

namespace nodalsplit {

namespace {
void check_nonzero(const std::vector<NFElem>& c) {
  if (c.size() < 2) throw Error(ErrorCode::kInvalidArgument, "projective point needs at least 2 coordinates");
  for (const auto& e : c)
    if (!e.is_zero()) return;
  throw Error(ErrorCode::kInvalidArgument, "projective point with all coordinates zero");
}
}  // namespace

ProjPoint::ProjPoint(const std::vector<Rat>& coords) {
  for (const auto& r : coords) c_.emplace_back(r);
  check_nonzero(c_);
}

ProjPoint::ProjPoint(std::vector<NFElem> coords) : c_(std::move(coords)) {
  field_ = common_field(c_);
  check_nonzero(c_);
}

ProjPoint ProjPoint::of(std::initializer_list<long> coords) {
  std::vector<Rat> v;
  for (long c : coords) v.emplace_back(c);
  return ProjPoint(v);
}

std::vector<Rat> ProjPoint::rational_coords() const {
  std::vector<Rat> out;
  for (const auto& e : c_) out.push_back(e.rational_value());
  return out;
}

bool ProjPoint::equals(const ProjPoint& other) const {
  if (size() != other.size()) return false;
  common_field(field_, other.field_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!(c_[i] * other.c_[j] - c_[j] * other.c_[i]).is_zero()) return false;
  return true;
}

ProjPoint ProjPoint::transformed(const RatMatrix& m) const {
  std::vector<NFElem> out;
  for (const auto& row : m) {
    NFElem acc = 0;
    for (std::size_t j = 0; j < size(); ++j)
      if (!row[j].is_zero()) acc = acc + NFElem(row[j]) * c_[j];
    out.push_back(acc);
  }
  return ProjPoint(std::move(out));
}

ProjPoint ProjPoint::normalized() const {
  std::size_t k = size();
  while (k-- > 0)
    if (!c_[k].is_zero()) break;
  NFElem inv = c_[k].inverse();
  std::vector<NFElem> out;
  for (const auto& e : c_) out.push_back(e * inv);
  return ProjPoint(std::move(out));
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += " : ";
    out += c_[i].to_string();
  }
  return out + ")";
}

NFElem eval_form(const Form& f, const ProjPoint& p) {
  if (static_cast<std::size_t>(f.nvars()) != p.size())
    throw Error(ErrorCode::kInvalidArgument, "form has " + std::to_string(f.nvars()) + " variables but point has " +
                                                 std::to_string(p.size()) + " coordinates");
  return f.eval(p.coords());
}

bool vanishes_at(const Form& f, const ProjPoint& p) { return eval_form(f, p).is_zero(); }

RatMatrix rational_rows(const std::vector<NFElem>& values) {
  FieldRef k = common_field(values);
  std::size_t e = k ? static_cast<std::size_t>(k->degree()) : 1;
  RatMatrix rows(e, std::vector<Rat>(values.size()));
  for (std::size_t m = 0; m < values.size(); ++m) {
    const auto& c = values[m].coords();
    for (std::size_t i = 0; i < c.size() && i < e; ++i) rows[i][m] = c[i];
  }
  return rows;
}

}  // namespace nodalsplit
