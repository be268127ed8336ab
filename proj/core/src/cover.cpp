#include "nodalsplit/cover.hpp"

#include <map>

#include "nodalsplit/errors.hpp"
#include "nodalsplit/matrix.hpp"

namespace nodalsplit {

const CoverContext& cover_context() {
  static const CoverContext ctx = [] {
    BiForm s = BiForm::variable(0), t = BiForm::variable(1), u = BiForm::variable(2), v = BiForm::variable(3);
    return CoverContext{parse_form("z^2-4*x*y", plane_vars()), s * v - t * u, {s * u, t * v, s * v + t * u}};
  }();
  return ctx;
}

BiForm pullback_curve(const Form& gamma) {
  if (gamma.nvars() != 3) throw Error(ErrorCode::kInvalidArgument, "pullback needs a plane form");
  return gamma.substitute(cover_context().map);
}

BiForm involution_biform(const BiForm& f) { return f.swap_factors(); }

BiForm ramification_form() { return cover_context().r; }

namespace {

// Solve Σ c_i·images[i] = target for rational c_i.
std::optional<std::vector<Rat>> solve_combination(const std::vector<BiForm>& images, const BiForm& target) {
  std::map<Exponent, std::size_t, GrlexGreater> index;
  auto slot = [&](const Exponent& e) { return index.emplace(e, index.size()).first->second; };
  for (const auto& img : images)
    for (const auto& [e, c] : img.terms()) slot(e);
  for (const auto& [e, c] : target.terms()) slot(e);
  std::size_t n = images.size();
  RatMatrix rows(index.size(), std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [e, c] : images[i].terms()) rows[index[e]][i] = c;
  for (const auto& [e, c] : target.terms()) rows[index[e]][n] = -c;
  for (const auto& k : eliminate(rows, n + 1).kernel) {
    if (k[n].is_zero()) continue;
    std::vector<Rat> out(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
    for (auto& c : out) c /= k[n];
    return out;
  }
  return std::nullopt;
}

std::optional<Form> descend_impl(const BiForm& f, bool over_r) {
  int d = f.d1() - (over_r ? 1 : 0);
  if (f.d1() != f.d2() || d < 0) return std::nullopt;
  std::vector<Exponent> basis = monomial_basis(3, d);
  std::vector<BiForm> images;
  for (const auto& e : basis) {
    BiForm img = pullback_curve(Form::monomial(plane_vars(), e));
    images.push_back(over_r ? img * cover_context().r : img);
  }
  if (f.is_zero()) return Form(plane_vars(), d);
  auto c = solve_combination(images, f);
  if (!c) return std::nullopt;
  return Form::from_coefficients(plane_vars(), d, basis, *c);
}

}  // namespace

std::optional<Form> descend(const BiForm& f) { return descend_impl(f, false); }
std::optional<Form> descend_over_ramification(const BiForm& f) { return descend_impl(f, true); }

}  // namespace nodalsplit
