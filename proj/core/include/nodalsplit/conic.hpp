#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nodalsplit/binary_form.hpp"
#include "nodalsplit/form.hpp"
#include "nodalsplit/point.hpp"

namespace nodalsplit {

enum class ConicClass { kSmooth, kRankTwo, kRankOne };
const char* to_string(ConicClass c);

// The normalized branch conic z² − 4xy.
const Form& delta2();

RatMatrix conic_matrix(const Form& q);
ConicClass classify_conic(const Form& q);

// (p0, p1, p2): binary quadratics with q(p0,p1,p2) ≡ 0.
struct ConicParam {
  std::array<BinaryForm, 3> p;

  // (s², t², 2st) on z² − 4xy.
  static ConicParam standard();
  ProjPoint point_at(const Rat& s, const Rat& t) const;
  std::vector<NFElem> point_at(const NFElem& s, const NFElem& t) const;
};

// Stereographic projection from a rational base point; p(0:1) is the base.
ConicParam parametrize_conic(const Form& q, const ProjPoint& base);

BinaryForm restrict_to_conic(const Form& f, const ConicParam& param);
// f(p0, p1, p2) for binary forms of one common degree.
BinaryForm restrict_along(const Form& f, const std::array<BinaryForm, 3>& images);
// The line through a and b, as linear binary forms s·a + t·b.
std::array<BinaryForm, 3> line_through(const std::vector<Rat>& a, const std::vector<Rat>& b);
// Tangency of the line ℓ to the smooth conic q (dual conic test).
bool line_tangent_to_conic(const Form& line, const Form& q);

enum class ContactKind { kNotContact, kContact, kEvenContact, kSimpleContact };
const char* to_string(ContactKind k);

struct ContactProfile {
  ContactKind kind = ContactKind::kNotContact;
  // Simple/even: square root of the restriction up to a unit; otherwise its radical.
  BinaryForm contact_form;
  int tangent_count = 0;
  bool smooth_at_intersections = false;
  std::vector<BinaryFactor> multiplicities;  // squarefree decomposition of the restriction
};

// Throws CommonComponent when γ vanishes on the conic.
ContactProfile contact_profile(const Form& gamma, const Form& q, const ConicParam& param);

// First point of height ≤ h (max |coordinate|) on q, in a fixed enumeration order.
std::optional<ProjPoint> find_rational_point(const Form& q, int height = 50);

struct ConicNormalization {
  RatMatrix m;      // new coordinates X' = M·X
  RatMatrix m_inv;
  Rat lambda;       // q(M⁻¹X') = λ·(z'² − 4x'y')
  ProjPoint base;
};

ConicNormalization normalize_conic(const Form& q, const ProjPoint& base);
// Searches for a base point first; throws PointNotOnConic if none of height ≤ h exists.
ConicNormalization normalize_conic(const Form& q, int height = 50);

}  // namespace nodalsplit
