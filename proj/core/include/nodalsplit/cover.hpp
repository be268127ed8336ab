#pragma once

#include <optional>
#include <vector>

#include "nodalsplit/form.hpp"

namespace nodalsplit {

// P¹×P¹ → P², (s:t, u:v) ↦ (su : tv : sv+tu), branched along z² − 4xy.
struct CoverContext {
  Form delta;               // z² − 4xy
  BiForm r;                 // sv − tu
  std::vector<BiForm> map;  // images of x, y, z
};
const CoverContext& cover_context();

BiForm pullback_curve(const Form& gamma);
BiForm involution_biform(const BiForm& f);
BiForm ramification_form();

// The plane form c with π*c = F, if F is a pullback.
std::optional<Form> descend(const BiForm& f);
// The plane form c with π*c · r = F, if one exists.
std::optional<Form> descend_over_ramification(const BiForm& f);

}  // namespace nodalsplit
