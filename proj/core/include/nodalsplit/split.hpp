#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodalsplit/binary_form.hpp"
#include "nodalsplit/conic.hpp"
#include "nodalsplit/form.hpp"
#include "nodalsplit/linsys.hpp"
#include "nodalsplit/point.hpp"

namespace nodalsplit {

int alpha_of(int m, int n);
// 2r ≥ m² + n² − d; false rules the type out.
bool node_bound_filter(int r, int m, int n, int d);

// A curve moved into coordinates where its conic is z² − 4xy.
struct SplitFrame {
  Form original_gamma, original_conic;
  ConicNormalization norm;
  Form gamma;                      // γ(M⁻¹X)
  std::vector<ProjPoint> nodes;    // M·P
  ContactProfile contact;          // against the standard parametrization
  int node_count = 0;              // r, orbits counted with their size

  const BinaryForm& contact_form() const { return contact.contact_form; }
  int degree() const { return gamma.degree(); }
};

SplitFrame make_frame(const Form& gamma, const Form& conic, const std::vector<ProjPoint>& nodes, int height = 50);

struct SubsetDims {
  std::vector<std::size_t> orbits;  // indices into the node list
  int dim_cn = -1;                  // dim|nL − S − T|
  int dim_cn1 = -1;                 // dim|(n−1)L − S|
};

struct DimCheck {
  bool passes = false;
  int alpha = 0;
  std::vector<SubsetDims> subsets;          // every union of orbits of size α
  std::vector<std::size_t> witnesses;       // indices into subsets
};

DimCheck necessary_dim_check(const SplitFrame& frame, int m, int n);

// unit·γ·l^k = c_n² − δ·c_{n−1}², k = n − m.
struct SplitCertificate {
  int m = 0, n = 0;
  std::optional<Form> line;
  Form delta;  // a scalar multiple of the conic equation
  Rat unit = 1;
  Form cn, cn1;
};

// Throws DegreeMismatch, or NotTangentLine when ℓ is not tangent to δ.
bool verify_certificate(const Form& gamma, const Form& delta, const SplitCertificate& cert);

struct FactorOptions {
  int grouping_cap = 2000;
  int specializations = 30;
  std::vector<int> quadratic_fields = {-1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10};
};

// F = unit·A·σA where A = a + √e·a_sqrt (e = 0: A = a is rational) and
// unit = unit_rat + √e·unit_sqrt. For rational factors the unit is 1 whenever
// a rational rescaling of A allows it.
struct PullbackFactor {
  int e = 0;
  BiForm a, a_sqrt;
  Rat unit_rat = 1, unit_sqrt = 0;
};

// Searches for F = A·σA with A of bidegree (m,n); nullopt when none was found.
// Throws SearchBudgetExceeded when the grouping count passes the cap.
std::optional<PullbackFactor> factor_pullback(const BiForm& f, int m, int n, const FactorOptions& options = {});
// Same search over Q only, or over Q(√e) only.
std::optional<PullbackFactor> factor_pullback_over(const BiForm& f, int m, int n, int e, const FactorOptions& options);

// Exact check of F = unit·A·σA for a factor returned above.
bool verify_pullback_factor(const BiForm& f, const PullbackFactor& factor);

// Certificate from a rational factor, in the frame's original coordinates.
std::optional<SplitCertificate> extract_certificate(const SplitFrame& frame, const PullbackFactor& factor, int m,
                                                    int n);

enum class Criterion24 { kHolds, kFailsA, kFailsB, kFailsC, kFailsD, kInconclusive };
const char* to_string(Criterion24 c);

struct Criterion24Result {
  Criterion24 verdict = Criterion24::kInconclusive;
  int conic_dim = -1;    // conics through the 7 nodes
  int quartic_dim = -1;  // quartics through the 7 nodes and the contact divisor
  int collinear_triples = 0;
  int five_subsets = 0;
  std::string detail;
};

// Throws WrongNodeCount unless the frame has exactly 7 nodes.
Criterion24Result criterion_24_7nodal(const SplitFrame& frame);

enum class TypeStatus { kExcludedByBound, kExcludedByDimension, kExcludedByCriterion, kSplit, kInconclusive };
const char* to_string(TypeStatus s);

struct TypeResult {
  int m = 0, n = 0;
  TypeStatus status = TypeStatus::kInconclusive;
  std::string evidence;
  std::optional<DimCheck> dims;
  std::optional<Criterion24Result> criterion;
  std::optional<PullbackFactor> factor;
  std::optional<SplitCertificate> certificate;
};

enum class SplitOutcome { kSplit, kNonSplitting, kUndetermined };
const char* to_string(SplitOutcome o);

struct SplittingReport {
  SplitOutcome outcome = SplitOutcome::kUndetermined;
  int m = 0, n = 0;  // the split type when outcome is kSplit
  std::vector<TypeResult> types;  // m descending
  std::vector<std::string> notes;
};

struct SplitOptions {
  int height = 50;
  FactorOptions factor;
};

SplittingReport splitting_type(const Form& gamma, const Form& conic, const std::vector<ProjPoint>& nodes,
                               const SplitOptions& options = {});
SplittingReport splitting_type(const SplitFrame& frame, const SplitOptions& options = {});

}  // namespace nodalsplit
