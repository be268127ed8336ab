#pragma once

#include <utility>
#include <vector>

#include "nodalsplit/number_field.hpp"
#include "nodalsplit/upoly.hpp"

namespace nodalsplit {

inline constexpr int kMaxFactorDegree = 24;

template <class K>
struct FactorTerm {
  UPoly<K> factor;  // monic
  int multiplicity;
};

struct Factorization {
  Rat unit;  // leading coefficient of the input
  std::vector<FactorTerm<Rat>> factors;  // sorted by (degree, coefficients)

  QPoly expand() const;
};

// Monic squarefree P_i of positive degree with p = lc·Π P_i^i.
std::vector<FactorTerm<Rat>> squarefree_decomposition(const QPoly& p);

// Complete factorization over Q. Throws DegreeTooLarge above max_degree.
Factorization upoly_factor(const QPoly& p, int max_degree = kMaxFactorDegree);

bool is_irreducible(const QPoly& p);

// Factorization of f over K (monic irreducible factors in K[x]) via norms.
std::vector<FactorTerm<NFElem>> factor_over_field(const UPoly<NFElem>& f, const FieldRef& k,
                                                  int max_degree = kMaxFactorDegree);

// n = q²·m with |m| free of square factors up to a trial-division bound.
std::pair<Integer, Integer> split_square_factor(const Integer& n);

// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Determinant by Gaussian elimination over Q.
Rat determinant(std::vector<std::vector<Rat>> m);

}  // namespace nodalsplit
