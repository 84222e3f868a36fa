#pragma once

#include <cstdint>
#include <vector>

#include "indexsum/field.hpp"
#include "indexsum/poly.hpp"

namespace indexsum {

/// Unique decomposition g(x) = a * x^r * f(x^s) + b of a nonconstant reduced
/// polynomial, with s = (q-1)/ell, f monic and gcd(exponents of f, ell) = 1.
struct IndexForm {
  FieldElement b{};
  FieldElement a{};
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t ell = 0;
  SparsePoly f;
  /// #{0 <= i < ell : f(zeta^i) = 0}, zeta = gamma^s.
  std::uint64_t n0 = 0;
  /// Reduced degree of g.
  std::uint64_t degree = 0;
};

struct Branch {
  FieldElement a{};
  SparsePoly R;
};

/// Piecewise map: 0 -> 0, x in C_i = gamma^i C_0 -> a_i R_i(x), where C_0 is
/// the subgroup of nonzero d-th powers. `offset` is an additive constant kept
/// alongside the map (the b of an index form); the map itself ignores it.
struct CyclotomicMapping {
  std::uint64_t d = 1;
  std::vector<Branch> branches;
  FieldElement offset{};

  /// {i : a_i != 0}.
  std::vector<std::uint64_t> support() const;
  std::uint64_t n0() const { return d - support().size(); }
};

/// ConstantPolynomial when g is constant after canonicalization.
IndexForm index_form(const FiniteField& F, const SparsePoly& g);
/// a * x^r * f(x^s) + b.
SparsePoly reconstruct(const FiniteField& F, const IndexForm& form);

/// d = ell, R_i = x^r, a_i = a * f(zeta^i); offset = b.
CyclotomicMapping mapping_from_index(const FiniteField& F, const IndexForm& form);
/// (1/d) sum_j sum_i a_i zeta^{-ji} x^{js} R_i(x), canonicalized and forced to
/// vanish at 0 (any constant c becomes c x^{q-1}). The offset is not added.
SparsePoly poly_from_mapping(const FiniteField& F, const CyclotomicMapping& map);
/// BranchMismatch when the branch count is not d or d does not divide q-1.
FieldElement mapping_eval(const FiniteField& F, const CyclotomicMapping& map, FieldElement x);
void validate_mapping(const FiniteField& F, const CyclotomicMapping& map);

}  // namespace indexsum
