#pragma once

#include "indexsum/cyclotomic.hpp"
#include "indexsum/field.hpp"
#include "indexsum/index_form.hpp"
#include "indexsum/poly.hpp"

namespace indexsum {

/// sum over x in F_q of psi(g(x)), exact. Traversal is 0 then gamma^0..gamma^{q-2}.
CyclotomicValue char_sum_full(const FiniteField& F, const SparsePoly& g);

/// Same sum restricted to x != 0.
CyclotomicValue char_sum_nonzero(const FiniteField& F, const SparsePoly& g);

/// Independent route through the coset decomposition: psi(b) times
/// [1 + sum_i sum_{y in C_i} psi(a_i R_i(y))]. Walks each coset
/// C_i = {gamma^{i + d t}} directly so no division by d is needed.
CyclotomicValue char_sum_via_cosets(const FiniteField& F, const CyclotomicMapping& map, FieldElement b);

/// Same sum over a contiguous slice of the gamma-ordered traversal: index 0 is
/// x = 0, index j >= 1 is gamma^{j-1}. Merging slices with cv_add reproduces
/// char_sum_full exactly.
CyclotomicValue char_sum_range(const FiniteField& F, const SparsePoly& g, std::uint64_t begin, std::uint64_t end);

}  // namespace indexsum
