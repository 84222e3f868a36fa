#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "indexsum/bounds.hpp"
#include "indexsum/field.hpp"
#include "indexsum/poly.hpp"

namespace indexsum {

/// F_q and F_{q^m} built as one field F_{p^{e m}}; F_q is identified with the
/// subfield fixed by x -> x^q via a root of the base modulus.
struct ASContext {
  std::shared_ptr<const FiniteField> base;
  std::shared_ptr<const FiniteField> ext;
  unsigned m = 1;
  unsigned base_degree = 1;
  std::uint32_t q = 2;
  /// Image in ext of the base field's polynomial-basis generator.
  FieldElement embed_generator{};
  /// Tr_{F_{q^m}/F_q} indexed by ext element code (built via F_p-linearity).
  std::vector<std::uint32_t> rel_trace;
  /// Representatives of F_q^* / F_p^*, as ext elements.
  std::vector<FieldElement> char_reps;

  FieldElement embed(FieldElement base_element) const;
  FieldElement relative_trace(FieldElement x) const;
};

/// q a prime power, m >= 1.
std::shared_ptr<const ASContext> make_as_context(std::uint64_t q, unsigned m, FieldLimits limits = {});

/// y^q - y = g(x) over F_{q^m}.
struct ASInstance {
  std::shared_ptr<const ASContext> ctx;
  SparsePoly g;
};

/// q * #{x : Tr(g(x)) = 0}.
std::int64_t as_count_direct(const ASInstance& inst);
/// sum over all q additive characters of F_q (trivial one included) of
/// sum_x psi(Tr(g(x))). Characters c and j c, j in F_p^*, share one pass via
/// Galois conjugation. NonIntegerResult if the total is not in Z.
std::int64_t as_count_charsum(const ASInstance& inst);

/// |N - q^m - (q-1) q^m n0/ell| <= (q-1)(ell-n0) gcd(r, (q^m-1)/ell) q^{m/2},
/// with the main term adjusted for b = g(0) when Tr(b) != 0 (the unadjusted
/// one is kept as an alternative).
BoundReport as_report(const ASInstance& inst);
BoundReport as_report(const ASInstance& inst, std::int64_t count);

/// x^n + a x^r over F_{q^m}: interval q^m +- (q-1) ell t q^{m/2} without an
/// ell-th root of unity root, else centered at q^m + (q-1) q^m u/ell with
/// radius (q-1)(ell-1) t q^{m/2}.
BinomialReport as_binomial_report(const std::shared_ptr<const ASContext>& ctx, std::uint64_t n, std::uint64_t r,
                                  FieldElement a);
BinomialReport as_binomial_report(const std::shared_ptr<const ASContext>& ctx, std::uint64_t n, std::uint64_t r,
                                  FieldElement a, std::int64_t count);

}  // namespace indexsum
