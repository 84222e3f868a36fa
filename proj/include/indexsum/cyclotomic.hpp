#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "indexsum/field.hpp"

namespace indexsum {

/// Exact element of Z[zeta_p], stored as coefficients of zeta_p^0..zeta_p^{p-1}.
/// Canonical form has coeffs[p-1] == 0 (1 + zeta + ... + zeta^{p-1} = 0), so
/// equality of values is equality of vectors.
class CyclotomicValue {
 public:
  CyclotomicValue() : CyclotomicValue(2) {}
  explicit CyclotomicValue(std::uint32_t p);
  CyclotomicValue(std::uint32_t p, std::vector<std::int64_t> coeffs);

  static CyclotomicValue unit(std::uint32_t p, std::uint32_t k);
  static CyclotomicValue integer(std::uint32_t p, std::int64_t n);

  std::uint32_t prime() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// The rational integer this value equals, if it is one.
  std::optional<std::int64_t> as_integer() const;

  /// this * zeta^k.
  CyclotomicValue rotate(std::int64_t k) const;
  /// Galois conjugate zeta -> zeta^j, j prime to p.
  CyclotomicValue galois(std::uint32_t j) const;
  /// Complex conjugate zeta -> zeta^{-1}.
  CyclotomicValue conj() const { return galois(p_ - 1); }

  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

 private:
  void canonicalize();

  std::uint32_t p_;
  std::vector<std::int64_t> coeffs_;
};

struct Magnitude {
  double value = 0;
  double error = 0;
};

/// psi(x) = zeta_p^{Tr(x)} with Tr the absolute trace.
CyclotomicValue cv_char(const FiniteField& F, FieldElement x);
/// PrimeMismatch when the primes differ.
CyclotomicValue cv_add(const CyclotomicValue& a, const CyclotomicValue& b);
CyclotomicValue cv_sub(const CyclotomicValue& a, const CyclotomicValue& b);
CyclotomicValue cv_scale(const CyclotomicValue& a, std::int64_t n);
/// |value| in binary64 with a forward error bound of 8 p max|coeff| eps.
Magnitude cv_abs(const CyclotomicValue& a);
/// a * conj(a), exact. Real; a rational integer when |a|^2 is rational.
CyclotomicValue cv_norm(const CyclotomicValue& a);

/// Accumulates zeta^t counts; value() canonicalizes once at the end.
class TraceHistogram {
 public:
  explicit TraceHistogram(std::uint32_t p) : p_(p), counts_(p, 0) {}
  void add(std::uint32_t trace) { ++counts_[trace]; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  CyclotomicValue value() const& { return CyclotomicValue(p_, counts_); }
  CyclotomicValue value() && { return CyclotomicValue(p_, std::move(counts_)); }

 private:
  std::uint32_t p_;
  std::vector<std::int64_t> counts_;
};

}  // namespace indexsum
