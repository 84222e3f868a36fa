#include "indexsum/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "indexsum/error.hpp"

namespace indexsum {

CyclotomicValue::CyclotomicValue(std::uint32_t p) : p_(p), coeffs_(p, 0) {}

CyclotomicValue::CyclotomicValue(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != p_) throw Error(ErrorCode::PrimeMismatch, "coefficient vector length must equal p");
  canonicalize();
}

CyclotomicValue CyclotomicValue::unit(std::uint32_t p, std::uint32_t k) {
  CyclotomicValue v(p);
  v.coeffs_[k % p] = 1;
  v.canonicalize();
  return v;
}

CyclotomicValue CyclotomicValue::integer(std::uint32_t p, std::int64_t n) {
  CyclotomicValue v(p);
  v.coeffs_[0] = n;
  return v;
}

void CyclotomicValue::canonicalize() {
  const std::int64_t top = coeffs_[p_ - 1];
  if (top == 0) return;
  for (auto& c : coeffs_) c -= top;
}

bool CyclotomicValue::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<std::int64_t> CyclotomicValue::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

CyclotomicValue CyclotomicValue::rotate(std::int64_t k) const {
  const auto p = static_cast<std::int64_t>(p_);
  const std::int64_t shift = ((k % p) + p) % p;
  std::vector<std::int64_t> out(p_, 0);
  for (std::int64_t i = 0; i < p; ++i) out[(i + shift) % p] = coeffs_[i];
  return CyclotomicValue(p_, std::move(out));
}

CyclotomicValue CyclotomicValue::galois(std::uint32_t j) const {
  std::vector<std::int64_t> out(p_, 0);
  for (std::uint64_t i = 0; i < p_; ++i) out[(i * j) % p_] += coeffs_[i];
  return CyclotomicValue(p_, std::move(out));
}

CyclotomicValue cv_char(const FiniteField& F, FieldElement x) { return CyclotomicValue::unit(F.p(), F.abs_trace(x)); }

CyclotomicValue cv_add(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.prime() != b.prime()) throw Error(ErrorCode::PrimeMismatch, "adding values of different cyclotomic fields");
  std::vector<std::int64_t> out(a.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs()[i];
  return CyclotomicValue(a.prime(), std::move(out));
}

CyclotomicValue cv_sub(const CyclotomicValue& a, const CyclotomicValue& b) { return cv_add(a, cv_scale(b, -1)); }

CyclotomicValue cv_scale(const CyclotomicValue& a, std::int64_t n) {
  std::vector<std::int64_t> out(a.coeffs());
  for (auto& c : out) c *= n;
  return CyclotomicValue(a.prime(), std::move(out));
}

Magnitude cv_abs(const CyclotomicValue& a) {
  const std::uint32_t p = a.prime();
  double re = 0, im = 0;
  std::int64_t max_abs = 0;
  for (std::uint32_t i = 0; i < p; ++i) {
    const std::int64_t c = a.coeffs()[i];
    if (c == 0) continue;
    max_abs = std::max<std::int64_t>(max_abs, c < 0 ? -c : c);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(p);
    re += static_cast<double>(c) * std::cos(angle);
    im += static_cast<double>(c) * std::sin(angle);
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double err = std::max(8.0 * p * static_cast<double>(max_abs) * eps, eps);
  return {std::hypot(re, im), err};
}

CyclotomicValue cv_norm(const CyclotomicValue& a) {
  const std::uint32_t p = a.prime();
  std::vector<__int128> acc(p, 0);
  const auto& c = a.coeffs();
  for (std::uint32_t i = 0; i < p; ++i) {
    if (c[i] == 0) continue;
    for (std::uint32_t j = 0; j < p; ++j) {
      if (c[j] == 0) continue;
      acc[(i + p - j) % p] += static_cast<__int128>(c[i]) * c[j];
    }
  }
  std::vector<std::int64_t> out(p);
  const __int128 top = acc[p - 1];
  for (std::uint32_t i = 0; i < p; ++i) {
    const __int128 v = acc[i] - top;
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::NonIntegerResult, "norm overflows 64-bit coefficients");
    }
    out[i] = static_cast<std::int64_t>(v);
  }
  return CyclotomicValue(p, std::move(out));
}

}  // namespace indexsum
