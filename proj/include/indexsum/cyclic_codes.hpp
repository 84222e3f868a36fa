#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "indexsum/artin_schreier.hpp"
#include "indexsum/bounds.hpp"

namespace indexsum {

/// Cyclic code of length N over F_q in trace form: c_a = (Tr(g_a(beta^i)))_i
/// with g_a(x) = sum_{j in J} a_j x^j, beta = gamma^k, N k = q^m - 1.
struct CodeSpec {
  std::shared_ptr<const ASContext> ctx;
  std::uint64_t N = 0;
  std::uint64_t k = 0;
  FieldElement beta{};
  /// Check set, sorted, distinct, members < N.
  std::vector<std::uint64_t> J;

  std::uint64_t u() const { return J.size(); }
};

/// BadCheckSet unless N | q^m - 1, gcd(N, q) = 1 and J is within [0, N).
CodeSpec make_code(std::uint64_t q, unsigned m, std::uint64_t N, std::vector<std::uint64_t> J);

struct CodewordRecord {
  std::vector<FieldElement> a;
  /// Coordinates in F_q, as elements of the subfield of F_{q^m}.
  std::vector<FieldElement> word;
  std::int64_t weight = 0;
  std::int64_t z = 0;
};

/// g_a(x) over F_{q^m}.
SparsePoly codeword_poly(const CodeSpec& code, std::span<const FieldElement> a);

/// Evaluates all N coordinates directly.
CodewordRecord trace_codeword(const CodeSpec& code, std::span<const FieldElement> a);

/// Weight from the union-of-cosets count: E_k = {x != 0 : Tr(g_a(x^k)) = 0}
/// has k z(a) elements, so w(a) = (q^m - 1 - |E_k|) / k. NonDivisible when k
/// does not divide q^m - 1 - |E_k|.
std::int64_t weight_via_Ek(const CodeSpec& code, std::span<const FieldElement> a);

struct MinWeightResult {
  std::optional<std::int64_t> min_weight;
  std::vector<FieldElement> argmin;
  bool exhaustive = false;
  std::uint64_t examined = 0;
  std::uint64_t distinct_words = 0;
};

/// Exhaustive over (F_{q^m})^u when (q^m)^u <= budget, else `budget` seeded
/// uniform samples with exhaustive = false. Codewords are deduplicated; the
/// zero word never counts. No nonzero word gives an empty min_weight.
MinWeightResult min_weight_search(const CodeSpec& code, std::uint64_t budget, std::uint64_t seed = 0);

struct CodeWeightReport {
  BoundReport report;
  std::int64_t weight = 0;
  /// Case (a): 0 in J and Tr(b) = 0. Otherwise case (b).
  bool case_a = false;
  double window_lo = 0;
  double window_hi = 0;
  /// Whether reading Tr(b) as the absolute trace would switch the case.
  bool trace_reading_matters = false;
};

/// Window around w(a) from the index form of g_a(x^k) over F_{q^m}.
/// BadCheckSet if a nonzero member of J shares a factor with q; ZeroCodeword
/// for a = 0; ConstantPolynomial when only a_0 is nonzero.
CodeWeightReport code_weight_report(const CodeSpec& code, std::span<const FieldElement> a);

/// constant - sqrt_coeff * sqrt(radicand), exact.
struct WeightFloor {
  Rational constant{0};
  Rational sqrt_coeff{0};
  std::int64_t radicand = 0;
  std::uint64_t r = 0;
  std::uint64_t ell = 0;

  double value() const;
  /// floor <= w, decided on squares.
  bool at_most(std::int64_t w) const;
};

/// (q-1) q^{m-1}/(k ell) - (q-1)(ell-1) gcd(r, (q^m-1)/ell) q^{m/2}/(k q) - 1/k,
/// valid when k J = {r, r + (q^m-1)/ell, ...} with 0 < r < (q^m-1)/ell.
/// ShapeMismatch otherwise; BadCheckSet if a member of J shares a factor with q.
WeightFloor min_weight_floor(const CodeSpec& code);

}  // namespace indexsum
