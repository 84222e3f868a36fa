#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indexsum/cyclotomic.hpp"
#include "indexsum/field.hpp"
#include "indexsum/index_form.hpp"
#include "indexsum/poly.hpp"

namespace indexsum {

using Rational = boost::rational<std::int64_t>;

enum class Verdict { Holds, Violated, Inconclusive };
std::string_view to_string(Verdict v);

/// Outcome of |diff / den| <= coeff * sqrt(radicand). A zero right side is
/// decided exactly by testing diff == 0.
struct Comparison {
  double lhs = 0;
  double lhs_error = 0;
  double rhs = 0;
  Verdict verdict = Verdict::Holds;
  /// Decided in integer arithmetic (|diff|^2 turned out rational).
  bool exact = false;
};

/// `scaled_diff` is den * (sum - center), exact. When |scaled_diff|^2 is a
/// rational integer (checked for p <= 1024) the comparison is done on squares
/// in exact arithmetic. Otherwise binary64 is used and Violated is returned
/// only when lhs - err > rhs + err; an overlap of the error bands gives
/// Inconclusive.
Comparison compare_bound(const CyclotomicValue& scaled_diff, std::int64_t den, Rational coeff, std::int64_t radicand);

/// Result of the same inequality under an alternative main term.
struct AltCenter {
  std::string label;
  CyclotomicValue center;
  std::int64_t center_den = 1;
  Comparison outcome;
};

struct BoundReport {
  std::string bound;
  CyclotomicValue sum;
  /// Main term is center / center_den.
  CyclotomicValue center;
  std::int64_t center_den = 1;
  double lhs = 0;
  double lhs_error = 0;
  double rhs = 0;
  /// rhs = rhs_coeff * sqrt(radicand).
  Rational rhs_coeff{0};
  std::int64_t radicand = 0;
  bool applicable = true;
  std::string reason;
  Verdict verdict = Verdict::Holds;
  bool exact_decision = false;
  double slack = 0;
  std::map<std::string, std::int64_t> params;
  std::vector<std::string> flags;
  std::vector<AltCenter> alternatives;
};

/// Fills lhs/rhs/verdict/slack from sum, center and rhs coefficient.
void settle(BoundReport& report);
AltCenter judge_alternative(const BoundReport& report, std::string label, CyclotomicValue center, std::int64_t den);

/// |S(g)| <= (n-1) sqrt(q); applicable iff p does not divide the reduced degree.
BoundReport weil_report(const FiniteField& F, const SparsePoly& g);

/// |S(g) - psi(b)(q/ell) n0| <= (ell - n0) gcd(r, (q-1)/ell) sqrt(q). The
/// main term without the psi(b) factor is reported as an alternative.
BoundReport index_report(const FiniteField& F, const SparsePoly& g);
/// Same, from an already computed form and exact sum.
BoundReport index_report(const FiniteField& F, const IndexForm& form, const CyclotomicValue& sum);

enum class CycloVariant { Full, Monomial, Nonzero };
std::string_view to_string(CycloVariant v);

/// Bounds for a piecewise map 0 -> 0, C_i -> a_i R_i. The map's offset is
/// not part of the sum. An empty support gives rhs 0 and an exact zero lhs.
BoundReport cyclo_report(const FiniteField& F, const CyclotomicMapping& map, CycloVariant variant);

struct BinomialReport {
  BoundReport report;
  std::uint64_t ell = 0;
  std::uint64_t t = 0;
  std::uint64_t u = 0;
  std::uint32_t k = 0;
  bool root_by_search = false;
  bool root_by_dlog = false;
  bool root_exists = false;
};

/// x^n + a x^r with q-1 >= n > r >= 1, a != 0 (BadExponents otherwise).
/// Root existence is decided by searching the ell-th roots of unity and by
/// the divisibility (q-1)u/ell | dlog(-a); both are recorded.
BinomialReport binomial_report(const FiniteField& F, std::uint64_t n, std::uint64_t r, FieldElement a);

}  // namespace indexsum
