#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "indexsum/bounds.hpp"
#include "indexsum/field.hpp"
#include "indexsum/poly.hpp"
#include "indexsum/splitmix.hpp"

namespace indexsum {

enum class FamilyKind { Monomials, Binomials, Trinomials, Random, Explicit };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Binomials;
  /// Monomials/binomials/trinomials: skip members whose lowest exponent r has gcd(r, p) > 1.
  bool coprime_r = true;
  /// Monomials/binomials/trinomials: highest exponent (0 = q-1).
  std::uint64_t max_degree = 0;
  /// Random: draws per field and degree cap.
  std::uint64_t count = 100;
  /// Explicit: polynomials in CLI syntax.
  std::vector<std::string> polys;
};

struct CampaignConfig {
  std::vector<std::string> fields;
  FamilySpec family;
  /// Any of weil, index, binomial, cyclo.
  std::vector<std::string> bounds{"index"};
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
};

/// ConfigError on unknown keys' values, missing fields, or bad types.
CampaignConfig parse_campaign(const nlohmann::json& j);

struct CampaignRow {
  std::string field;
  std::string poly;
  std::string bound;
  bool applicable = true;
  std::int64_t ell = 0, r = 0, s = 0, n0 = 0;
  double lhs = 0;
  double rhs = 0;
  Verdict verdict = Verdict::Holds;
  double slack = 0;
  /// Exact sum vector; always filled, and always written for violated rows.
  std::vector<std::int64_t> sum;
};

struct CampaignSummary {
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t inconclusive = 0;
  /// Rows whose hypotheses fail; not counted in the other three.
  std::uint64_t inapplicable = 0;
  std::uint64_t polynomials = 0;

  friend bool operator==(const CampaignSummary&, const CampaignSummary&) = default;
};

struct CampaignReport {
  std::vector<CampaignRow> rows;
  CampaignSummary summary;
  std::vector<CampaignSummary> per_field;
};

/// Field element from one draw: v mod q, with 0 -> 0 and v -> gamma^{v-1}.
FieldElement random_element(const FiniteField& F, SplitMix64& rng);
/// Coefficients of x^0..x^deg from `rng`, leading one forced nonzero via gamma^{v mod (q-1)}.
SparsePoly random_poly(const FiniteField& F, SplitMix64& rng, std::uint64_t deg);

/// Members of a family over F, in a fixed order. Random draws use a stream
/// seeded by seed ^ q so fields are independent of list order.
std::vector<SparsePoly> enumerate_family(const FiniteField& F, const FamilySpec& family, std::uint64_t seed);

/// Rows are ordered by field (config order), polynomial (family order), bound
/// (config order) regardless of thread count.
CampaignReport run_campaign(const CampaignConfig& config);

/// Header: field,poly,bound,applicable,ell,r,s,n0,lhs,rhs,holds,slack,sum.
void write_csv(std::ostream& os, const CampaignReport& report);
nlohmann::json summary_json(const CampaignReport& report);

}  // namespace indexsum
