#include <doctest.h>

#include <numeric>
#include <sstream>

#include "indexsum/charsum.hpp"
#include "indexsum/error.hpp"
#include "indexsum/sweep.hpp"

using namespace indexsum;
using nlohmann::json;

namespace {

std::string csv_of(const CampaignReport& rep) {
  std::ostringstream os;
  write_csv(os, rep);
  return os.str();
}

CampaignConfig config(std::vector<std::string> fields, FamilyKind kind, std::vector<std::string> bounds,
                      unsigned threads = 1) {
  CampaignConfig cfg;
  cfg.fields = std::move(fields);
  cfg.family.kind = kind;
  cfg.bounds = std::move(bounds);
  cfg.seed = 42;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("random elements follow the documented mapping") {
  const FiniteField F = FiniteField::make(3, 2);
  SplitMix64 a(17), b(17);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t v = b.next() % 9;
    CHECK(random_element(F, a) == (v == 0 ? F.zero() : F.gamma_pow(static_cast<std::int64_t>(v - 1))));
  }
  SplitMix64 c(3), d(3);
  const SparsePoly g = random_poly(F, c, 4);
  CHECK(g.degree() == 4);
  std::vector<Term> terms;
  for (std::uint64_t e = 0; e < 4; ++e) terms.push_back({e, random_element(F, d)});
  terms.push_back({4, F.gamma_pow(static_cast<std::int64_t>(d.next() % 8))});
  CHECK(g == make_poly(F, terms));
}

TEST_CASE("family enumeration") {
  const FiniteField F7 = FiniteField::make(7, 1);
  FamilySpec fam;
  fam.kind = FamilyKind::Binomials;
  CHECK(enumerate_family(F7, fam, 0).size() == 15 * 6);
  fam.kind = FamilyKind::Monomials;
  CHECK(enumerate_family(F7, fam, 0).size() == 6 * 6);
  fam.kind = FamilyKind::Trinomials;
  CHECK(enumerate_family(F7, fam, 0).size() == 20 * 36);

  const FiniteField F9 = FiniteField::make(3, 2);
  fam.kind = FamilyKind::Binomials;
  // r in {1,2,4,5,7} (prime to 3), n from r+1 to 8, a in F_9^*.
  std::uint64_t pairs = 0;
  for (std::uint64_t r = 1; r < 8; ++r) pairs += r % 3 != 0 ? 8 - r : 0;
  CHECK(enumerate_family(F9, fam, 0).size() == pairs * 8);
  fam.coprime_r = false;
  CHECK(enumerate_family(F9, fam, 0).size() == 28 * 8);

  fam.kind = FamilyKind::Random;
  fam.count = 20;
  const auto r1 = enumerate_family(F9, fam, 5), r2 = enumerate_family(F9, fam, 5), r3 = enumerate_family(F9, fam, 6);
  CHECK(r1.size() == 20);
  CHECK(r1 == r2);
  CHECK(r1 != r3);

  fam.kind = FamilyKind::Explicit;
  fam.polys = {"x^5+x^3+x", "x^2"};
  CHECK(enumerate_family(F7, fam, 0) == std::vector{parse_poly(F7, "x^5+x^3+x"), parse_poly(F7, "x^2")});
}

TEST_CASE("config parsing") {
  const json good = {{"fields", {"q=7", "q=3^3"}},
                     {"family", {{"kind", "binomials"}}},
                     {"bounds", {"weil", "index", "binomial"}},
                     {"seed", 42},
                     {"out", "report.csv"}};
  const CampaignConfig cfg = parse_campaign(good);
  CHECK(cfg.fields.size() == 2);
  CHECK(cfg.family.kind == FamilyKind::Binomials);
  CHECK(cfg.bounds.size() == 3);
  CHECK(cfg.seed == 42);
  CHECK(cfg.out == "report.csv");

  auto bad = [](json j) {
    try {
      parse_campaign(j);
    } catch (const Error& e) {
      return e.code() == ErrorCode::ConfigError;
    }
    return false;
  };
  CHECK(bad(json::array()));
  CHECK(bad({{"family", {{"kind", "binomials"}}}}));
  CHECK(bad({{"fields", {"q=7"}}, {"family", {{"kind", "quartics"}}}}));
  CHECK(bad({{"fields", {"q=7"}}, {"family", {{"kind", "binomials"}}}, {"bounds", {"hasse"}}}));
  CHECK(bad({{"fields", "q=7"}, {"family", {{"kind", "binomials"}}}}));
}

TEST_CASE("empty family gives an empty report") {
  CampaignConfig cfg = config({"q=7", "q=9"}, FamilyKind::Explicit, {"index"});
  const CampaignReport rep = run_campaign(cfg);
  CHECK(rep.rows.empty());
  CHECK(rep.summary == CampaignSummary{});
  CHECK(csv_of(rep) == "field,poly,bound,applicable,ell,r,s,n0,lhs,rhs,holds,slack,sum\n");
}

TEST_CASE("index campaign over small fields has no violations") {
  const CampaignReport rep = run_campaign(config({"q=7", "q=3^2", "q=13", "q=2^4"}, FamilyKind::Binomials, {"index"}, 3));
  CHECK(rep.summary.violated == 0);
  CHECK(rep.summary.holds + rep.summary.inconclusive + rep.summary.inapplicable == rep.rows.size());
  CHECK(rep.summary.polynomials == rep.rows.size());
}

TEST_CASE("rows carry exact sums and totals add up") {
  const CampaignConfig cfg = config({"q=7", "q=13", "q=3^2"}, FamilyKind::Binomials, {"weil", "index", "binomial"}, 4);
  const CampaignReport rep = run_campaign(cfg);
  CampaignSummary total{};
  for (const CampaignSummary& s : rep.per_field) {
    total.holds += s.holds;
    total.violated += s.violated;
    total.inconclusive += s.inconclusive;
    total.inapplicable += s.inapplicable;
    total.polynomials += s.polynomials;
  }
  CHECK(total == rep.summary);
  // The binomial corollary as stated fails for some u > 1 binomials over F_13.
  CHECK(rep.summary.violated > 0);
  for (const CampaignRow& row : rep.rows) {
    if (row.verdict != Verdict::Violated || !row.applicable) continue;
    CHECK(row.bound == "binomial");
    const FiniteField F = parse_field(row.field);
    CHECK(row.sum == char_sum_full(F, parse_poly(F, row.poly)).coeffs());
  }
  const json s = summary_json(rep);
  CHECK(s["violated"] == rep.summary.violated);
  CHECK(s["holds"] == rep.summary.holds);
}

TEST_CASE("campaign output does not depend on thread count") {
  CampaignConfig cfg = config({"q=3^2", "q=11", "q=2^4"}, FamilyKind::Random, {"weil", "index", "cyclo"});
  cfg.family.count = 60;
  const std::string one = csv_of(run_campaign(cfg));
  cfg.threads = 5;
  const std::string five = csv_of(run_campaign(cfg));
  CHECK(one == five);
  CHECK(csv_of(run_campaign(cfg)) == five);
  cfg.seed = 43;
  CHECK(csv_of(run_campaign(cfg)) != five);
}
