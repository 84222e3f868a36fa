#include "indexsum/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <memory>
#include <numeric>
#include <ostream>
#include <thread>

#include "indexsum/charsum.hpp"
#include "indexsum/error.hpp"
#include "indexsum/index_form.hpp"

namespace indexsum {

using nlohmann::json;

namespace {

const std::vector<std::string> kBoundNames{"weil", "index", "binomial", "cyclo"};

FamilyKind parse_kind(const std::string& s) {
  if (s == "monomials") return FamilyKind::Monomials;
  if (s == "binomials") return FamilyKind::Binomials;
  if (s == "trinomials") return FamilyKind::Trinomials;
  if (s == "random") return FamilyKind::Random;
  if (s == "explicit") return FamilyKind::Explicit;
  throw Error(ErrorCode::ConfigError, "unknown family kind '" + s + "'");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_vector(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

CampaignRow make_row(const FiniteField& F, const std::string& poly, const BoundReport& rep) {
  CampaignRow row;
  row.field = F.describe();
  row.poly = poly;
  row.bound = rep.bound;
  row.applicable = rep.applicable;
  auto param = [&](const char* key) {
    const auto it = rep.params.find(key);
    return it == rep.params.end() ? std::int64_t{0} : it->second;
  };
  row.ell = rep.params.count("ell") ? param("ell") : param("d");
  row.r = param("r");
  row.s = param("s");
  row.n0 = param("n0");
  row.lhs = rep.lhs;
  row.rhs = rep.rhs;
  row.verdict = rep.verdict;
  row.slack = rep.slack;
  row.sum = rep.sum.coeffs();
  return row;
}

// x^n + a x^r with n > r >= 1 and no constant term.
bool as_binomial(const FiniteField& F, const SparsePoly& g, std::uint64_t& n, std::uint64_t& r, FieldElement& a) {
  if (g.terms.size() != 2 || g.terms[0].exp == 0 || g.terms[1].coeff != F.one()) return false;
  r = g.terms[0].exp;
  a = g.terms[0].coeff;
  n = g.terms[1].exp;
  return true;
}

std::vector<CampaignRow> evaluate(const FiniteField& F, const SparsePoly& g, const std::vector<std::string>& bounds) {
  std::vector<CampaignRow> rows;
  const std::string text = format_poly(F, g);
  const IndexForm form = index_form(F, g);
  const CyclotomicValue sum = char_sum_full(F, g);
  for (const std::string& b : bounds) {
    if (b == "weil") {
      rows.push_back(make_row(F, text, weil_report(F, g)));
    } else if (b == "index") {
      rows.push_back(make_row(F, text, index_report(F, form, sum)));
    } else if (b == "binomial") {
      std::uint64_t n = 0, r = 0;
      FieldElement a{};
      if (as_binomial(F, g, n, r, a)) rows.push_back(make_row(F, text, binomial_report(F, n, r, a).report));
    } else if (b == "cyclo") {
      const CyclotomicMapping map = mapping_from_index(F, form);
      for (CycloVariant v : {CycloVariant::Full, CycloVariant::Monomial, CycloVariant::Nonzero}) {
        rows.push_back(make_row(F, text, cyclo_report(F, map, v)));
      }
    }
  }
  return rows;
}

void tally(CampaignSummary& s, const CampaignRow& row) {
  if (!row.applicable) {
    ++s.inapplicable;
    return;
  }
  switch (row.verdict) {
    case Verdict::Holds: ++s.holds; break;
    case Verdict::Violated: ++s.violated; break;
    case Verdict::Inconclusive: ++s.inconclusive; break;
  }
}

}  // namespace

CampaignConfig parse_campaign(const json& j) {
  CampaignConfig cfg;
  try {
    if (!j.is_object()) throw Error(ErrorCode::ConfigError, "config must be a JSON object");
    cfg.fields = j.at("fields").get<std::vector<std::string>>();
    const json& fam = j.at("family");
    cfg.family.kind = parse_kind(fam.at("kind").get<std::string>());
    cfg.family.coprime_r = fam.value("coprime_r", true);
    cfg.family.max_degree = fam.value("max_degree", std::uint64_t{0});
    cfg.family.count = fam.value("count", std::uint64_t{100});
    cfg.family.polys = fam.value("polys", std::vector<std::string>{});
    if (j.contains("bounds")) cfg.bounds = j.at("bounds").get<std::vector<std::string>>();
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.out = j.value("out", std::string{});
    cfg.threads = j.value("threads", 1u);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
  for (const std::string& b : cfg.bounds) {
    if (std::find(kBoundNames.begin(), kBoundNames.end(), b) == kBoundNames.end()) {
      throw Error(ErrorCode::ConfigError, "unknown bound '" + b + "'");
    }
  }
  if (cfg.threads == 0) cfg.threads = 1;
  return cfg;
}

FieldElement random_element(const FiniteField& F, SplitMix64& rng) {
  const std::uint64_t v = rng.below(F.q());
  return v == 0 ? F.zero() : F.gamma_pow(static_cast<std::int64_t>(v - 1));
}

SparsePoly random_poly(const FiniteField& F, SplitMix64& rng, std::uint64_t deg) {
  std::vector<Term> terms;
  for (std::uint64_t e = 0; e < deg; ++e) terms.push_back({e, random_element(F, rng)});
  terms.push_back({deg, F.gamma_pow(static_cast<std::int64_t>(rng.below(F.order())))});
  return make_poly(F, std::move(terms));
}

std::vector<SparsePoly> enumerate_family(const FiniteField& F, const FamilySpec& family, std::uint64_t seed) {
  std::vector<SparsePoly> out;
  const std::uint64_t top = family.max_degree == 0 ? F.order() : std::min<std::uint64_t>(family.max_degree, F.order());
  auto lowest_ok = [&](std::uint64_t r) { return !family.coprime_r || std::gcd<std::uint64_t>(r, F.p()) == 1; };
  std::vector<FieldElement> nonzero;
  for (std::uint64_t i = 0; i < F.order(); ++i) nonzero.push_back(F.gamma_pow(static_cast<std::int64_t>(i)));
  std::sort(nonzero.begin(), nonzero.end());

  switch (family.kind) {
    case FamilyKind::Monomials:
      for (std::uint64_t n = 1; n <= top; ++n) {
        if (!lowest_ok(n)) continue;
        for (FieldElement a : nonzero) out.push_back(monomial(a, n));
      }
      break;
    case FamilyKind::Binomials:
      for (std::uint64_t n = 2; n <= top; ++n) {
        for (std::uint64_t r = 1; r < n; ++r) {
          if (!lowest_ok(r)) continue;
          for (FieldElement a : nonzero) out.push_back(make_poly(F, {{n, F.one()}, {r, a}}));
        }
      }
      break;
    case FamilyKind::Trinomials:
      for (std::uint64_t n = 3; n <= top; ++n) {
        for (std::uint64_t m = 2; m < n; ++m) {
          for (std::uint64_t r = 1; r < m; ++r) {
            if (!lowest_ok(r)) continue;
            for (FieldElement a : nonzero) {
              for (FieldElement c : nonzero) out.push_back(make_poly(F, {{n, F.one()}, {m, a}, {r, c}}));
            }
          }
        }
      }
      break;
    case FamilyKind::Random: {
      SplitMix64 rng(seed ^ F.q());
      const std::uint64_t cap = family.max_degree == 0 ? 6 : family.max_degree;
      while (out.size() < family.count) {
        SparsePoly g = canonicalize(F, random_poly(F, rng, 1 + rng.below(cap)));
        if (!g.is_constant()) out.push_back(std::move(g));
      }
      break;
    }
    case FamilyKind::Explicit:
      for (const std::string& text : family.polys) {
        SparsePoly g = canonicalize(F, parse_poly(F, text));
        if (g.is_constant()) throw Error(ErrorCode::ConfigError, "constant polynomial '" + text + "' in family");
        out.push_back(std::move(g));
      }
      break;
  }
  return out;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  std::vector<std::unique_ptr<FiniteField>> fields;
  for (const std::string& lit : config.fields) fields.push_back(std::make_unique<FiniteField>(parse_field(lit)));

  struct Item {
    std::size_t field;
    SparsePoly g;
  };
  std::vector<Item> items;
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    for (SparsePoly& g : enumerate_family(*fields[fi], config.family, config.seed)) items.push_back({fi, std::move(g)});
  }

  std::vector<std::vector<CampaignRow>> results(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < items.size() && !failed; i = next++) {
        results[i] = evaluate(*fields[items[i].field], items[i].g, config.bounds);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(items.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CampaignReport report;
  report.per_field.resize(fields.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    ++report.per_field[items[i].field].polynomials;
    for (CampaignRow& row : results[i]) {
      tally(report.per_field[items[i].field], row);
      report.rows.push_back(std::move(row));
    }
  }
  for (const CampaignSummary& s : report.per_field) {
    report.summary.holds += s.holds;
    report.summary.violated += s.violated;
    report.summary.inconclusive += s.inconclusive;
    report.summary.inapplicable += s.inapplicable;
    report.summary.polynomials += s.polynomials;
  }
  return report;
}

void write_csv(std::ostream& os, const CampaignReport& report) {
  os << "field,poly,bound,applicable,ell,r,s,n0,lhs,rhs,holds,slack,sum\n";
  for (const CampaignRow& row : report.rows) {
    os << '"' << row.field << "\",\"" << row.poly << "\"," << row.bound << ',' << (row.applicable ? 1 : 0) << ','
       << row.ell << ',' << row.r << ',' << row.s << ',' << row.n0 << ',' << fmt_double(row.lhs) << ','
       << fmt_double(row.rhs) << ',' << to_string(row.verdict) << ',' << fmt_double(row.slack) << ",\""
       << fmt_vector(row.sum) << "\"\n";
  }
}

json summary_json(const CampaignReport& report) {
  auto one = [](const CampaignSummary& s) {
    return json{{"holds", s.holds},
                {"violated", s.violated},
                {"inconclusive", s.inconclusive},
                {"inapplicable", s.inapplicable},
                {"polynomials", s.polynomials}};
  };
  json per = json::array();
  for (const CampaignSummary& s : report.per_field) per.push_back(one(s));
  json out = one(report.summary);
  out["per_field"] = per;
  out["rows"] = report.rows.size();
  return out;
}

}  // namespace indexsum
