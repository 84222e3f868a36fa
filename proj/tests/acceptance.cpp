// Acceptance run: one PASS/FAIL line per criterion, then a summary line.
// Criteria listed in kKnownFailures are expected to fail (see README); the
// exit status is nonzero if any other criterion fails or a known failure
// unexpectedly passes.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "indexsum/artin_schreier.hpp"
#include "indexsum/bounds.hpp"
#include "indexsum/charsum.hpp"
#include "indexsum/cyclic_codes.hpp"
#include "indexsum/error.hpp"
#include "indexsum/index_form.hpp"
#include "indexsum/splitmix.hpp"
#include "indexsum/sweep.hpp"

using namespace indexsum;

namespace {

const std::set<int> kKnownFailures = {4};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no runtime limit
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Coefficient vector (c_1, ..., c_deg) from a base-q index, constant term zero.
SparsePoly poly_from_index(const FiniteField& F, std::uint64_t idx, unsigned deg) {
  std::vector<Term> terms;
  for (std::uint64_t e = 1; e <= deg; ++e, idx /= F.q()) {
    terms.push_back({e, {static_cast<std::uint32_t>(idx % F.q())}});
  }
  return make_poly(F, terms);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

SparsePoly paper_family(const FiniteField& F) {
  const std::uint64_t t = F.order() / 3;
  return make_poly(F, {{2 * t + 1, F.one()}, {t + 1, F.one()}, {1, F.one()}});
}

// ---------------------------------------------------------------- 1

Outcome paper_example() {
  Outcome out{true, ""};
  for (std::uint32_t q : {7u, 13u, 19u, 31u}) {
    const FiniteField F = FiniteField::make(q, 1);
    const SparsePoly g = paper_family(F);
    const IndexForm form = index_form(F, g);
    const BoundReport rep = index_report(F, g);
    const bool ok = form.ell == 3 && form.n0 == 2 && form.r == 1 && rep.lhs_error < 1e-9 &&
                    rep.lhs <= std::sqrt(static_cast<double>(q)) && rep.verdict == Verdict::Holds;
    out.pass = out.pass && ok;
    out.detail += fmt("q=%u |S-2q/3|=%.6f<=%.6f; ", q, rep.lhs, std::sqrt(static_cast<double>(q)));
  }
  return out;
}

// ---------------------------------------------------------------- 2

Outcome theorem_binomials() {
  CampaignConfig cfg;
  cfg.fields = {"q=5", "q=7", "q=3^2", "q=11", "q=13", "q=2^4", "q=17", "q=19", "q=23", "q=5^2", "q=3^3"};
  cfg.family.kind = FamilyKind::Binomials;
  cfg.family.coprime_r = true;
  cfg.bounds = {"index"};
  const CampaignReport rep = run_campaign(cfg);
  const CampaignSummary& s = rep.summary;
  return {s.violated == 0 && s.inconclusive == 0 && s.inapplicable == 0 && s.polynomials > 0,
          fmt("%llu binomials, holds %llu, violated %llu, inconclusive %llu", (unsigned long long)s.polynomials,
              (unsigned long long)s.holds, (unsigned long long)s.violated, (unsigned long long)s.inconclusive)};
}

// ---------------------------------------------------------------- 3

Outcome weil_and_gauss() {
  std::uint64_t checked = 0, violated = 0, inconclusive = 0, skipped = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    const FiniteField F = parse_field("q=" + std::to_string(q));
    for (unsigned deg = 1; deg <= 4; ++deg) {
      if (deg % F.p() == 0) continue;
      for (std::uint64_t idx = 0; idx < ipow(q, deg); ++idx) {
        std::vector<Term> terms{{deg, F.one()}};
        std::uint64_t rest = idx;
        for (std::uint64_t e = 0; e < deg; ++e, rest /= q) terms.push_back({e, {static_cast<std::uint32_t>(rest % q)}});
        const SparsePoly g = make_poly(F, terms);
        // Reduction mod x^q - x can make g constant or its degree a multiple of p.
        if (canonicalize(F, g).is_constant()) {
          ++skipped;
          continue;
        }
        const BoundReport rep = weil_report(F, g);
        if (!rep.applicable) {
          ++skipped;
          continue;
        }
        ++checked;
        violated += rep.verdict == Verdict::Violated;
        inconclusive += rep.verdict == Verdict::Inconclusive;
      }
    }
  }
  std::uint64_t gauss_bad = 0, primes = 0;
  double worst = 0;
  for (std::uint32_t q = 3; q <= 97; q += 2) {
    bool prime = true;
    for (std::uint32_t d = 3; d * d <= q; d += 2) prime = prime && q % d != 0;
    if (!prime) continue;
    ++primes;
    const FiniteField F = FiniteField::make(q, 1);
    const CyclotomicValue s = char_sum_full(F, make_poly(F, {{2, F.one()}}));
    const double dev = std::abs(cv_abs(s).value - std::sqrt(static_cast<double>(q)));
    worst = std::max(worst, dev);
    gauss_bad += dev > 1e-6 || cv_norm(s).as_integer() != static_cast<std::int64_t>(q);
  }
  return {violated == 0 && inconclusive == 0 && gauss_bad == 0,
          fmt("Weil: %llu polys, violated %llu, inconclusive %llu, degree-reduced skipped %llu; "
              "Gauss: %llu primes, max ||S|-sqrt q| %.2e, exact |S|^2=q mismatches %llu",
              (unsigned long long)checked, (unsigned long long)violated, (unsigned long long)inconclusive,
              (unsigned long long)skipped, (unsigned long long)primes, worst, (unsigned long long)gauss_bad)};
}

// ---------------------------------------------------------------- 4

Outcome corollary_binomials() {
  std::uint64_t total = 0, disagree = 0, violated = 0, violated_u1 = 0, violated_coprime = 0, inconclusive = 0,
                index_violated = 0, index_checked = 0;
  for (std::uint32_t q = 3; q <= 64; ++q) {
    FiniteField F = FiniteField::make(2, 1);
    try {
      F = parse_field("q=" + std::to_string(q));
    } catch (const Error&) {
      continue;  // not a prime power
    }
    const std::uint64_t M = F.order();
    for (std::uint64_t n = 2; n <= M; ++n) {
      for (std::uint64_t r = 1; r < n; ++r) {
        for (std::uint32_t a = 1; a < q; ++a) {
          const BinomialReport br = binomial_report(F, n, r, {a});
          ++total;
          disagree += br.root_by_search != br.root_by_dlog;
          if (br.report.verdict == Verdict::Violated) {
            ++violated;
            violated_u1 += br.u == 1;
            violated_coprime += r % F.p() != 0;
          }
          inconclusive += br.report.verdict == Verdict::Inconclusive;
          if (r % F.p() != 0) {
            const IndexForm form = index_form(F, make_poly(F, {{n, F.one()}, {r, {a}}}));
            ++index_checked;
            index_violated += index_report(F, form, br.report.sum).verdict == Verdict::Violated;
          }
        }
      }
    }
  }
  return {disagree == 0 && violated == 0 && inconclusive == 0,
          fmt("%llu binomials; root tests disagree %llu; stated bound violated %llu (gcd(r,p)=1: %llu, u=1: %llu), "
              "inconclusive %llu; index-form n0 reading violated %llu of %llu",
              (unsigned long long)total, (unsigned long long)disagree, (unsigned long long)violated,
              (unsigned long long)violated_coprime, (unsigned long long)violated_u1, (unsigned long long)inconclusive,
              (unsigned long long)index_violated, (unsigned long long)index_checked)};
}

// ---------------------------------------------------------------- 5

Outcome coset_oracle() {
  std::uint64_t checked = 0, mismatched = 0;
  for (std::uint32_t q : {7u, 9u, 13u}) {
    const FiniteField F = parse_field("q=" + std::to_string(q));
    // The map depends on g - g(0) only, so one mapping serves all q constants.
    for (std::uint64_t idx = 1; idx < ipow(q, 6); ++idx) {
      const SparsePoly g = poly_from_index(F, idx, 6);
      const CyclotomicMapping map = mapping_from_index(F, index_form(F, g));
      SparsePoly gc = g;
      gc.terms.insert(gc.terms.begin(), Term{0, F.zero()});
      for (std::uint32_t c = 0; c < q; ++c, ++checked) {
        gc.terms.front().coeff = {c};
        const SparsePoly& h = c == 0 ? g : gc;
        mismatched += !(char_sum_via_cosets(F, map, {c}) == char_sum_full(F, h));
      }
    }
  }
  std::uint64_t random_checked = 0;
  for (const char* lit : {"q=5^2", "q=3^3", "q=7^2"}) {
    const FiniteField F = parse_field(lit);
    SplitMix64 rng(2024 ^ F.q());
    for (int i = 0; i < 1000;) {
      const SparsePoly g = random_poly(F, rng, 1 + rng.below(F.order()));
      if (canonicalize(F, g).is_constant()) continue;
      const IndexForm form = index_form(F, g);
      mismatched += !(char_sum_via_cosets(F, mapping_from_index(F, form), form.b) == char_sum_full(F, g));
      ++random_checked;
      ++i;
    }
  }
  return {mismatched == 0, fmt("exhaustive %llu polys over q in {7,9,13}, random %llu over q in {25,27,49}, "
                               "mismatches %llu",
                               (unsigned long long)checked, (unsigned long long)random_checked,
                               (unsigned long long)mismatched)};
}

// ---------------------------------------------------------------- 6

bool round_trips(const FiniteField& F, const SparsePoly& g, std::uint64_t& checked) {
  const SparsePoly c = canonicalize(F, g);
  if (c.is_constant()) return true;
  ++checked;
  const SparsePoly target = poly_sub(F, c, make_poly(F, {{0, c.constant_term()}}));
  return poly_from_mapping(F, mapping_from_index(F, index_form(F, g))) == target;
}

Outcome round_trip() {
  std::uint64_t checked = 0, bad = 0, sampled = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    const FiniteField F = parse_field("q=" + std::to_string(q));
    for (std::uint64_t idx = 1; idx < ipow(q, 6); ++idx) bad += !round_trips(F, poly_from_index(F, idx, 6), checked);
  }
  for (std::uint32_t q : {16u, 17u, 19u, 23u, 25u, 27u}) {
    const FiniteField F = parse_field("q=" + std::to_string(q));
    for (std::uint64_t idx = 1; idx < ipow(q, 4); ++idx) bad += !round_trips(F, poly_from_index(F, idx, 4), checked);
    for (std::uint64_t idx = 0; idx < ipow(q, 4); ++idx) {
      SparsePoly g = poly_from_index(F, idx, 4);
      g = poly_add(F, g, make_poly(F, {{5, F.one()}}));
      bad += !round_trips(F, g, checked);
    }
    SplitMix64 rng(606 ^ q);
    for (int i = 0; i < 10000; ++i, ++sampled) bad += !round_trips(F, random_poly(F, rng, 6), checked);
  }
  return {bad == 0, fmt("%llu polys: all of degree <= 6 for q <= 13; degree <= 4 and monic degree 5 for "
                        "16 <= q <= 27, plus %llu seeded degree-6 draws; failures %llu",
                        (unsigned long long)checked, (unsigned long long)sampled, (unsigned long long)bad)};
}

// ---------------------------------------------------------------- 7

struct ASTally {
  std::uint64_t polys = 0, count_bad = 0, interval_checked = 0, interval_violated = 0, families = 0;
};

// fibre[v] = #{y : y^q - y = v}.
std::vector<std::int64_t> fibres(const ASContext& ctx) {
  const FiniteField& E = *ctx.ext;
  std::vector<std::int64_t> f(E.q(), 0);
  for (std::uint32_t y = 0; y < E.q(); ++y) ++f[E.sub(E.pow({y}, ctx.q), {y}).code];
  return f;
}

// Checks one polynomial; returns its verdict under the general interval.
Verdict check_as(const std::shared_ptr<const ASContext>& ctx, const std::vector<std::int64_t>& fibre,
                 const SparsePoly& g, ASTally& t) {
  const FiniteField& E = *ctx->ext;
  std::int64_t n1 = 0, n2 = 0;
  for_each_value(E, g, [&](FieldElement, FieldElement v) {
    n1 += ctx->rel_trace[v.code] == 0;
    n2 += fibre[v.code];
  });
  const std::int64_t direct = as_count_direct({ctx, g});
  const std::int64_t via_chars = as_count_charsum({ctx, g});
  ++t.polys;
  t.count_bad += n2 != static_cast<std::int64_t>(ctx->q) * n1 || direct != n2 || via_chars != n2;
  return as_report({ctx, g}, direct).verdict;
}

void as_exhaustive(std::uint32_t q, unsigned m, ASTally& t) {
  const auto ctx = make_as_context(q, m);
  const FiniteField& E = *ctx->ext;
  const auto fibre = fibres(*ctx);
  const std::uint64_t M = E.order();
  for (std::uint64_t n = 2; n <= M; ++n) {
    for (std::uint64_t r = 1; r < n; ++r) {
      for (std::uint32_t a = 1; a < E.q(); ++a) {
        const Verdict v = check_as(ctx, fibre, make_poly(E, {{n, E.one()}, {r, {a}}}), t);
        ++t.families;
        if (r % E.p() == 0) continue;
        ++t.interval_checked;
        t.interval_violated += v == Verdict::Violated;
      }
    }
  }
}

// x -> x^e (gcd(e, M) = 1) permutes F_Q, so (n, r) -> (ne, re) mod M keeps
// the count and the index data. One representative per orbit of ordered
// exponent pairs is evaluated for every a; the verdict is credited to each
// orbit member with n > r.
void as_orbits(std::uint32_t q, unsigned m, ASTally& t) {
  const auto ctx = make_as_context(q, m);
  const FiniteField& E = *ctx->ext;
  const auto fibre = fibres(*ctx);
  const std::uint64_t M = E.order();
  std::vector<std::uint64_t> units;
  for (std::uint64_t e = 1; e < M; ++e) {
    if (std::gcd(e, M) == 1) units.push_back(e);
  }
  std::vector<bool> seen((M + 1) * (M + 1), false);
  for (std::uint64_t n = 1; n <= M; ++n) {
    for (std::uint64_t r = 1; r <= M; ++r) {
      if (n == r || seen[n * (M + 1) + r]) continue;
      std::uint64_t members = 0, coprime = 0, rep_n = 0, rep_r = 0;
      for (std::uint64_t e : units) {
        std::uint64_t n2 = n * e % M, r2 = r * e % M;
        if (n2 == 0) n2 = M;
        if (r2 == 0) r2 = M;
        if (seen[n2 * (M + 1) + r2]) continue;
        seen[n2 * (M + 1) + r2] = true;
        if (n2 <= r2) continue;
        ++members;
        coprime += r2 % E.p() != 0;
        rep_n = n2;
        rep_r = r2;
      }
      if (members == 0) continue;
      for (std::uint32_t a = 1; a < E.q(); ++a) {
        const Verdict v = check_as(ctx, fibre, make_poly(E, {{rep_n, E.one()}, {rep_r, {a}}}), t);
        t.families += members;
        t.interval_checked += coprime;
        if (v == Verdict::Violated) t.interval_violated += coprime;
      }
    }
  }
}

Outcome artin_schreier() {
  ASTally exhaustive, orbit;
  for (auto [q, m] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {2u, 6u},
                      {3u, 1u}, {3u, 2u}, {3u, 3u}, {3u, 4u}}) {
    as_exhaustive(q, m, exhaustive);
  }
  as_orbits(3, 5, orbit);
  as_orbits(3, 6, orbit);
  std::uint64_t expected = 0;
  for (std::uint64_t Q : {242ull, 728ull}) expected += Q * (Q - 1) / 2 * Q;
  const bool covered = orbit.families == expected;
  return {covered && exhaustive.count_bad + orbit.count_bad == 0 &&
              exhaustive.interval_violated + orbit.interval_violated == 0,
          fmt("q^m <= 81 exhaustive: %llu curves; q^m in {243,729} by unit-exponent orbits: %llu curves evaluated "
              "for %llu binomials; count mismatches %llu; interval checked %llu (gcd(r,p)=1), violated %llu",
              (unsigned long long)exhaustive.polys, (unsigned long long)orbit.polys,
              (unsigned long long)orbit.families, (unsigned long long)(exhaustive.count_bad + orbit.count_bad),
              (unsigned long long)(exhaustive.interval_checked + orbit.interval_checked),
              (unsigned long long)(exhaustive.interval_violated + orbit.interval_violated))};
}

// ---------------------------------------------------------------- 8

Outcome cyclic_codes() {
  const CodeSpec simplex = make_code(2, 4, 15, {1});
  bool simplex_ok = true;
  for (std::uint32_t a = 1; a < 16; ++a) {
    const std::vector<FieldElement> av{{a}};
    const CodeWeightReport rep = code_weight_report(simplex, av);
    simplex_ok = simplex_ok && trace_codeword(simplex, av).weight == 8 && weight_via_Ek(simplex, av) == 8 &&
                 rep.weight == 8 && std::abs(rep.window_lo - 5) < 1e-9 && std::abs(rep.window_hi - 9) < 1e-9 &&
                 rep.report.verdict == Verdict::Holds;
  }
  const WeightFloor floor = min_weight_floor(simplex);
  simplex_ok = simplex_ok && std::abs(floor.value() - 7) < 1e-9 && floor.at_most(8);

  std::uint64_t sets = 0, words = 0, outside = 0;
  for (std::uint64_t j1 = 1; j1 < 15; j1 += 2) {
    for (std::uint64_t j2 = j1 + 2; j2 < 15; j2 += 2, ++sets) {
      const CodeSpec code = make_code(2, 4, 15, {j1, j2});
      const std::size_t dims = code.J.size();
      for (std::uint64_t idx = 1; idx < ipow(16, static_cast<unsigned>(dims)); ++idx, ++words) {
        std::vector<FieldElement> a;
        for (std::uint64_t rest = idx, i = 0; i < dims; ++i, rest /= 16) a.push_back({static_cast<std::uint32_t>(rest % 16)});
        const CodeWeightReport rep = code_weight_report(code, a);
        outside += rep.weight != weight_via_Ek(code, a) || rep.report.verdict != Verdict::Holds ||
                   rep.weight < rep.window_lo - 1e-9 || rep.weight > rep.window_hi + 1e-9;
      }
    }
  }
  return {simplex_ok && outside == 0,
          fmt("simplex: 15 words of weight 8, window [5,9], floor %.1f; %llu odd pair sets, %llu words, "
              "outside window %llu",
              floor.value(), (unsigned long long)sets, (unsigned long long)words, (unsigned long long)outside)};
}

// ---------------------------------------------------------------- 9

std::string csv_of(const CampaignConfig& cfg) {
  std::ostringstream os;
  write_csv(os, run_campaign(cfg));
  return os.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism() {
  CampaignConfig cfg;
  cfg.fields = {"q=3^2", "q=13", "q=2^5"};
  cfg.family.kind = FamilyKind::Random;
  cfg.family.count = 200;
  cfg.bounds = {"weil", "index", "cyclo"};
  cfg.seed = 7;
  const std::string first = csv_of(cfg);
  const bool rerun = csv_of(cfg) == first;
  cfg.threads = 4;
  const bool threaded = csv_of(cfg) == first;

  bool cli = true;
  std::string cli_note = "CLI not built";
#ifdef INDEXSUM_CLI_PATH
  const auto dir = std::filesystem::temp_directory_path() / ("indexsum_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const auto cfg_path = dir / ("run" + std::to_string(run) + ".json");
    const auto csv_path = dir / ("run" + std::to_string(run) + ".csv");
    std::ofstream(cfg_path) << nlohmann::json{{"fields", {"q=7", "q=3^3"}},
                                              {"family", {{"kind", "binomials"}}},
                                              {"bounds", {"index"}},
                                              {"seed", 42},
                                              {"out", csv_path.string()}}
                                   .dump();
    const std::string cmd = std::string(INDEXSUM_CLI_PATH) + " sweep --config " + cfg_path.string() + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    cli = cli && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    outputs.push_back(slurp(csv_path));
  }
  cli = cli && !outputs[0].empty() && outputs[0] == outputs[1];
  cli_note = cli ? "CLI sweep --config reruns identical" : "CLI sweep reruns differ or failed";
  std::filesystem::remove_all(dir);
#endif
  return {rerun && threaded && cli, fmt("library rerun identical: %s, 1 vs 4 threads identical: %s, %s",
                                        rerun ? "yes" : "no", threaded ? "yes" : "no", cli_note.c_str())};
}

// ---------------------------------------------------------------- demo

Outcome index_beats_weil() {
  Outcome out{false, ""};
  for (std::uint32_t q : {7u, 13u, 19u, 31u}) {
    const FiniteField F = FiniteField::make(q, 1);
    const SparsePoly g = paper_family(F);
    const double weil = weil_report(F, g).rhs, index = index_report(F, g).rhs;
    out.detail += fmt("q=%u Weil rhs %.2f, index rhs %.2f; ", q, weil, index);
    out.pass = out.pass || (weil > q && index < q);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "paper example", 1, paper_example},
      {2, "exhaustive index bound on binomials", 300, theorem_binomials},
      {3, "exhaustive Weil bound and Gauss sums", 120, weil_and_gauss},
      {4, "binomial corollary", 120, corollary_binomials},
      {5, "coset route equals direct sum", 120, coset_oracle},
      {6, "index form round trip", 0, round_trip},
      {7, "Artin-Schreier counts and interval", 300, artin_schreier},
      {8, "cyclic code weights", 120, cyclic_codes},
      {9, "sweep determinism", 0, determinism},
      {10, "index bound nontrivial where Weil is trivial", 0, index_beats_weil},
  };
  int failed = 0, unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += fmt(" [over the %.0f s limit]", c.limit_s);
    }
    const bool known = kKnownFailures.count(c.id) != 0;
    if (!o.pass) ++failed;
    if (o.pass == known) ++unexpected;
    std::printf("%s criterion %d (%s): %s (%.1f s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, !o.pass && known ? " [known failure]" : "");
    std::fflush(stdout);
  }
  std::printf("SUMMARY: %zu criteria, %d failed, %d unexpected\n", criteria.size(), failed, unexpected);
  return unexpected == 0 ? 0 : 1;
}
