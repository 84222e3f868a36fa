#include "indexsum/bounds.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "indexsum/charsum.hpp"
#include "indexsum/error.hpp"

namespace indexsum {

namespace {

constexpr std::uint32_t kExactNormMaxPrime = 1024;

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(CycloVariant v) {
  switch (v) {
    case CycloVariant::Full: return "full";
    case CycloVariant::Monomial: return "monomial";
    case CycloVariant::Nonzero: return "nonzero";
  }
  return "?";
}

Comparison compare_bound(const CyclotomicValue& scaled_diff, std::int64_t den, Rational coeff, std::int64_t radicand) {
  Comparison out;
  const Magnitude mag = cv_abs(scaled_diff);
  const double dden = static_cast<double>(den);
  out.lhs = mag.value / dden;
  out.lhs_error = mag.error / dden;
  out.rhs = boost::rational_cast<double>(coeff) * std::sqrt(static_cast<double>(radicand));

  if (coeff.numerator() == 0 || radicand == 0) {
    out.exact = true;
    out.verdict = scaled_diff.is_zero() ? Verdict::Holds : Verdict::Violated;
    return out;
  }
  if (scaled_diff.prime() <= kExactNormMaxPrime) {
    if (const auto norm = cv_norm(scaled_diff).as_integer()) {
      // |diff|^2 / den^2 <= num^2 R / cden^2  <=>  |diff|^2 cden^2 <= num^2 R den^2
      const __int128 cnum = coeff.numerator(), cden = coeff.denominator();
      const __int128 left = static_cast<__int128>(*norm) * cden * cden;
      const __int128 right = cnum * cnum * radicand * den * den;
      out.exact = true;
      out.verdict = left <= right ? Verdict::Holds : Verdict::Violated;
      return out;
    }
  }
  const double rhs_err = 4 * std::numeric_limits<double>::epsilon() * out.rhs;
  if (out.lhs - out.lhs_error > out.rhs + rhs_err) {
    out.verdict = Verdict::Violated;
  } else if (out.lhs + out.lhs_error < out.rhs - rhs_err) {
    out.verdict = Verdict::Holds;
  } else {
    out.verdict = Verdict::Inconclusive;
  }
  return out;
}

void settle(BoundReport& report) {
  const CyclotomicValue diff = cv_sub(cv_scale(report.sum, report.center_den), report.center);
  const Comparison c = compare_bound(diff, report.center_den, report.rhs_coeff, report.radicand);
  report.lhs = c.lhs;
  report.lhs_error = c.lhs_error;
  report.rhs = c.rhs;
  report.verdict = c.verdict;
  report.exact_decision = c.exact;
  report.slack = c.rhs - c.lhs;
}

AltCenter judge_alternative(const BoundReport& report, std::string label, CyclotomicValue center, std::int64_t den) {
  AltCenter alt{std::move(label), std::move(center), den, {}};
  const CyclotomicValue diff = cv_sub(cv_scale(report.sum, den), alt.center);
  alt.outcome = compare_bound(diff, den, report.rhs_coeff, report.radicand);
  return alt;
}

BoundReport weil_report(const FiniteField& F, const SparsePoly& g_in) {
  const SparsePoly g = canonicalize(F, g_in);
  if (g.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "Weil bound needs a nonconstant polynomial");
  const auto n = static_cast<std::int64_t>(g.degree());
  const std::int64_t q = F.q();

  BoundReport rep;
  rep.bound = "weil";
  rep.sum = char_sum_full(F, g);
  rep.center = CyclotomicValue(F.p());
  rep.center_den = 1;
  rep.rhs_coeff = Rational(n - 1);
  rep.radicand = q;
  rep.params["degree"] = n;
  rep.applicable = n % F.p() != 0;
  rep.reason = rep.applicable ? "p does not divide deg" : "p divides deg; Weil hypothesis unchecked";
  settle(rep);
  if (F.p() <= kExactNormMaxPrime) {
    if (auto norm = cv_norm(rep.sum).as_integer(); norm && *norm == q * q) {
      rep.flags.push_back("suspected c+f^p-f form: |S| = q");
    }
  }
  return rep;
}

BoundReport index_report(const FiniteField& F, const IndexForm& form, const CyclotomicValue& sum) {
  const std::int64_t q = F.q();
  const auto ell = static_cast<std::int64_t>(form.ell);
  const auto n0 = static_cast<std::int64_t>(form.n0);
  const auto gcd_rs = static_cast<std::int64_t>(std::gcd(form.r, form.s));

  BoundReport rep;
  rep.bound = "index";
  rep.sum = sum;
  rep.center = cv_scale(cv_char(F, form.b), q * n0);
  rep.center_den = ell;
  rep.rhs_coeff = Rational((ell - n0) * gcd_rs);
  rep.radicand = q;
  rep.params = {{"ell", ell},
                {"r", static_cast<std::int64_t>(form.r)},
                {"s", static_cast<std::int64_t>(form.s)},
                {"n0", n0},
                {"degree", static_cast<std::int64_t>(form.degree)},
                {"gcd_r_p", static_cast<std::int64_t>(std::gcd<std::uint64_t>(form.r, F.p()))}};
  rep.applicable = true;
  rep.reason = std::gcd<std::uint64_t>(form.r, F.p()) == 1 ? "gcd(r,p)=1" : "gcd(r,p)>1 (hypothesis of the cyclotomic form only)";
  settle(rep);
  if (form.b.code != 0) {
    rep.alternatives.push_back(
        judge_alternative(rep, "literal_center", CyclotomicValue::integer(F.p(), q * n0), ell));
  }
  if (rep.rhs > static_cast<double>(q)) rep.flags.push_back("rhs exceeds trivial bound q");
  return rep;
}

BoundReport index_report(const FiniteField& F, const SparsePoly& g) {
  const IndexForm form = index_form(F, g);
  return index_report(F, form, char_sum_full(F, canonicalize(F, g)));
}

BoundReport cyclo_report(const FiniteField& F, const CyclotomicMapping& map, CycloVariant variant) {
  validate_mapping(F, map);
  const std::int64_t q = F.q();
  const auto d = static_cast<std::int64_t>(map.d);
  const std::uint64_t s = F.order() / map.d;
  const auto L = map.support();
  const auto n0 = d - static_cast<std::int64_t>(L.size());

  BoundReport rep;
  rep.bound = std::string("cyclo_") + std::string(to_string(variant));
  rep.radicand = q;

  TraceHistogram hist(F.p());
  if (variant != CycloVariant::Nonzero) hist.add(0);
  for (std::uint64_t j = 0; j < F.order(); ++j) {
    const FieldElement x = F.gamma_pow(static_cast<std::int64_t>(j));
    const Branch& br = map.branches[j % map.d];
    hist.add(F.abs_trace(F.mul(br.a, eval_poly(F, br.R, x))));
  }
  rep.sum = hist.value();

  std::int64_t max_deg = 0, max_gcd = 0;
  bool all_coprime = true, all_monomial = true, all_vanish_at_zero = true;
  for (std::uint64_t i : L) {
    const SparsePoly& R = map.branches[i].R;
    const auto deg = static_cast<std::int64_t>(R.degree());
    max_deg = std::max(max_deg, deg);
    max_gcd = std::max<std::int64_t>(max_gcd, static_cast<std::int64_t>(std::gcd<std::uint64_t>(R.degree(), s)));
    if (std::gcd<std::uint64_t>(R.degree(), F.p()) != 1) all_coprime = false;
    if (R.terms.size() != 1) all_monomial = false;
    if (R.constant_term().code != 0) all_vanish_at_zero = false;
  }

  switch (variant) {
    case CycloVariant::Full:
      rep.center = CyclotomicValue::integer(F.p(), q * n0);
      rep.center_den = d;
      rep.rhs_coeff = Rational((d - n0) * max_deg);
      rep.applicable = all_coprime;
      rep.reason = all_coprime ? "gcd(r_i,p)=1 on support" : "some r_i on support shares a factor with p";
      if (!all_vanish_at_zero) rep.flags.push_back("some R_i(0) != 0 (normalization assumption)");
      break;
    case CycloVariant::Monomial:
      rep.center = CyclotomicValue::integer(F.p(), q * n0);
      rep.center_den = d;
      rep.rhs_coeff = Rational((d - n0) * max_gcd);
      rep.applicable = all_monomial;
      rep.reason = all_monomial ? "monomial branches" : "some R_i on support is not a monomial";
      break;
    case CycloVariant::Nonzero:
      rep.center = CyclotomicValue::integer(F.p(), (q - 1) * n0);
      rep.center_den = d;
      rep.rhs_coeff = Rational((d - n0) * max_deg);
      rep.applicable = all_coprime;
      rep.reason = all_coprime ? "gcd(r_i,p)=1 on support" : "some r_i on support shares a factor with p";
      break;
  }
  if (L.empty()) rep.reason = "empty support: trivially holds";
  rep.params = {{"d", d}, {"n0", n0}, {"r", max_deg}, {"max_gcd", max_gcd}};
  settle(rep);
  return rep;
}

BinomialReport binomial_report(const FiniteField& F, std::uint64_t n, std::uint64_t r, FieldElement a) {
  const std::uint64_t M = F.order();
  if (!(M >= n && n > r && r >= 1)) {
    throw Error(ErrorCode::BadExponents, "need q-1 >= n > r >= 1, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  if (a.code == 0) throw Error(ErrorCode::BadExponents, "binomial coefficient a must be nonzero");

  BinomialReport out;
  out.ell = M / std::gcd(n - r, M);
  out.t = std::gcd(std::gcd(n, r), M);
  out.u = std::gcd(n - r, out.ell);

  const FieldElement minus_a = F.neg(a);
  for (FieldElement z : F.roots_of_unity(static_cast<std::uint32_t>(out.ell))) {
    if (F.pow(z, static_cast<std::int64_t>(n - r)) == minus_a) {
      out.root_by_search = true;
      break;
    }
  }
  out.k = F.dlog(minus_a);
  out.root_by_dlog = out.k % (M * out.u / out.ell) == 0;
  out.root_exists = out.root_by_search;

  const SparsePoly g = make_poly(F, {{n, F.one()}, {r, a}});
  const IndexForm form = index_form(F, g);
  const std::int64_t q = F.q();
  const auto ell = static_cast<std::int64_t>(out.ell), u = static_cast<std::int64_t>(out.u),
             t = static_cast<std::int64_t>(out.t);

  BoundReport& rep = out.report;
  rep.bound = "binomial";
  rep.sum = char_sum_full(F, g);
  rep.center = CyclotomicValue::integer(F.p(), out.root_exists ? q * u : 0);
  rep.center_den = ell;
  rep.rhs_coeff = Rational(out.root_exists ? (ell - u) * t : ell * t);
  rep.radicand = q;
  rep.params = {{"ell", ell},
                {"t", t},
                {"u", u},
                {"k", out.k},
                {"root_search", out.root_by_search},
                {"root_dlog", out.root_by_dlog},
                {"r", static_cast<std::int64_t>(r)},
                {"s", static_cast<std::int64_t>(form.s)},
                {"n0", static_cast<std::int64_t>(form.n0)}};
  rep.applicable = true;
  rep.reason = out.root_exists ? "x^{n-r}+a has an ell-th root of unity as root" : "no ell-th root of unity is a root";
  if (out.root_by_search != out.root_by_dlog) rep.flags.push_back("root tests disagree");
  if (form.ell != out.ell) rep.flags.push_back("ell differs from index form");
  if (form.n0 != (out.root_exists ? out.u : 0)) rep.flags.push_back("index-form n0 differs from u*[root]");
  settle(rep);
  return out;
}

}  // namespace indexsum
