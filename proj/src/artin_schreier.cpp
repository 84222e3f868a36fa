#include "indexsum/artin_schreier.hpp"

#include <numeric>

#include "indexsum/charsum.hpp"
#include "indexsum/error.hpp"
#include "indexsum/index_form.hpp"
#include "indexsum/numtheory.hpp"

namespace indexsum {

FieldElement ASContext::embed(FieldElement base_element) const {
  const auto c = base->coords(base_element);
  FieldElement acc = ext->zero(), power = ext->one();
  for (std::uint32_t ci : c) {
    acc = ext->add(acc, ext->mul(ext->from_int(ci), power));
    power = ext->mul(power, embed_generator);
  }
  return acc;
}

FieldElement ASContext::relative_trace(FieldElement x) const {
  if (!rel_trace.empty()) return FieldElement{rel_trace[x.code]};
  return ext->trace(x, base_degree);
}

std::shared_ptr<const ASContext> make_as_context(std::uint64_t q, unsigned m, FieldLimits limits) {
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  if (m < 1) throw Error(ErrorCode::BadSubfield, "extension degree must be positive");
  auto ctx = std::make_shared<ASContext>();
  ctx->base = std::make_shared<const FiniteField>(FiniteField::make(pp->first, pp->second, std::nullopt, limits));
  ctx->ext = std::make_shared<const FiniteField>(FiniteField::make(pp->first, pp->second * m, std::nullopt, limits));
  ctx->m = m;
  ctx->base_degree = pp->second;
  ctx->q = static_cast<std::uint32_t>(q);
  const FiniteField& E = *ctx->ext;
  const FiniteField& B = *ctx->base;

  // Subfield F_q inside E: 0 and gamma^{j (Q-1)/(q-1)}.
  const std::uint64_t cof = E.order() / (q - 1);
  std::vector<FieldElement> subfield{E.zero()};
  for (std::uint64_t j = 0; j < q - 1; ++j) subfield.push_back(E.gamma_pow(static_cast<std::int64_t>(j * cof)));

  if (ctx->base_degree == 1) {
    ctx->embed_generator = E.zero();
  } else {
    bool found = false;
    for (FieldElement rho : subfield) {
      FieldElement acc = E.zero(), power = E.one();
      for (std::uint32_t c : B.modulus()) {
        acc = E.add(acc, E.mul(E.from_int(c), power));
        power = E.mul(power, rho);
      }
      if (acc.code == 0) {
        ctx->embed_generator = rho;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::BadSubfield, "base modulus has no root in the extension");
  }

  if (E.has_tables()) {
    // F_p-linear: Tr(sum c_i t^i) = sum c_i Tr(t^i).
    std::vector<FieldElement> basis_images;
    FieldElement t_pow = E.one();
    const FieldElement t{E.m() > 1 ? E.p() : 0};
    for (unsigned i = 0; i < E.m(); ++i) {
      basis_images.push_back(E.trace(t_pow, ctx->base_degree));
      t_pow = E.m() > 1 ? E.mul(t_pow, t) : t_pow;
    }
    ctx->rel_trace.assign(E.q(), 0);
    for (std::uint32_t code = 0; code < E.q(); ++code) {
      const auto c = E.coords(FieldElement{code});
      FieldElement acc = E.zero();
      for (unsigned i = 0; i < E.m(); ++i) {
        for (std::uint32_t rep = 0; rep < c[i]; ++rep) acc = E.add(acc, basis_images[i]);
      }
      ctx->rel_trace[code] = acc.code;
    }
  }

  // One representative per F_p^*-orbit of F_q^*.
  std::vector<bool> covered(E.q(), false);
  for (std::size_t idx = 1; idx < subfield.size(); ++idx) {
    const FieldElement c = subfield[idx];
    if (covered[c.code]) continue;
    ctx->char_reps.push_back(c);
    for (std::uint32_t j = 1; j < E.p(); ++j) covered[E.mul(E.from_int(j), c).code] = true;
  }
  return ctx;
}

std::int64_t as_count_direct(const ASInstance& inst) {
  const ASContext& ctx = *inst.ctx;
  std::int64_t zeros = 0;
  for_each_value(*ctx.ext, inst.g, [&](FieldElement, FieldElement v) {
    if (ctx.relative_trace(v).code == 0) ++zeros;
  });
  return static_cast<std::int64_t>(ctx.q) * zeros;
}

std::int64_t as_count_charsum(const ASInstance& inst) {
  const ASContext& ctx = *inst.ctx;
  const FiniteField& E = *ctx.ext;
  CyclotomicValue total = CyclotomicValue::integer(E.p(), E.q());
  for (FieldElement c : ctx.char_reps) {
    const CyclotomicValue s = char_sum_full(E, poly_scale(E, inst.g, c));
    for (std::uint32_t j = 1; j < E.p(); ++j) total = cv_add(total, s.galois(j));
  }
  const auto n = total.as_integer();
  if (!n) throw Error(ErrorCode::NonIntegerResult, "character-sum count is not a rational integer");
  return *n;
}

namespace {

BoundReport integer_report(std::string bound, std::uint32_t p, std::int64_t count, std::int64_t center_num,
                           std::int64_t center_den, Rational rhs_coeff, std::int64_t radicand) {
  BoundReport rep;
  rep.bound = std::move(bound);
  rep.sum = CyclotomicValue::integer(p, count);
  rep.center = CyclotomicValue::integer(p, center_num);
  rep.center_den = center_den;
  rep.rhs_coeff = rhs_coeff;
  rep.radicand = radicand;
  settle(rep);
  return rep;
}

}  // namespace

BoundReport as_report(const ASInstance& inst) { return as_report(inst, as_count_direct(inst)); }

BoundReport as_report(const ASInstance& inst, std::int64_t count) {
  const ASContext& ctx = *inst.ctx;
  const FiniteField& E = *ctx.ext;
  const IndexForm form = index_form(E, inst.g);
  const std::int64_t Q = E.q(), q = ctx.q;
  const auto ell = static_cast<std::int64_t>(form.ell), n0 = static_cast<std::int64_t>(form.n0);
  const auto g = static_cast<std::int64_t>(std::gcd(form.r, form.s));
  const bool trace_b_zero = ctx.relative_trace(form.b).code == 0;

  // Nontrivial characters contribute psi(Tr b) * (Q n0 / ell) each; their sum
  // over c != 0 is (q-1) when Tr b = 0 and -1 otherwise.
  const std::int64_t literal_num = ell * Q + (q - 1) * Q * n0;
  const std::int64_t center_num = trace_b_zero ? literal_num : ell * Q - Q * n0;
  BoundReport rep = integer_report("artin_schreier", E.p(), count, center_num, ell, Rational((q - 1) * (ell - n0) * g), Q);
  rep.params = {{"ell", ell},
                {"r", static_cast<std::int64_t>(form.r)},
                {"s", static_cast<std::int64_t>(form.s)},
                {"n0", n0},
                {"N", count},
                {"gcd_r_p", static_cast<std::int64_t>(std::gcd<std::uint64_t>(form.r, E.p()))}};
  rep.applicable = std::gcd<std::uint64_t>(form.r, E.p()) == 1;
  rep.reason = rep.applicable ? "gcd(r,p)=1" : "gcd(r,p)>1";
  if (!trace_b_zero) {
    rep.alternatives.push_back(judge_alternative(rep, "literal_center", CyclotomicValue::integer(E.p(), literal_num), ell));
  }
  return rep;
}

BinomialReport as_binomial_report(const std::shared_ptr<const ASContext>& ctx, std::uint64_t n, std::uint64_t r,
                                  FieldElement a) {
  const SparsePoly g = make_poly(*ctx->ext, {{n, ctx->ext->one()}, {r, a}});
  return as_binomial_report(ctx, n, r, a, as_count_direct({ctx, g}));
}

BinomialReport as_binomial_report(const std::shared_ptr<const ASContext>& ctx, std::uint64_t n, std::uint64_t r,
                                  FieldElement a, std::int64_t count) {
  const FiniteField& E = *ctx->ext;
  const std::uint64_t M = E.order();
  if (!(M >= n && n > r && r >= 1)) {
    throw Error(ErrorCode::BadExponents, "need q^m-1 >= n > r >= 1, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  if (a.code == 0) throw Error(ErrorCode::BadExponents, "binomial coefficient a must be nonzero");

  BinomialReport out;
  out.ell = M / std::gcd(n - r, M);
  out.t = std::gcd(std::gcd(n, r), M);
  out.u = std::gcd(n - r, out.ell);
  const FieldElement minus_a = E.neg(a);
  for (FieldElement z : E.roots_of_unity(static_cast<std::uint32_t>(out.ell))) {
    if (E.pow(z, static_cast<std::int64_t>(n - r)) == minus_a) {
      out.root_by_search = true;
      break;
    }
  }
  out.k = E.dlog(minus_a);
  out.root_by_dlog = out.k % (M * out.u / out.ell) == 0;
  out.root_exists = out.root_by_search;

  const std::int64_t Q = E.q(), q = ctx->q;
  const auto ell = static_cast<std::int64_t>(out.ell), u = static_cast<std::int64_t>(out.u),
             t = static_cast<std::int64_t>(out.t);
  const std::int64_t center_num = out.root_exists ? ell * Q + (q - 1) * Q * u : ell * Q;
  const Rational coeff(out.root_exists ? (q - 1) * (ell - 1) * t : (q - 1) * ell * t);
  out.report = integer_report("artin_schreier_binomial", E.p(), count, center_num, ell, coeff, Q);
  // Index-form n0 of x^n + a x^r: f(y) = y^{(n-r)/s} + a, so n0 = [-a is an ell-th root of unity].
  const std::int64_t n0 = out.k % (M / out.ell) == 0 ? 1 : 0;
  out.report.params = {{"ell", ell}, {"t", t}, {"u", u}, {"k", out.k}, {"N", count}, {"n0", n0},
                       {"root_search", out.root_by_search}, {"root_dlog", out.root_by_dlog}};
  out.report.applicable = std::gcd<std::uint64_t>(r, E.p()) == 1;
  out.report.reason = out.report.applicable ? "gcd(r,p)=1" : "gcd(r,p)>1";
  if (out.root_by_search != out.root_by_dlog) out.report.flags.push_back("root tests disagree");
  if (n0 != (out.root_exists ? u : 0)) out.report.flags.push_back("index-form n0 differs from u*[root]");
  return out;
}

}  // namespace indexsum
