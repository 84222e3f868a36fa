#include "indexsum/index_form.hpp"

#include <numeric>

#include "indexsum/error.hpp"

namespace indexsum {

std::vector<std::uint64_t> CyclotomicMapping::support() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < branches.size(); ++i) {
    if (branches[i].a.code != 0) out.push_back(i);
  }
  return out;
}

IndexForm index_form(const FiniteField& F, const SparsePoly& g_in) {
  const SparsePoly g = canonicalize(F, g_in);
  if (g.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "index is undefined for constants");

  IndexForm form;
  form.b = g.constant_term();
  std::vector<Term> rest;
  for (const Term& t : g.terms) {
    if (t.exp != 0) rest.push_back(t);
  }
  const std::uint64_t M = F.order();
  form.r = rest.front().exp;
  form.degree = rest.back().exp;
  form.a = rest.back().coeff;

  std::uint64_t s = M;
  for (const Term& t : rest) s = std::gcd(s, t.exp - form.r);
  form.s = s;
  form.ell = M / s;

  const FieldElement a_inv = F.inv(form.a);
  std::vector<Term> fterms;
  fterms.reserve(rest.size());
  for (const Term& t : rest) fterms.push_back({(t.exp - form.r) / s, F.mul(t.coeff, a_inv)});
  form.f = make_poly(F, std::move(fterms));

  for (FieldElement z : F.roots_of_unity(static_cast<std::uint32_t>(form.ell))) {
    if (eval_poly(F, form.f, z).code == 0) ++form.n0;
  }
  return form;
}

SparsePoly reconstruct(const FiniteField& F, const IndexForm& form) {
  std::vector<Term> terms;
  for (const Term& t : form.f.terms) terms.push_back({form.r + t.exp * form.s, F.mul(form.a, t.coeff)});
  terms.push_back({0, form.b});
  return make_poly(F, std::move(terms));
}

CyclotomicMapping mapping_from_index(const FiniteField& F, const IndexForm& form) {
  CyclotomicMapping map;
  map.d = form.ell;
  map.offset = form.b;
  const auto zetas = F.roots_of_unity(static_cast<std::uint32_t>(form.ell));
  map.branches.reserve(zetas.size());
  for (FieldElement z : zetas) {
    map.branches.push_back({F.mul(form.a, eval_poly(F, form.f, z)), monomial(F.one(), form.r)});
  }
  return map;
}

void validate_mapping(const FiniteField& F, const CyclotomicMapping& map) {
  if (map.d == 0 || F.order() % map.d != 0) {
    throw Error(ErrorCode::BranchMismatch, "branch count " + std::to_string(map.d) + " does not divide q-1");
  }
  if (map.branches.size() != map.d) {
    throw Error(ErrorCode::BranchMismatch,
                "expected " + std::to_string(map.d) + " branches, got " + std::to_string(map.branches.size()));
  }
}

SparsePoly poly_from_mapping(const FiniteField& F, const CyclotomicMapping& map) {
  validate_mapping(F, map);
  const std::uint64_t d = map.d;
  const std::uint64_t s = F.order() / d;
  const FieldElement d_inv = F.inv(F.from_int(static_cast<std::int64_t>(d % F.p())));

  // For x in C_k, x^{js} = zeta^{jk}; summing zeta^{j(k-i)} over j isolates i = k.
  // Branches sharing R are combined first: w_j = sum_i a_i zeta^{-ij} / d.
  std::vector<const SparsePoly*> shapes;
  std::vector<std::vector<FieldElement>> weights;
  for (std::uint64_t i = 0; i < d; ++i) {
    const Branch& br = map.branches[i];
    if (br.a.code == 0 || br.R.is_zero()) continue;
    std::size_t gi = 0;
    while (gi < shapes.size() && *shapes[gi] != br.R) ++gi;
    if (gi == shapes.size()) {
      shapes.push_back(&br.R);
      weights.emplace_back(d);
    }
    std::vector<FieldElement>& wg = weights[gi];
    if (F.has_tables()) {
      // log(a_i zeta^{-ij}) = log a_i - (i j mod d) s, walked incrementally in j.
      const std::uint64_t M = F.order();
      const std::uint64_t la = F.log_table()[br.a.code];
      const auto exp = F.exp_table();
      std::uint64_t ij = 0;
      for (std::uint64_t j = 0; j < d; ++j) {
        const std::uint64_t off = ij * s;
        wg[j] = F.add(wg[j], FieldElement{exp[la >= off ? la - off : la + M - off]});
        ij += i;
        if (ij >= d) ij -= d;
      }
    } else {
      for (std::uint64_t j = 0; j < d; ++j) {
        wg[j] = F.add(wg[j], F.mul(br.a, F.gamma_pow(-static_cast<std::int64_t>((j * i % d) * s))));
      }
    }
  }
  // Coefficients are accumulated per reduced exponent (x^e = x^{1 + (e-1) mod (q-1)}).
  const std::uint64_t q = F.q();
  std::vector<FieldElement> dense(q);
  for (std::size_t gi = 0; gi < shapes.size(); ++gi) {
    for (std::uint64_t j = 0; j < d; ++j) {
      const FieldElement w = F.mul(d_inv, weights[gi][j]);
      if (w.code == 0) continue;
      for (const Term& t : shapes[gi]->terms) {
        std::uint64_t e = j * s + t.exp;
        if (e >= q) e = 1 + (e - 1) % (q - 1);
        dense[e] = F.add(dense[e], F.mul(w, t.coeff));
      }
    }
  }
  SparsePoly g;
  for (std::uint64_t e = 0; e < q; ++e) {
    if (dense[e].code != 0) g.terms.push_back({e, dense[e]});
  }
  const FieldElement c0 = g.constant_term();
  if (c0.code != 0) {
    g.terms.erase(g.terms.begin());
    g = poly_add(F, g, monomial(c0, F.q() - 1));
  }
  return g;
}

FieldElement mapping_eval(const FiniteField& F, const CyclotomicMapping& map, FieldElement x) {
  validate_mapping(F, map);
  if (x.code == 0) return F.zero();
  const Branch& br = map.branches[F.dlog(x) % map.d];
  return F.mul(br.a, eval_poly(F, br.R, x));
}

}  // namespace indexsum
