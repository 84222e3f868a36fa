#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "indexsum/field.hpp"

namespace indexsum {

struct Term {
  std::uint64_t exp = 0;
  FieldElement coeff{};

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over a FiniteField. Terms have strictly increasing
/// exponents and nonzero coefficients; the zero polynomial has no terms.
/// Build through make_poly so the invariant holds.
struct SparsePoly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  std::uint64_t degree() const { return terms.empty() ? 0 : terms.back().exp; }
  FieldElement leading() const { return terms.empty() ? FieldElement{} : terms.back().coeff; }
  FieldElement constant_term() const {
    return !terms.empty() && terms.front().exp == 0 ? terms.front().coeff : FieldElement{};
  }
  /// True when every exponent is zero or the polynomial is zero.
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.front().exp == 0); }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

/// Sorts, merges like terms, drops zero coefficients.
SparsePoly make_poly(const FiniteField& F, std::vector<Term> terms);
SparsePoly monomial(FieldElement coeff, std::uint64_t exp);

SparsePoly poly_add(const FiniteField& F, const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_sub(const FiniteField& F, const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_scale(const FiniteField& F, const SparsePoly& a, FieldElement c);
SparsePoly poly_mul(const FiniteField& F, const SparsePoly& a, const SparsePoly& b);
/// a(x^k).
SparsePoly poly_compose_power(const FiniteField& F, const SparsePoly& a, std::uint64_t k);

/// Replaces every exponent e >= q by 1 + ((e - 1) mod (q - 1)) and merges.
/// The result agrees with g as a function on F_q and has degree <= q - 1.
SparsePoly canonicalize(const FiniteField& F, const SparsePoly& g);
bool is_reduced(const FiniteField& F, const SparsePoly& g);

/// g(x) by per-term powering; 0^0 = 1 so the constant term survives at 0.
FieldElement eval_poly(const FiniteField& F, const SparsePoly& g, FieldElement x);

/// "x^5+x^3+x", "5*x^4+2", "[1,2]*x^3", "-x+3", "0".
SparsePoly parse_poly(const FiniteField& F, const std::string& text);
/// Inverse of parse_poly; terms in descending exponent order.
std::string format_poly(const FiniteField& F, const SparsePoly& g);
/// Integer for prime-subfield elements, "[c0,c1,...]" otherwise.
std::string format_element(const FiniteField& F, FieldElement x);
FieldElement parse_element(const FiniteField& F, const std::string& text);

/// Calls fn(x, c g(x)) for x = gamma^{k0 + j dk}, j = 0, ..., count - 1, in
/// that order. With tables, each term's log is advanced incrementally and
/// terms are summed with Zech logarithms.
template <class Fn>
void for_each_on_progression(const FiniteField& F, const SparsePoly& g, std::uint64_t k0, std::uint64_t dk,
                             std::uint64_t count, Fn&& fn, FieldElement c = {1}) {
  const std::uint32_t M = F.order();
  if (!F.has_tables() || c.code == 0) {
    for (std::uint64_t j = 0; j < count; ++j) {
      const FieldElement x = F.gamma_pow(static_cast<std::int64_t>((k0 + j * dk) % M));
      fn(x, F.mul(c, eval_poly(F, g, x)));
    }
    return;
  }
  const auto exp = F.exp_table();
  const auto log = F.log_table();
  const auto zech = F.zech_table();

  const std::uint64_t c_log = log[c.code];
  const FieldElement c0 = g.constant_term();
  const bool has_c0 = c0.code != 0;
  const auto c0_log = has_c0 ? static_cast<std::uint32_t>((log[c0.code] + c_log) % M) : 0u;

  boost::container::small_vector<std::uint32_t, 16> cur, step;
  for (const Term& t : g.terms) {
    if (t.exp == 0 || t.coeff.code == 0) continue;
    const std::uint64_t e = t.exp % M;
    cur.push_back(static_cast<std::uint32_t>((log[t.coeff.code] + c_log + e * (k0 % M)) % M));
    step.push_back(static_cast<std::uint32_t>(e * (dk % M) % M));
  }
  const std::size_t nt = cur.size();
  std::uint32_t xlog = static_cast<std::uint32_t>(k0 % M);
  const auto xstep = static_cast<std::uint32_t>(dk % M);

  for (std::uint64_t j = 0; j < count; ++j) {
    bool nonzero = has_c0;
    std::uint32_t acc = c0_log;
    for (std::size_t t = 0; t < nt; ++t) {
      const std::uint32_t L = cur[t];
      if (!nonzero) {
        acc = L;
        nonzero = true;
      } else {
        const std::uint32_t d = L >= acc ? L - acc : L + M - acc;
        const std::uint32_t z = zech[d];
        if (z == FiniteField::kNoZech) {
          nonzero = false;
        } else {
          acc += z;
          if (acc >= M) acc -= M;
        }
      }
      std::uint32_t next = L + step[t];
      if (next >= M) next -= M;
      cur[t] = next;
    }
    fn(FieldElement{exp[xlog]}, nonzero ? FieldElement{exp[acc]} : FieldElement{});
    xlog += xstep;
    if (xlog >= M) xlog -= M;
  }
}

/// Calls fn(x, g(x)) for x = 0, gamma^0, gamma^1, ..., gamma^{q-2}, in that
/// order.
template <class Fn>
void for_each_value(const FiniteField& F, const SparsePoly& g, Fn&& fn) {
  fn(F.zero(), eval_poly(F, g, F.zero()));
  for_each_on_progression(F, g, 0, 1, F.order(), fn);
}

}  // namespace indexsum
