#include <doctest.h>

#include <numeric>

#include "indexsum/error.hpp"
#include "indexsum/index_form.hpp"
#include "indexsum/numtheory.hpp"

using namespace indexsum;

namespace {

// Smallest ell | q-1 with every exponent of g - b congruent to r mod (q-1)/ell.
std::uint64_t brute_ell(const FiniteField& F, const SparsePoly& g) {
  std::vector<std::uint64_t> exps;
  for (const Term& t : g.terms) {
    if (t.exp != 0) exps.push_back(t.exp);
  }
  for (std::uint64_t ell : divisors(F.order())) {
    const std::uint64_t s = F.order() / ell;
    bool ok = true;
    for (std::uint64_t e : exps) ok = ok && (e - exps.front()) % s == 0;
    if (ok) return ell;
  }
  return 0;
}

}  // namespace

TEST_CASE("paper example over F_7") {
  const FiniteField F = FiniteField::make(7, 1);
  const IndexForm f = index_form(F, parse_poly(F, "x^5+x^3+x"));
  CHECK(f.b.code == 0);
  CHECK(f.a.code == 1);
  CHECK(f.r == 1);
  CHECK(f.s == 2);
  CHECK(f.ell == 3);
  CHECK(f.f == parse_poly(F, "x^2+x+1"));
  CHECK(f.n0 == 2);
  CHECK(f.degree == 5);
}

TEST_CASE("monomial plus constant has index 1") {
  const FiniteField F = FiniteField::make(13, 1);
  const IndexForm f = index_form(F, parse_poly(F, "5*x^4+2"));
  CHECK(f.b.code == 2);
  CHECK(f.a.code == 5);
  CHECK(f.r == 4);
  CHECK(f.ell == 1);
  CHECK(f.s == 12);
  CHECK(f.f == parse_poly(F, "1"));
  CHECK(f.n0 == 0);
}

TEST_CASE("x^9 + x over F_13") {
  const FiniteField F = FiniteField::make(13, 1);
  const IndexForm f = index_form(F, parse_poly(F, "x^9+x"));
  CHECK(f.r == 1);
  CHECK(f.s == 4);
  CHECK(f.ell == 3);
  CHECK(f.f == parse_poly(F, "x^2+1"));
  CHECK(f.n0 == 0);
}

TEST_CASE("index form of a non-monic, reducible-degree input") {
  const FiniteField F = FiniteField::make(7, 1);
  // 3x^13 reduces to 3x.
  const IndexForm f = index_form(F, parse_poly(F, "3*x^13+4*x^4+1"));
  CHECK(f.a.code == 4);
  CHECK(f.r == 1);
  CHECK(f.ell == 2);
  CHECK(f.f == parse_poly(F, "x+6"));  // x + 3/4
  CHECK_THROWS_AS(index_form(F, parse_poly(F, "x^7+6*x+2")), Error);
  CHECK_THROWS_AS(index_form(F, parse_poly(F, "0")), Error);
}

TEST_CASE("mapping from the paper example") {
  const FiniteField F = FiniteField::make(7, 1);
  const SparsePoly g = parse_poly(F, "x^5+x^3+x");
  const CyclotomicMapping map = mapping_from_index(F, index_form(F, g));
  REQUIRE(map.d == 3);
  CHECK(map.branches[0].a.code == 3);
  CHECK(map.branches[1].a.code == 0);
  CHECK(map.branches[2].a.code == 0);
  for (const Branch& br : map.branches) CHECK(br.R == parse_poly(F, "x"));
  CHECK(map.n0() == 2);
  CHECK(map.support() == std::vector<std::uint64_t>{0});
  CHECK(mapping_eval(F, map, F.zero()).code == 0);
  CHECK(mapping_eval(F, map, {1}).code == 3);
  CHECK(mapping_eval(F, map, {3}).code == 0);
  CHECK(poly_from_mapping(F, map) == g);
}

TEST_CASE("mapping edge cases") {
  const FiniteField F = FiniteField::make(13, 1);
  const CyclotomicMapping mono = mapping_from_index(F, index_form(F, parse_poly(F, "5*x^4+2")));
  REQUIRE(mono.d == 1);
  CHECK(mono.branches[0].a.code == 5);
  CHECK(mono.branches[0].R == parse_poly(F, "x^4"));
  CHECK(mono.offset.code == 2);

  const FiniteField F7 = FiniteField::make(7, 1);
  CyclotomicMapping id{1, {{F7.one(), parse_poly(F7, "x")}}, {}};
  CHECK(poly_from_mapping(F7, id) == parse_poly(F7, "x"));
  CyclotomicMapping zeros{3, {{{}, parse_poly(F7, "x")}, {{}, parse_poly(F7, "x^2")}, {{}, parse_poly(F7, "x")}}, {}};
  CHECK(poly_from_mapping(F7, zeros).is_zero());
  CyclotomicMapping bad{4, {{F7.one(), parse_poly(F7, "x")}}, {}};
  CHECK_THROWS_AS(validate_mapping(F7, bad), Error);
  CyclotomicMapping short_list{2, {{F7.one(), parse_poly(F7, "x")}}, {}};
  CHECK_THROWS_AS(validate_mapping(F7, short_list), Error);
}

TEST_CASE("general mapping with constant branches") {
  // C_0 -> 2, C_1 -> x^2 over F_7: the constant becomes 2 x^6 on nonzero x.
  const FiniteField F = FiniteField::make(7, 1);
  const CyclotomicMapping map{2, {{F.from_int(2), parse_poly(F, "1")}, {F.one(), parse_poly(F, "x^2")}}, {}};
  const SparsePoly g = poly_from_mapping(F, map);
  for (std::uint32_t x = 0; x < 7; ++x) CHECK(eval_poly(F, g, {x}) == mapping_eval(F, map, {x}));
}

TEST_CASE("exhaustive structure over small fields") {
  for (const char* lit : {"q=7", "q=3^2", "q=13", "q=2^3", "q=5"}) {
    const FiniteField F = parse_field(lit);
    const std::uint64_t Q = F.q();
    CAPTURE(lit);
    // All g of degree <= 4 with zero constant, plus one constant offset.
    const std::uint64_t total = Q * Q * Q * Q;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::vector<Term> terms;
      std::uint64_t rest = idx;
      for (std::uint64_t e = 1; e <= 4; ++e, rest /= Q) terms.push_back({e, {static_cast<std::uint32_t>(rest % Q)}});
      terms.push_back({0, {static_cast<std::uint32_t>(idx % Q)}});
      const SparsePoly g = canonicalize(F, make_poly(F, terms));
      if (g.is_constant()) continue;
      const IndexForm form = index_form(F, g);
      REQUIRE(reconstruct(F, form) == g);
      REQUIRE(form.ell == brute_ell(F, g));
      REQUIRE(F.order() % form.ell == 0);
      std::uint64_t gexp = form.ell;
      for (const Term& t : form.f.terms) gexp = std::gcd(gexp, t.exp);
      REQUIRE(gexp == 1);
      REQUIRE(form.f.leading() == F.one());
      REQUIRE((form.ell == 1) == (poly_sub(F, g, make_poly(F, {{0, form.b}})).terms.size() == 1));
      const CyclotomicMapping map = mapping_from_index(F, form);
      REQUIRE(map.n0() == form.n0);
      for (std::uint32_t x = 0; x < Q; ++x) {
        REQUIRE(F.add(mapping_eval(F, map, {x}), form.b) == eval_poly(F, g, {x}));
      }
      REQUIRE(poly_from_mapping(F, map) == poly_sub(F, g, make_poly(F, {{0, form.b}})));
    }
  }
}
