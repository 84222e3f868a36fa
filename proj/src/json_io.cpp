#include "indexsum/json_io.hpp"

#include "indexsum/error.hpp"
#include "indexsum/poly.hpp"

namespace indexsum {

using nlohmann::json;

json to_json(const CyclotomicValue& v) { return {{"p", v.prime()}, {"coeffs", v.coeffs()}}; }

CyclotomicValue cyclotomic_from_json(const json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    auto coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
    if (coeffs.size() != p) throw Error(ErrorCode::ParseError, "coeffs must have length p");
    return CyclotomicValue(p, std::move(coeffs));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json to_json(const Comparison& c) {
  return {{"lhs", c.lhs}, {"lhs_error", c.lhs_error}, {"rhs", c.rhs}, {"holds", to_string(c.verdict)}, {"exact", c.exact}};
}

json to_json(const BoundReport& r) {
  json alts = json::array();
  for (const AltCenter& a : r.alternatives) {
    alts.push_back({{"label", a.label}, {"center", to_json(a.center)}, {"center_den", a.center_den},
                    {"outcome", to_json(a.outcome)}});
  }
  return {{"bound", r.bound},
          {"sum", to_json(r.sum)},
          {"center", to_json(r.center)},
          {"center_den", r.center_den},
          {"lhs", r.lhs},
          {"lhs_error", r.lhs_error},
          {"rhs", r.rhs},
          {"rhs_coeff", {r.rhs_coeff.numerator(), r.rhs_coeff.denominator()}},
          {"radicand", r.radicand},
          {"applicable", r.applicable},
          {"reason", r.reason},
          {"holds", to_string(r.verdict)},
          {"exact_decision", r.exact_decision},
          {"slack", r.slack},
          {"params", r.params},
          {"flags", r.flags},
          {"alternatives", alts}};
}

json to_json(const FiniteField& F, FieldElement x) {
  if (F.m() == 1) return x.code;
  return format_element(F, x);
}

json to_json(const FiniteField& F, const IndexForm& form) {
  return {{"b", to_json(F, form.b)}, {"a", to_json(F, form.a)}, {"r", form.r},
          {"s", form.s},                    {"ell", form.ell},                  {"f", format_poly(F, form.f)},
          {"n0", form.n0},                  {"degree", form.degree}};
}

json to_json(const FiniteField& F) {
  return {{"p", F.p()},
          {"m", F.m()},
          {"q", F.q()},
          {"modulus", F.modulus()},
          {"gamma", to_json(F, F.gamma())},
          {"tables", F.has_tables()},
          {"literal", F.describe()}};
}

}  // namespace indexsum
