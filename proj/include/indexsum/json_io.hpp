#pragma once

#include <json.hpp>

#include "indexsum/bounds.hpp"
#include "indexsum/cyclotomic.hpp"
#include "indexsum/field.hpp"
#include "indexsum/index_form.hpp"

namespace indexsum {

/// {"p": 7, "coeffs": [5,0,0,1,1,0,0]}
nlohmann::json to_json(const CyclotomicValue& v);
/// ParseError on a malformed object.
CyclotomicValue cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Comparison& c);
nlohmann::json to_json(const BoundReport& r);
/// Integer code over a prime field, bracket syntax otherwise.
nlohmann::json to_json(const FiniteField& F, FieldElement x);
/// Elements as above; f in the CLI syntax of `F`.
nlohmann::json to_json(const FiniteField& F, const IndexForm& form);
nlohmann::json to_json(const FiniteField& F);

}  // namespace indexsum
