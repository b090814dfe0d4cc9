#pragma once

#include <string>

#include <json.hpp>

#include "partstab/product_spec.hpp"
#include "partstab/stabilization.hpp"
#include "partstab/subsums.hpp"

namespace partstab {

using json = nlohmann::ordered_json;

/// Accepts {"rules": [{"a", "b", "c", "sign", "jmin", "jmax"}], "laurent", "name"}
/// (expressions as strings or integers, every rule key optional) or
/// {"preset": name, "m": .., "i": ..}. Throws spec_error on anything else.
ProductSpec spec_from_json(const json &j);
json spec_to_json(const ProductSpec &spec);

json to_json(const HypothesisCheck &h);
json to_json(const StabilizationReport &rep);
json to_json(const PowerSeries &s);

/// {"n": n, "coeffs": [{"zexp": k, "value": "decimal"}]}, nonzero terms only,
/// ascending zexp.
json coefficients_json(long n, const ZPolynomial &p);
json coefficients_json(long n, const LaurentPolynomial &p);

/// {"name", "order", "polys": [coefficients_json...]}.
json to_json(const ZSequence &seq);
json to_json(const LaurentSequence &seq);

/// "n,k,value" header, one line per nonzero entry.
std::string lambda_csv(const LambdaTable &table);

} // namespace partstab
