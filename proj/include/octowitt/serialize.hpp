#pragma once

#include "json.hpp"

#include "octowitt/clifford.hpp"
#include "octowitt/octonion.hpp"
#include "octowitt/polynomial.hpp"
#include "octowitt/rational.hpp"
#include "octowitt/tensor.hpp"

namespace octowitt {

using Json = nlohmann::ordered_json;

// Rational: "num/den" in lowest terms, integers without "/1". Parsing also
// accepts JSON integers.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Octonion: array of 8 rationals.
Json to_json(const Octonion& o);
Octonion octonion_from_json(const Json& j);

// {"dim": m, "terms": [{"blade": [...], "coeff": "p/q"}]}, canonical order.
Json to_json(const Multivector& u);
Multivector multivector_from_json(const Json& j);

// {"dim": m, "terms": [{"blade": [...], "oct": [8 rationals]}]}.
Json to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j);

// {"dim": m, "n": n, "terms": [{"blade": [...], "slots": [n x 8 rationals]}]}.
Json to_json(const MultiTensorElement& t);
MultiTensorElement multi_tensor_from_json(const Json& j);

// {"nvars": m, "terms": [{"exps": [...], "coeff": TensorElement}]}.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// Coordinates: JSON array of rationals.
std::vector<Rational> coordinates_from_json(const Json& j);

}  // namespace octowitt
