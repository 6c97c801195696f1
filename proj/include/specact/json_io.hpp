#pragma once

// JSON encodings of inputs and results.
//
// Exact numbers are {"rat": "p/q", "pi_power": n}; polynomial coefficients
// are {"poly": {"<monomial>": "p/q", ...}, "pi_power": n} with monomials
// written as "gamma^2*Lambda2" ("1" for the constant). Floating values carry
// "approx": true. Keys are sorted, so dump(parse(dump(x))) == dump(x).

#include "json.hpp"
#include "specact/invariants.hpp"
#include "specact/operator_terms.hpp"
#include "specact/powercount.hpp"
#include "specact/spectral.hpp"

#include <string>

namespace specact::io {

using nlohmann::json;

/// Reads a JSON file; MalformedInput names the file and the parse failure.
json read_file(const std::string& path);

/// A rational from a "p/q" string or an integer.
Rat rat_from(const json& j);

json exact(const Rat& r);
json exact(const PiScaled& v);
json exact(const PiPoly& v);
json approx(double v);

json to_json(const Poly& p);
Poly poly_from(const json& j);
json to_json(const InvariantPolynomial& p);

json to_json(const SpectralFunction& f);
SpectralFunction spectral_from(const json& j);

json to_json(const GraphSpec& g);
GraphSpec graph_from(const json& j);

json to_json(const QuadraticForm& q);
QuadraticForm quadratic_from(const json& j);

}  // namespace specact::io
