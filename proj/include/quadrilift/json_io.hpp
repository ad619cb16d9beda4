#pragma once

#include <json.hpp>

#include <string>

#include "quadrilift/admissibility.hpp"
#include "quadrilift/error.hpp"
#include "quadrilift/matrix.hpp"

namespace quadrilift {

using Json = nlohmann::ordered_json;

/// JSON shape problems (wrong types, missing keys). Mapped to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

/// A rational from a JSON string ("-3/4") or integer.
Rational rational_from_json(const Json& j);
/// {"diag": [...]} or a bare array of entries.
QuadraticSpace space_from_json(const Json& j);
/// Array of rows of rationals.
Matrix matrix_from_json(const Json& j);
/// {"lambda": "-1", "eps": 1 | {"real": -1, "p:2": -1}, "dim": 3}.
GlobalQuadCharacter character_from_json(const Json& j, std::size_t default_dim);

/// {"q", "qp", "n", "xi", "xip"}. When both characters are missing they are
/// constructed from the spaces; a single missing one is an input error.
GlobalQuadruple quadruple_from_json(const Json& j);

/// Parses text as JSON, raising InputError with the parser message.
Json parse_json(const std::string& text);

Json to_json(const Rational& x);
Json to_json(const QuadraticSpace& q);
Json to_json(const Matrix& m);
Json to_json(const GlobalQuadCharacter& chi);
Json to_json(const InvariantTriple& inv);
Json to_json(const AdmissibilityReport& report);

}  // namespace quadrilift
