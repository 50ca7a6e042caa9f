#pragma once

#include <json.hpp>

#include "mtrace/matrix.hpp"
#include "mtrace/scalar.hpp"

namespace mtrace {

// Scalar encodings: rationals are "p/q" strings, GF(p) residues are plain
// integers, cyclotomic values are arrays of rational strings (ascending
// powers of zeta).  Parsers also accept integers/strings interchangeably
// where unambiguous.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const nlohmann::json& j);

// Matrices as nested row-major arrays of scalar encodings.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const nlohmann::json& j);

}  // namespace mtrace
