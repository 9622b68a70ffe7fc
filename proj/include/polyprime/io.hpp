#pragma once

#include <json.hpp>

#include "polyprime/systems.hpp"

namespace polyprime {

/// Matrix literal: array-of-arrays of coefficient lists, row-major,
/// low-to-high; [[[0,1],[1]],[[0],[1]]] = [[z,1],[0,1]].  Coefficients are
/// integers in a prime field, base-p digit lists in an extension.
PolyMat parse_poly_matrix(const nlohmann::json& j, const FieldPtr& f);
nlohmann::json poly_matrix_to_json(const PolyMat& m);

Mat parse_scalar_matrix(const nlohmann::json& j, const FieldPtr& f);
nlohmann::json scalar_matrix_to_json(const Mat& m);

/// System literal: object with "field" ("p^e") and A, B, C, D.
StateSpace parse_state_space(const nlohmann::json& j);
nlohmann::json state_space_to_json(const StateSpace& sys);

}  // namespace polyprime
