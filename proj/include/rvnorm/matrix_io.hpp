#pragma once

#include <string>

#include "rvnorm/matrix.hpp"

namespace rvnorm {

/// Interchange format: {"n": int, "re": [[row-major reals]], "im": [[...]]}
/// with "im" optional for real matrices.
ComplexMatrix matrix_from_json(const std::string& text);
ComplexMatrix load_matrix(const std::string& path);
std::string matrix_to_json(const ComplexMatrix& z);

} // namespace rvnorm
