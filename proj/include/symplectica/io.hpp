#pragma once

#include <string>

#include "symplectica/matrix.hpp"

namespace symplectica {

enum class MatrixFormat { Json, Text };

/// json: {"n": 2, "data": [[...], [...]]}
/// text: first line n, then n rows of n numbers; 17 significant digits so
/// that parse(serialize(M)) round-trips bit-exactly.
std::string serialize_matrix(const SquareMatrix& m, MatrixFormat format);

/// Throws BadInput with a diagnostic naming the first violated invariant.
SquareMatrix parse_matrix(const std::string& payload, MatrixFormat format);

/// Sniffs the format: payload starting with '{' parses as json.
SquareMatrix parse_matrix_auto(const std::string& payload);

SquareMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const SquareMatrix& m, MatrixFormat format);

/// Locale-independent, fixed significant digits, keeps trailing zeros
/// ("%#.<digits>g"): 13 -> "13.0000000000" at 12 digits.
std::string format_significant(double x, int digits);

/// Shortest exact decimal ("%.17g"), used for matrix payloads.
std::string format_exact(double x);

}  // namespace symplectica
