#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "jcone/matrix.hpp"

namespace jcone {

using AnyMatrix = std::variant<MatrixR, MatrixC, MatrixH>;

Field field_of(const AnyMatrix& m);
Index dimension_of(const AnyMatrix& m);

/// Widens a matrix to the given field (R -> C -> H); narrowing throws.
AnyMatrix promote_to(const AnyMatrix& m, Field f);

/// Scalar encodings: R -> number, C -> [re, im], H -> [a, b, c, d].
template <Scalar T>
nlohmann::json encode_scalar(const T& x);
template <Scalar T>
T decode_scalar(const nlohmann::json& j);

/// MatrixFile payload {"cols", "data", "field", "rows"}; data is row-major.
template <Scalar T>
nlohmann::json encode_matrix(const Matrix<T>& m);
nlohmann::json encode_matrix(const AnyMatrix& m);
AnyMatrix decode_matrix(const nlohmann::json& j);

/// Canonical text: keys sorted, ", " and ": " separators, integers as
/// integers and every floating-point number printed with %.17g.
std::string canonical_dump(const nlohmann::json& j);

std::string serialize_matrix(const AnyMatrix& m);
/// Parses a MatrixFile. Throws Error(kParse) naming the offending field.
AnyMatrix parse_matrix(const std::string& text);

AnyMatrix read_matrix_file(const std::string& path);

}  // namespace jcone
