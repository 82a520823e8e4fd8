#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cubisym/cubic_form.hpp"
#include "cubisym/linalg.hpp"

namespace cubisym {

/// Malformed input document; the message names the offending key or entry.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Integer when it fits in 64 bits, otherwise the "p/q" string.
nlohmann::json scalar_to_json(const Scalar& s);
/// Accepts JSON integers and "p" / "p/q" strings.
Scalar scalar_from_json(const nlohmann::json& j, const std::string& context);

/// {"A1": .., ..., "F": ..}; every key is written, in sorted multi-index order.
nlohmann::json form_to_json(const CubicForm& form);
/// Missing keys mean 0; unknown keys and malformed values throw FormatError.
CubicForm form_from_json(const nlohmann::json& j);

/// 3x3 array of "p/q" strings.
nlohmann::json matrix_to_json(const Mat3& m);
/// Accepts a 3x3 array of integers or rational strings.
Mat3 matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vec3& v);

/// Reads a JSON document from a file, or parses the argument directly when it
/// starts with '{' or '['.
nlohmann::json load_json_argument(const std::string& path_or_inline);

}  // namespace cubisym
