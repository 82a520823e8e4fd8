#include "cubisym/form_io.hpp"

#include <fstream>
#include <sstream>

namespace cubisym {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
  if (s.is_integer() && s.numerator().fits_slong_p()) return s.numerator().get_si();
  return s.to_string();
}

Scalar scalar_from_json(const json& j, const std::string& context) {
  try {
    if (j.is_number_integer()) return Scalar(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(context + ": " + e.what());
  }
  throw FormatError(context + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

json form_to_json(const CubicForm& form) {
  json j = json::object();
  for (Component c : kComponentOrder) j[std::string(component_name(c))] = scalar_to_json(form[c]);
  return j;
}

CubicForm form_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("cubic form must be a JSON object");
  CubicForm form;
  for (const auto& [key, value] : j.items()) {
    Component c;
    try {
      c = component_from_name(key);
    } catch (const std::invalid_argument&) {
      throw FormatError("unknown cubic form key '" + key + "'");
    }
    form[c] = scalar_from_json(value, "key '" + key + "'");
  }
  return form;
}

json matrix_to_json(const Mat3& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 3; ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Mat3 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("matrix must be a 3x3 array");
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw FormatError("matrix row " + std::to_string(r) + " must have 3 entries");
    for (std::size_t c = 0; c < 3; ++c)
      m(r, c) = scalar_from_json(j[r][c], "matrix entry [" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

json vector_to_json(const Vec3& v) {
  return json::array({v[0].to_string(), v[1].to_string(), v[2].to_string()});
}

json load_json_argument(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    text = path_or_inline;
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw FormatError("cannot open '" + path_or_inline + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON in '" + path_or_inline + "': " + e.what());
  }
}

}  // namespace cubisym
