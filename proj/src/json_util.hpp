// Shared helpers for the JSON file formats.
#pragma once

#include "neu/error.hpp"
#include "neu/triple.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace neu::detail {

using json = nlohmann::json;

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline json parse_json(const std::string& text)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

inline const json& require(const json& obj, const char* key, json::value_t type)
{
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  }
  const json& v = obj.at(key);
  const bool ok = type == json::value_t::number_float ? v.is_number() : v.type() == type;
  if (!ok) throw Error(ErrorKind::ParseError, std::string("field \"") + key + "\" has the wrong type");
  return v;
}

inline double number(const json& v, const std::string& what)
{
  if (!v.is_number()) throw Error(ErrorKind::ParseError, what + " must be a number");
  return v.get<double>();
}

inline Triple triple_from_json(const json& v, const std::string& what)
{
  if (!v.is_array() || v.size() != 3) {
    throw Error(ErrorKind::ParseError, what + " must be an array [t, i, f]");
  }
  return make_triple(number(v[0], what), number(v[1], what), number(v[2], what));
}

inline json triple_to_json(const Triple& t)
{
  return json::array({t.t(), t.i(), t.f()});
}

}  // namespace neu::detail
