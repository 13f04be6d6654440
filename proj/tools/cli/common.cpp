#include <string>

#include "command.hpp"
#include "resproc/common.hpp"

namespace resproc::cli {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ValidationError(what + ": expected an integer");
  return v.get<std::int64_t>();
}

double as_number(const Json& v, const std::string& what) {
  if (!v.is_number()) throw ValidationError(what + ": expected a number");
  return v.get<double>();
}

std::int64_t get_int(const Json& j, const char* key) { return as_int(require(j, key), std::string("field '") + key + "'"); }

std::optional<std::int64_t> get_opt_int(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get_int(j, key);
}

double get_number(const Json& j, const char* key) {
  return as_number(require(j, key), std::string("field '") + key + "'");
}

const Json& require_array(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_array()) throw ValidationError(std::string("field '") + key + "': expected an array");
  return v;
}

std::vector<std::int64_t> get_int64_list(const Json& j, const char* key) {
  std::vector<std::int64_t> out;
  const Json& arr = require_array(j, key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_int(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> get_int_list(const Json& j, const char* key) {
  std::vector<int> out;
  for (std::int64_t v : get_int64_list(j, key)) {
    if (v < INT32_MIN || v > INT32_MAX) throw ValidationError(std::string("field '") + key + "': value out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::pair<int, int>> get_pair_list(const Json& j, const char* key) {
  std::vector<std::pair<int, int>> out;
  const Json& arr = require_array(j, key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw ValidationError(where + ": expected a pair");
    out.emplace_back(static_cast<int>(as_int(arr[i][0], where)), static_cast<int>(as_int(arr[i][1], where)));
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

void oracle_verdict(Outcome& out, bool agree, const std::string& what) {
  out.doc["oracle"] = agree ? "agree" : "mismatch";
  if (!agree) {
    out.oracle_mismatch = true;
    out.notes.push_back("oracle mismatch: " + what);
  }
}

void oracle_skipped(Outcome& out, const std::string& why) {
  out.doc["oracle"] = "skipped";
  out.notes.push_back("oracle skipped: " + why);
}

}  // namespace resproc::cli
