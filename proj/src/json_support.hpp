// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MATMED_SRC_JSON_SUPPORT_HPP_
#define MATMED_SRC_JSON_SUPPORT_HPP_

#include <json.hpp>
#include <string>
#include <vector>

#include "matmed/errors.hpp"
#include "matmed/matroid.hpp"
#include "matmed/rational.hpp"

namespace matmed::json_support {

using Json = nlohmann::json;

inline const Json& require(const Json& obj, const std::string& key) {
  if (!obj.is_object()) throw ParseError("expected an object holding \"" + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing key \"" + key + "\"");
  return *it;
}

inline Rational to_rational(const Json& value, const std::string& context) {
  if (!value.is_string()) throw ParseError(context + ": expected a \"p/q\" string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(context + ": " + e.what());
  }
}

inline int to_int(const Json& value, const std::string& context) {
  if (!value.is_number_integer()) throw ParseError(context + ": expected an integer");
  return value.get<int>();
}

inline std::string to_id(const Json& value, const std::string& context) {
  if (!value.is_string()) throw ParseError(context + ": expected an id string");
  return value.get<std::string>();
}

inline Json from_rational(const Rational& r) { return to_string(r); }

// Maps id strings to indices for one entity list.
class IdTable {
 public:
  IdTable(const std::vector<std::string>& ids, std::string what) : ids_(&ids), what_(std::move(what)) {}

  int index(const Json& value, const std::string& context) const {
    std::string id = to_id(value, context);
    for (size_t k = 0; k < ids_->size(); ++k) {
      if ((*ids_)[k] == id) return static_cast<int>(k);
    }
    throw ParseError(context + ": unknown " + what_ + " id \"" + id + "\"");
  }

  FacilitySet set(const Json& value, const std::string& context) const {
    if (!value.is_array()) throw ParseError(context + ": expected a list of ids");
    std::vector<int> out;
    for (const auto& v : value) out.push_back(index(v, context));
    return make_set(std::move(out));
  }

  Json ids(const FacilitySet& s) const {
    Json out = Json::array();
    for (int k : s) out.push_back((*ids_)[k]);
    return out;
  }

  const std::string& id(int k) const { return (*ids_)[k]; }

 private:
  const std::vector<std::string>* ids_;
  std::string what_;
};

Json matroid_to_json(const MatroidSpec& m, const IdTable& facilities);
MatroidSpec matroid_from_json(const Json& value, const IdTable& facilities,
                              const FacilitySet& default_ground);

}  // namespace matmed::json_support

#endif  // MATMED_SRC_JSON_SUPPORT_HPP_
