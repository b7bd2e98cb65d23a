#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "leibniz/algebra.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

/// Canonical interchange format:
///   {"name": "...", "field": {...}, "basis": ["z","a"],
///    "brackets": {"a,a": {"z": "1"}}}
/// Pairs absent from "brackets" are zero.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

Algebra load_algebra(const std::string& path);
void save_algebra(const Algebra& a, const std::string& path);

}  // namespace leibniz
