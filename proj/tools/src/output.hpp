#pragma once

#include "roc/numeric.hpp"
#include "roc/sampler.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace roc::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "roc/1";

// Integers that fit in 64 bits become numbers, larger ones strings.
Json toJson(const BigInt& v);
Json toJson(const Rational& v);  // "p/q"
Json toJson(const std::vector<Rational>& v);
Json toJson(const std::map<int, BigInt>& m);
Json toJson(const RocFamily& f);

// {"schema", "command", "config"} header.
Json envelope(const std::string& command, const Json& config);

// One "key: value" line per top-level field; arrays comma-joined, objects
// flattened with dotted keys.
void printText(std::ostream& out, const Json& j);

void emit(std::ostream& out, const Json& j, bool json);

}  // namespace roc::cli
