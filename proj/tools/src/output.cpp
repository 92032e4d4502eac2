#include "output.hpp"

#include <limits>
#include <ostream>

namespace roc::cli {

Json toJson(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

Json toJson(const Rational& v) { return toString(v); }

Json toJson(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(toJson(x));
  return a;
}

Json toJson(const std::map<int, BigInt>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = toJson(v);
  return o;
}

Json toJson(const RocFamily& f) {
  Json specs = Json::array();
  for (const auto& s : f.specs) specs.push_back({{"m", s.m}, {"q", s.q}, {"beta", s.beta}, {"weight", s.weight}});
  return {{"a", f.a}, {"specs", specs}};
}

Json envelope(const std::string& command, const Json& config) {
  return {{"schema", kSchema}, {"command", command}, {"config", config}};
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(std::ostream& out, const std::string& prefix, const Json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(out, prefix.empty() ? k : prefix + "." + k, v);
    return;
  }
  out << prefix << ": ";
  if (j.is_array()) {
    bool first = true;
    for (const auto& v : j) {
      if (!first) out << ", ";
      first = false;
      out << (v.is_structured() ? v.dump() : scalar(v));
    }
  } else {
    out << scalar(j);
  }
  out << '\n';
}

}  // namespace

void printText(std::ostream& out, const Json& j) { flatten(out, "", j); }

void emit(std::ostream& out, const Json& j, bool json) {
  if (json)
    out << j.dump(2) << '\n';
  else
    printText(out, j);
}

}  // namespace roc::cli
