#include "pihall/bounds.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "pihall/error.hpp"

namespace pihall {

Bounds parse_bounds(const char* spec) {
  Bounds b;
  if (spec == nullptr || *spec == '\0') return b;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(Errc::invalid_argument, "PIHALL_BOUNDS: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    unsigned long long value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "PIHALL_BOUNDS: bad value in '" + item + "'");
    }
    if (key == "degree") b.max_degree = static_cast<int>(value);
    else if (key == "order") b.max_build_order = value;
    else if (key == "enum") b.max_enum_order = value;
    else if (key == "brute") b.max_brute_order = value;
    else if (key == "closure") b.max_closure_oracle = value;
    else if (key == "classes") b.max_classes = static_cast<std::size_t>(value);
    else fail(Errc::invalid_argument, "PIHALL_BOUNDS: unknown key '" + key + "'");
  }
  return b;
}

const Bounds& bounds() {
  static const Bounds instance = parse_bounds(std::getenv("PIHALL_BOUNDS"));
  return instance;
}

}  // namespace pihall
