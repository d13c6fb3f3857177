#include "kolmo/tolerances.hpp"

#include <cstdlib>
#include <string>

#include "kolmo/errors.hpp"

namespace kolmo {

namespace {

double parse_positive(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw InvalidParams("tolerance '" + key + "' has unparsable value '" + value + "'");
  }
  if (used != value.size() || !(v > 0)) {
    throw InvalidParams("tolerance '" + key + "' must be a positive number, got '" + value + "'");
  }
  return v;
}

}  // namespace

Tolerances parse_tolerances(std::string_view text, Tolerances base) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    pos = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidParams("tolerance entry '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const double v = parse_positive(key, item.substr(eq + 1));
    if (key == "opt") base.opt = v;
    else if (key == "check") base.check = v;
    else if (key == "mean") base.mean = v;
    else if (key == "compare") base.compare = v;
    else if (key == "admissible") base.admissible = v;
    else if (key == "beta") base.beta = v;
    else throw InvalidParams("unknown tolerance key '" + key + "'");
  }
  return base;
}

Tolerances tolerances_from_env() {
  const char* env = std::getenv("KOLMO_TOL");
  if (env == nullptr) return {};
  return parse_tolerances(env);
}

}  // namespace kolmo
