#include "kpzlab/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace kpz {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string plancherel_pmf_to_json(int n, const std::map<int, ExactProb>& pmf) {
  nlohmann::json j;
  j["N"] = n;
  j["pmf"] = nlohmann::json::array();
  for (const auto& [l, prob] : pmf) {
    j["pmf"].push_back({{"l", l},
                        {"num", prob.numerator().str()},
                        {"den", prob.denominator().str()}});
  }
  return j.dump();
}

}  // namespace kpz
