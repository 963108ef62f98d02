#pragma once

#include <map>
#include <string>

#include "kpzlab/combinatorics.hpp"

namespace kpz {

// Decimal rendering with 17 significant digits (round-trip exact).
std::string format_real(double v);

// {"N":..., "pmf":[{"l":..., "num":"...", "den":"..."}]} with the exact
// integers as decimal strings.
std::string plancherel_pmf_to_json(int n, const std::map<int, ExactProb>& pmf);

}  // namespace kpz
