#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hilbtaut/front/config.hpp"
#include "hilbtaut/front/report.hpp"

namespace hilbtaut::front {

// Rows are evaluated on up to `workers` threads (0: HILBTAUT_WORKERS / hardware);
// output order is fixed. `inject` names a row whose expected value is replaced, for harness tests.
Report cmd_verify(unsigned workers = 0, const std::string& inject = "");

Report cmd_slope(const JobConfig& c);
Report cmd_stability(const JobConfig& c, std::optional<std::int64_t> bound = std::nullopt, unsigned workers = 0);
Report cmd_cohomology(const JobConfig& c);
// Either k (base-point ideal ledger) or a config (deformation split of its sheaf), or both.
Report cmd_deform(std::optional<long> k, const JobConfig* c);
Report cmd_eval(const std::string& ring, const std::string& expr);

}  // namespace hilbtaut::front
