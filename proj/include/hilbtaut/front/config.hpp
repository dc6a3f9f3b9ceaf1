#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hilbtaut/front/report.hpp"
#include "hilbtaut/lattice/ns.hpp"
#include "hilbtaut/stability/rules.hpp"
#include "hilbtaut/taut/sheaf.hpp"

namespace hilbtaut::front {

inline constexpr const char* kJobSchema = "hilbtaut.jobconfig/1";

struct JobConfig {
  lattice::SurfaceDesc surface;
  taut::SheafDesc sheaf;
  int n = 2;
  stability::Target target = stability::Target::Hilb;
  lattice::PolFamily polarisation = lattice::PolFamily::HN;
  std::int64_t search_bound = 50;
  std::optional<exact::GradedDims> coh_FL;
  std::optional<exact::GradedDims> coh_L;
  json echo;
};

// CONFIG_INVALID with the JSON pointer of the offending field.
JobConfig parse_job_config(const std::string& text);

}  // namespace hilbtaut::front
