#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hilbtaut::front {

using json = nlohmann::ordered_json;

// ORACLE: exterior/even ring evaluation. FORMULA: closed-form engines. BOTH: both, required equal.
enum class Provenance { Oracle, Formula, Both };
std::string to_string(Provenance p);

struct Row {
  std::string label;
  std::optional<std::string> expected;
  std::string computed;
  Provenance provenance = Provenance::Formula;
  std::string citation;
  bool match = true;
};

Row checked_row(std::string label, std::string expected, std::string computed, Provenance p, std::string citation);
Row plain_row(std::string label, std::string computed, Provenance p);

struct Report {
  std::string command;
  json echo = json::object();
  std::vector<Row> rows;
  json details = json::object();
  // Source statements the engines contradict; reported, never counted.
  std::vector<Row> errata;

  bool passed() const;
  json to_json() const;
  std::string to_text() const;
};

}  // namespace hilbtaut::front
