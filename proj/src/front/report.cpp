#include "hilbtaut/front/report.hpp"

#include <algorithm>
#include <sstream>

namespace hilbtaut::front {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Oracle: return "ORACLE";
    case Provenance::Formula: return "FORMULA";
    case Provenance::Both: return "BOTH";
  }
  return "FORMULA";
}

Row checked_row(std::string label, std::string expected, std::string computed, Provenance p, std::string citation) {
  Row r;
  r.match = expected == computed;
  r.label = std::move(label);
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.provenance = p;
  r.citation = std::move(citation);
  return r;
}

Row plain_row(std::string label, std::string computed, Provenance p) {
  Row r;
  r.label = std::move(label);
  r.computed = std::move(computed);
  r.provenance = p;
  return r;
}

bool Report::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.match; });
}

namespace {

json row_json(const Row& r) {
  json j;
  j["label"] = r.label;
  j["expected"] = r.expected ? json(*r.expected) : json(nullptr);
  j["computed"] = r.computed;
  j["provenance"] = to_string(r.provenance);
  j["match"] = r.match;
  if (!r.citation.empty()) j["citation"] = r.citation;
  return j;
}

void table(std::ostringstream& out, const std::vector<Row>& rows) {
  std::size_t wl = 5, we = 8, wc = 8;
  for (const auto& r : rows) {
    wl = std::max(wl, r.label.size());
    we = std::max(we, r.expected.value_or("-").size());
    wc = std::max(wc, r.computed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("label", wl) << "  " << pad("expected", we) << "  " << pad("computed", wc) << "  "
      << pad("source", 7) << "  ok\n";
  for (const auto& r : rows)
    out << pad(r.label, wl) << "  " << pad(r.expected.value_or("-"), we) << "  " << pad(r.computed, wc) << "  "
        << pad(to_string(r.provenance), 7) << "  " << (r.match ? "yes" : "NO") << "\n";
}

}  // namespace

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["config"] = echo;
  json rs = json::array();
  for (const auto& r : rows) rs.push_back(row_json(r));
  j["rows"] = rs;
  if (!details.empty()) j["details"] = details;
  if (!errata.empty()) {
    json es = json::array();
    for (const auto& r : errata) es.push_back(row_json(r));
    j["errata"] = es;
  }
  j["overall"] = passed() ? "PASS" : "FAIL";
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "hilbtaut " << command << "\n\n";
  if (!rows.empty()) table(out, rows);
  if (!details.empty()) out << "\ndetails:\n" << details.dump(2) << "\n";
  if (!errata.empty()) {
    out << "\nerrata (source statements that do not hold; not counted):\n";
    table(out, errata);
  }
  std::size_t ok = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.match; });
  out << "\n" << (passed() ? "PASS" : "FAIL") << " (" << ok << "/" << rows.size() << " rows)\n";
  return out.str();
}

}  // namespace hilbtaut::front
