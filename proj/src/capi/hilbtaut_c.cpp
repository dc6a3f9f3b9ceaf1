#include "hilbtaut.h"

#include <string>

#include "hilbtaut/error.hpp"
#include "hilbtaut/front/commands.hpp"

struct ht_report {
  std::string json;
  std::string text;
  bool passed = false;
};

namespace {

thread_local std::string last_error;

template <class Fn>
ht_status guarded(ht_report** out, Fn fn) {
  if (!out) {
    last_error = "output pointer is NULL";
    return HT_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    hilbtaut::front::Report rep = fn();
    auto* r = new ht_report;
    r->json = rep.to_json().dump(2) + "\n";
    r->text = rep.to_text();
    r->passed = rep.passed();
    *out = r;
    last_error.clear();
    return HT_OK;
  } catch (const hilbtaut::Error& e) {
    last_error = e.what();
    return static_cast<ht_status>(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("INTERNAL: ") + e.what();
    return HT_INTERNAL;
  }
}

bool null_arg(const char* p, const char* name) {
  if (p) return false;
  last_error = std::string(name) + " is NULL";
  return true;
}

}  // namespace

using namespace hilbtaut::front;

extern "C" {

ht_status ht_verify(unsigned workers, const char* inject, ht_report** out) {
  return guarded(out, [&] { return cmd_verify(workers, inject ? inject : ""); });
}

ht_status ht_run_slope(const char* config_json, ht_report** out) {
  if (null_arg(config_json, "config")) return HT_INVALID_ARGUMENT;
  return guarded(out, [&] { return cmd_slope(parse_job_config(config_json)); });
}

ht_status ht_run_stability(const char* config_json, int64_t search_bound, unsigned workers, ht_report** out) {
  if (null_arg(config_json, "config")) return HT_INVALID_ARGUMENT;
  return guarded(out, [&] {
    std::optional<std::int64_t> b;
    if (search_bound > 0) b = search_bound;
    return cmd_stability(parse_job_config(config_json), b, workers);
  });
}

ht_status ht_run_cohomology(const char* config_json, ht_report** out) {
  if (null_arg(config_json, "config")) return HT_INVALID_ARGUMENT;
  return guarded(out, [&] { return cmd_cohomology(parse_job_config(config_json)); });
}

ht_status ht_run_deform(int has_k, long k, const char* config_json, ht_report** out) {
  return guarded(out, [&] {
    std::optional<long> kk;
    if (has_k) kk = k;
    if (!config_json) return cmd_deform(kk, nullptr);
    JobConfig c = parse_job_config(config_json);
    return cmd_deform(kk, &c);
  });
}

ht_status ht_eval(const char* ring, const char* expr, ht_report** out) {
  if (null_arg(ring, "ring") || null_arg(expr, "expr")) return HT_INVALID_ARGUMENT;
  return guarded(out, [&] { return cmd_eval(ring, expr); });
}

const char* ht_report_json(const ht_report* r) { return r ? r->json.c_str() : ""; }
const char* ht_report_text(const ht_report* r) { return r ? r->text.c_str() : ""; }
int ht_report_passed(const ht_report* r) { return r && r->passed ? 1 : 0; }
void ht_report_free(ht_report* r) { delete r; }

const char* ht_last_error(void) { return last_error.c_str(); }
const char* ht_version(void) { return "0.1.0"; }

}
