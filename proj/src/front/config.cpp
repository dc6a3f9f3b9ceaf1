#include "hilbtaut/front/config.hpp"

#include <set>

#include "hilbtaut/error.hpp"

namespace hilbtaut::front {

using exact::GradedDims;
using exact::Rat;
using lattice::PolFamily;
using lattice::SurfaceDesc;
using lattice::SurfaceKind;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ConfigInvalid, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& object_at(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) bad(path + "/" + k, "unknown field");
  return j;
}

const json* field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& required(const json& obj, const std::string& path, const char* key) {
  const json* f = field(obj, key);
  if (!f) bad(path + "/" + key, "required field missing");
  return *f;
}

std::int64_t integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected true or false");
  return j.get<bool>();
}

Rat rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const Error&) {
      bad(path, "expected a rational like \"3\" or \"-1/2\"");
    }
  }
  bad(path, "expected an integer or a rational string");
}

GradedDims dims(const json& j, const std::string& path, std::size_t len) {
  if (!j.is_array() || j.size() != len) bad(path, "expected an array of " + std::to_string(len) + " integers");
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::int64_t x = integer(j[i], path + "/" + std::to_string(i));
    if (x < 0) bad(path + "/" + std::to_string(i), "dimensions are non-negative");
    v.push_back(x);
  }
  return GradedDims(v);
}

SurfaceDesc parse_surface(const json& j) {
  const std::string p = "/surface";
  object_at(j, p, {"kind", "h_square", "fibre_multiple"});
  SurfaceKind kind;
  try {
    kind = lattice::surface_kind_from_string(string_at(required(j, p, "kind"), p + "/kind"));
  } catch (const Error&) {
    bad(p + "/kind", "expected one of K3, elliptic-K3, regular-generic, abelian-star");
  }
  const json* h2 = field(j, "h_square");
  const json* fm = field(j, "fibre_multiple");
  if (h2 && kind != SurfaceKind::K3 && kind != SurfaceKind::RegularGeneric)
    bad(p + "/h_square", "only K3 and regular-generic surfaces take h_square");
  if (fm && kind != SurfaceKind::EllipticK3) bad(p + "/fibre_multiple", "only elliptic-K3 takes fibre_multiple");
  SurfaceDesc s;
  switch (kind) {
    case SurfaceKind::K3:
    case SurfaceKind::RegularGeneric: {
      Rat v = h2 ? rational(*h2, p + "/h_square") : Rat(2);
      if (v.sign() <= 0) bad(p + "/h_square", "H^2 must be positive");
      s = kind == SurfaceKind::K3 ? SurfaceDesc::k3(v) : SurfaceDesc::regular(v);
      break;
    }
    case SurfaceKind::EllipticK3: {
      std::int64_t k = fm ? integer(*fm, p + "/fibre_multiple") : 3;
      if (k < 3) bad(p + "/fibre_multiple", "H = C + kE is ample only for k >= 3");
      s = SurfaceDesc::elliptic_k3(k);
      break;
    }
    case SurfaceKind::AbelianStar: s = SurfaceDesc::abelian_star(); break;
  }
  s.validate();
  return s;
}

taut::SheafDesc parse_sheaf(const json& j, const SurfaceDesc& s) {
  const std::string p = "/sheaf";
  object_at(j, p, {"rank", "c1", "coh", "ext_self", "flags"});
  taut::SheafDesc F;
  F.rank = integer(required(j, p, "rank"), p + "/rank");
  if (F.rank < 1) bad(p + "/rank", "rank must be >= 1");
  const json& c1 = required(j, p, "c1");
  if (!c1.is_array() || static_cast<int>(c1.size()) != s.rank())
    bad(p + "/c1", "expected " + std::to_string(s.rank()) + " NS coordinates");
  for (std::size_t i = 0; i < c1.size(); ++i) F.c1.push_back(rational(c1[i], p + "/c1/" + std::to_string(i)));
  if (const json* c = field(j, "coh")) F.coh = dims(*c, p + "/coh", 3);
  if (const json* e = field(j, "ext_self")) F.ext_self = dims(*e, p + "/ext_self", 3);
  if (const json* f = field(j, "flags")) {
    const std::string fp = p + "/flags";
    object_at(*f, fp, {"mu_stable", "torsion_free", "locally_free", "symmetric", "det_trivial", "det_symmetric"});
    auto flag = [&](const char* key, bool& out) {
      if (const json* x = field(*f, key)) out = boolean(*x, fp + "/" + key);
    };
    flag("mu_stable", F.flags.mu_stable);
    flag("torsion_free", F.flags.torsion_free);
    flag("locally_free", F.flags.locally_free);
    flag("symmetric", F.flags.symmetric);
    flag("det_trivial", F.flags.det_trivial);
    flag("det_symmetric", F.flags.det_symmetric);
  }
  try {
    F.validate(s);
  } catch (const Error& e) {
    bad(p, e.what());
  }
  return F;
}

PolFamily default_polarisation(const SurfaceDesc& s, stability::Target t) {
  switch (t) {
    case stability::Target::Kummer: return PolFamily::HNKm;
    case stability::Target::GenKummer: return PolFamily::HNK;
    case stability::Target::Hilb: return s.is_abelian() ? PolFamily::HNm : PolFamily::HN;
  }
  return PolFamily::HN;
}

}  // namespace

JobConfig parse_job_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigInvalid, std::string("at /: not valid JSON: ") + e.what());
  }
  object_at(j, "", {"schema", "surface", "sheaf", "n", "target", "polarisation", "options"});
  std::string schema = string_at(required(j, "", "schema"), "/schema");
  if (schema != kJobSchema) bad("/schema", "expected \"" + std::string(kJobSchema) + "\", got \"" + schema + "\"");

  JobConfig c;
  c.surface = parse_surface(required(j, "", "surface"));
  c.sheaf = parse_sheaf(required(j, "", "sheaf"), c.surface);
  std::int64_t n = integer(required(j, "", "n"), "/n");
  if (n < 2 || n > 5) bad("/n", "n must be in [2,5]");
  c.n = static_cast<int>(n);
  if (const json* t = field(j, "target")) {
    try {
      c.target = stability::target_from_string(string_at(*t, "/target"));
    } catch (const Error&) {
      bad("/target", "expected hilb, kummer or gen-kummer");
    }
  }
  c.polarisation = default_polarisation(c.surface, c.target);
  if (const json* pol = field(j, "polarisation")) {
    try {
      c.polarisation = lattice::pol_family_from_string(string_at(*pol, "/polarisation"));
    } catch (const Error&) {
      bad("/polarisation", "expected H_N, H_N^m, H_N^Km or H_N^K");
    }
  }
  if (const json* o = field(j, "options")) {
    object_at(*o, "/options", {"search_bound", "coh_FL", "coh_L"});
    if (const json* b = field(*o, "search_bound")) {
      c.search_bound = integer(*b, "/options/search_bound");
      if (c.search_bound < 1 || c.search_bound > 1000) bad("/options/search_bound", "bound must be in [1,1000]");
    }
    if (const json* d = field(*o, "coh_FL")) c.coh_FL = dims(*d, "/options/coh_FL", 3);
    if (const json* d = field(*o, "coh_L")) c.coh_L = dims(*d, "/options/coh_L", 3);
  }
  c.echo = j;
  return c;
}

}  // namespace hilbtaut::front
