#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbtaut/exact/npoly.hpp"
#include "hilbtaut/lattice/ns.hpp"
#include "hilbtaut/taut/sheaf.hpp"

namespace hilbtaut::stability {

using exact::NPoly;
using exact::Rat;
using lattice::SurfaceDesc;
using taut::SheafDesc;

enum class Setting { RegularHilb, AbelianHilb2, AbelianHilb3, Kummer, GenKummer4 };

std::string to_string(Setting s);
Setting setting_from_string(const std::string& s);
// Number of integer parameters a candidate carries.
std::size_t param_count(Setting s);

// regular: (l.H, a)             abelian n=2: (a1, a2, b, c)     abelian n=3: (a, b)
// kummer:  (g.H, a_1..a_16)     gen-kummer:  (l)
struct CandidateLine {
  Setting setting = Setting::RegularHilb;
  std::vector<std::int64_t> params;
  // "dual" for the rank-two route through (F^[n])^vee
  std::string route = "direct";

  friend bool operator==(const CandidateLine&, const CandidateLine&) = default;
  friend auto operator<=>(const CandidateLine& a, const CandidateLine& b) {
    if (auto c = a.route <=> b.route; c != 0) return c;
    return a.params <=> b.params;
  }
};

// The data the predicates need from F and the surface: r, f (an integer: f.H on regular
// surfaces, the H-coefficient of c1 on abelian ones), n for the regular setting, and flags.
struct SheafData {
  std::int64_t r = 1;
  std::int64_t f = 0;
  int n = 2;
  bool stable = true;
  bool det_trivial = false;
  bool symmetric = false;
};

SheafData sheaf_data(const SurfaceDesc& s, const SheafDesc& F, Setting setting, int n);

// The tautological destabilising condition, exact. SHAPE_MISMATCH on a wrong parameter count.
bool destab_condition(Setting setting, const CandidateLine& cand, const SheafData& F);

struct SlopeDerivation {
  NPoly mu_candidate;
  NPoly mu_tautological;
  exact::Cmp comparison = exact::Cmp::Indeterminate;
  // leading coefficient of mu_candidate >= leading coefficient of mu_tautological
  bool holds = false;
  std::string inequality;
};

// Leading-order slope comparison through the lattice engine.
SlopeDerivation slope_implies_condition(const SurfaceDesc& s, Setting setting, const CandidateLine& cand,
                                        const SheafData& F);

// Empty string: the candidate survives every case of the matching proposition.
std::string exclusion_case(Setting setting, const CandidateLine& cand, const SheafData& F);

struct SearchResult {
  std::vector<CandidateLine> survivors;
  // destabilising tuples killed, per case label
  std::map<std::string, std::uint64_t> excluded;
  std::uint64_t destabilising = 0;
  std::uint64_t checked = 0;
};

// Worker count: explicit value if > 0, else HILBTAUT_WORKERS, else hardware concurrency.
unsigned resolve_workers(unsigned requested);

// All tuples with |param| <= bound that satisfy the destabilising condition and are not
// excluded. Kummer candidates carry zero nodal parts. Regular r = 1, n = 3 adds the dual route.
SearchResult destabilizer_search(const SheafData& F, Setting setting, std::int64_t bound, unsigned workers = 0);

enum class Outcome { StableByTheorem, ExcludedCase, HypothesisFails, Unknown };
std::string to_string(Outcome o);

enum class Target { Hilb, Kummer, GenKummer };
std::string to_string(Target t);
Target target_from_string(const std::string& s);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string citation;
  std::vector<Hypothesis> trail;
  std::vector<std::string> inequalities;
};

Verdict stability_verdict(const SheafDesc& F, const SurfaceDesc& s, int n, Target target);

// Setting in which the line-subbundle search for (surface, n, target) runs.
Setting setting_for(const SurfaceDesc& s, int n, Target target);

}  // namespace hilbtaut::stability
