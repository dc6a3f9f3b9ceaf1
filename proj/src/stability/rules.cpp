#include "hilbtaut/stability/rules.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <thread>

#include "hilbtaut/error.hpp"

namespace hilbtaut::stability {

using lattice::GenKummerClass;
using lattice::HilbClass;
using lattice::KummerClass;
using lattice::NSVec;
using lattice::PolFamily;

namespace {

constexpr int kSurvives = -1;

const std::array<const char*, 20> kCases = {
    "delta-reduction: a != 0",
    "sections: l.H > 0",
    "stability of F: l.H >= f.H/r",
    "l.H < f.H/r and l.H <= 0 contradict the condition",
    "L = F: Hom(L,O) = 0 unless L = O",
    "c-reduction: c != 0",
    "S2-invariance: a1 != a2",
    "a) a2+b > 0",
    "a) a2+b = 0, b != 0",
    "a) a2 = b = 0: Hom(M1,F) = 0 unless F = M1, M2 = O",
    "b) a2 < 0: a1+b > f/r",
    "c) b < 0: a1+a2 > f/r",
    "a) 2a+b >= 0, (a,b) != (0,0)",
    "a) a = b = 0: Hom(O,F) = 0 unless F = O",
    "b) a < 0: contradicts the A x A proposition",
    "c) b < 0: contradicts the A x A proposition",
    "Hom(G,F) = 0 for G != F",
    "G symmetric, F not",
    "l >= 0: vanishes unless M = O = F",
    "l < 0: 2l > f/r contradicts the A x A proposition",
};

bool is_F_trivial(const SheafData& F) { return F.r == 1 && F.f == 0 && F.det_trivial; }

bool condition(Setting setting, const std::int64_t* p, const SheafData& F) {
  switch (setting) {
    case Setting::RegularHilb: return F.n * F.r * p[0] >= F.f;
    case Setting::AbelianHilb2: return F.r * (p[0] + p[1] + p[2]) >= F.f;
    case Setting::AbelianHilb3: return F.r * (3 * p[0] + p[1]) >= F.f;
    case Setting::Kummer: return F.r * p[0] >= F.f;
    case Setting::GenKummer4: return 3 * F.r * p[0] >= F.f;
  }
  return false;
}

int exclusion(Setting setting, const std::int64_t* p, const SheafData& F) {
  switch (setting) {
    case Setting::RegularHilb: {
      const std::int64_t lH = p[0];
      if (p[1] != 0) return 0;
      if (lH > 0) return 1;
      if (!F.stable) return kSurvives;
      const bool is_F = F.r == 1 && lH == F.f;
      if (F.r * lH >= F.f && !is_F) return 2;
      if (F.r * lH < F.f) return 3;
      return F.det_trivial && F.f == 0 ? kSurvives : 4;
    }
    case Setting::AbelianHilb2: {
      const std::int64_t a1 = p[0], a2 = p[1], b = p[2], c = p[3];
      if (c != 0) return 5;
      if (a1 != a2) return 6;
      if (a2 + b > 0) return 7;
      if (a2 + b == 0 && b != 0) return 8;
      if (a2 + b == 0) {
        if (!F.stable) return kSurvives;
        return is_F_trivial(F) ? kSurvives : 9;
      }
      if (!F.stable) return kSurvives;
      return a2 < 0 ? 10 : 11;
    }
    case Setting::AbelianHilb3: {
      const std::int64_t a = p[0], b = p[1];
      if (2 * a + b >= 0) {
        if (a != 0 || b != 0) return 12;
        if (!F.stable) return kSurvives;
        return is_F_trivial(F) ? kSurvives : 13;
      }
      if (!F.stable) return kSurvives;
      return a < 0 ? 14 : 15;
    }
    case Setting::Kummer: {
      if (!F.stable) return kSurvives;
      if (F.r != 1 || p[0] != F.f) return 16;
      return F.symmetric ? kSurvives : 17;
    }
    case Setting::GenKummer4: {
      if (p[0] > 0) return 18;
      if (p[0] == 0) return is_F_trivial(F) && F.stable ? kSurvives : 18;
      return F.stable ? 19 : kSurvives;
    }
  }
  return kSurvives;
}

void check_shape(Setting setting, const CandidateLine& cand) {
  if (cand.setting != setting || cand.params.size() != param_count(setting))
    throw Error(ErrorCode::ShapeMismatch, "candidate for " + to_string(cand.setting) + " with " +
                                              std::to_string(cand.params.size()) + " parameters used in " +
                                              to_string(setting) + " (expects " +
                                              std::to_string(param_count(setting)) + ")");
}

std::int64_t integral(const Rat& x, const char* what) {
  if (!x.is_integer()) throw Error(ErrorCode::ConfigInvalid, std::string(what) + " must be an integer, got " + x.str());
  return x.to_int64();
}

NSVec along_H(const SurfaceDesc& s, const Rat& dot) {
  Rat t = dot / s.pair(s.H, s.H);
  NSVec v;
  for (const auto& x : s.H) v.push_back(x * t);
  return v;
}

struct Partial {
  std::vector<CandidateLine> survivors;
  std::array<std::uint64_t, kCases.size()> excluded{};
  std::uint64_t destabilising = 0;
  std::uint64_t checked = 0;
};

// Free (enumerated) coordinates per setting; Kummer nodal entries stay zero.
std::size_t free_count(Setting s) { return s == Setting::Kummer ? 1 : param_count(s); }

void run_slice(Setting setting, const SheafData& F, std::int64_t bound, std::int64_t first, Partial& out,
               const std::string& route) {
  const std::size_t free = free_count(setting);
  std::vector<std::int64_t> p(param_count(setting), 0);
  p[0] = first;
  auto visit = [&]() {
    ++out.checked;
    if (!condition(setting, p.data(), F)) return;
    ++out.destabilising;
    int e = exclusion(setting, p.data(), F);
    if (e == kSurvives) {
      out.survivors.push_back(CandidateLine{setting, p, route});
    } else {
      ++out.excluded[e];
    }
  };
  if (free == 1) {
    visit();
    return;
  }
  // odometer over coordinates 1..free-1
  for (std::size_t i = 1; i < free; ++i) p[i] = -bound;
  while (true) {
    visit();
    std::size_t i = free - 1;
    while (i >= 1 && p[i] == bound) p[i--] = -bound;
    if (i == 0) break;
    ++p[i];
  }
}

void search_into(SearchResult& res, const SheafData& F, Setting setting, std::int64_t bound, unsigned workers,
                 const std::string& route) {
  const std::int64_t width = 2 * bound + 1;
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, width));
  std::vector<Partial> parts(workers);
  auto job = [&](unsigned w) {
    for (std::int64_t i = w; i < width; i += workers) run_slice(setting, F, bound, i - bound, parts[w], route);
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& t : pool) t.join();
  }
  const std::string prefix = route == "direct" ? "" : route + ": ";
  for (const auto& part : parts) {
    res.survivors.insert(res.survivors.end(), part.survivors.begin(), part.survivors.end());
    for (std::size_t k = 0; k < kCases.size(); ++k)
      if (part.excluded[k]) res.excluded[prefix + kCases[k]] += part.excluded[k];
    res.destabilising += part.destabilising;
    res.checked += part.checked;
  }
}

}  // namespace

std::string to_string(Setting s) {
  switch (s) {
    case Setting::RegularHilb: return "regular-hilb";
    case Setting::AbelianHilb2: return "abelian-hilb-2";
    case Setting::AbelianHilb3: return "abelian-hilb-3";
    case Setting::Kummer: return "kummer";
    case Setting::GenKummer4: return "gen-kummer-4";
  }
  return "regular-hilb";
}

Setting setting_from_string(const std::string& s) {
  for (Setting x : {Setting::RegularHilb, Setting::AbelianHilb2, Setting::AbelianHilb3, Setting::Kummer,
                    Setting::GenKummer4})
    if (to_string(x) == s) return x;
  throw Error(ErrorCode::ConfigInvalid, "unknown setting '" + s + "'");
}

std::size_t param_count(Setting s) {
  switch (s) {
    case Setting::RegularHilb: return 2;
    case Setting::AbelianHilb2: return 4;
    case Setting::AbelianHilb3: return 2;
    case Setting::Kummer: return 17;
    case Setting::GenKummer4: return 1;
  }
  return 0;
}

SheafData sheaf_data(const SurfaceDesc& s, const SheafDesc& F, Setting setting, int n) {
  F.validate(s);
  const bool abelian_setting = setting != Setting::RegularHilb;
  if (abelian_setting != s.is_abelian())
    throw Error(ErrorCode::VarietyMismatch, to_string(setting) + " on a " + lattice::to_string(s.kind) + " surface");
  SheafData d;
  d.r = F.rank;
  d.n = n;
  d.stable = F.flags.mu_stable || (F.rank == 1 && F.flags.torsion_free);
  d.det_trivial = F.flags.det_trivial;
  d.symmetric = F.flags.symmetric;
  if (setting == Setting::RegularHilb || setting == Setting::Kummer) {
    d.f = integral(s.dot_H(F.c1), "f.H");
  } else {
    d.f = integral(F.c1.at(0), "c1 coefficient of H");
  }
  return d;
}

bool destab_condition(Setting setting, const CandidateLine& cand, const SheafData& F) {
  check_shape(setting, cand);
  return condition(setting, cand.params.data(), F);
}

std::string exclusion_case(Setting setting, const CandidateLine& cand, const SheafData& F) {
  check_shape(setting, cand);
  int e = exclusion(setting, cand.params.data(), F);
  return e == kSurvives ? "" : kCases[e];
}

SlopeDerivation slope_implies_condition(const SurfaceDesc& s, Setting setting, const CandidateLine& cand,
                                        const SheafData& F) {
  check_shape(setting, cand);
  const auto& p = cand.params;
  const Rat r(F.r), f(F.f);
  SlopeDerivation d;
  int top = 0;
  switch (setting) {
    case Setting::RegularHilb: {
      top = 2 * F.n - 1;
      d.mu_candidate = lattice::slope(1, s, HilbClass{F.n, along_H(s, Rat(p[0])), std::nullopt, Rat(p[1])},
                                      PolFamily::HN);
      d.mu_tautological =
          lattice::slope(F.n * F.r, s, HilbClass{F.n, along_H(s, f), std::nullopt, -r}, PolFamily::HN);
      break;
    }
    case Setting::AbelianHilb2: {
      top = 3;
      d.mu_candidate = lattice::blowup_degree(s, Rat(p[0]), Rat(p[1]), Rat(p[2]), Rat(p[3]));
      d.mu_tautological = lattice::blowup_degree(s, f, f, Rat(0), -r).divided(Rat(2) * r);
      break;
    }
    case Setting::AbelianHilb3: {
      top = 5;
      d.mu_candidate =
          lattice::degree_against_polarization(s, HilbClass{3, {Rat(p[0])}, Rat(p[1]), Rat(0)}, PolFamily::HNm);
      d.mu_tautological = lattice::slope(3 * F.r, s, HilbClass{3, {f}, Rat(0), -r}, PolFamily::HNm);
      break;
    }
    case Setting::Kummer: {
      top = 1;
      std::array<Rat, 16> a{};
      for (int l = 0; l < 16; ++l) a[l] = Rat(p[1 + l]);
      d.mu_candidate = lattice::slope(1, s, KummerClass::from_cover_pullback(along_H(s, Rat(p[0])), a),
                                      PolFamily::HNKm);
      KummerClass taut{along_H(s, f), {}};
      taut.nodal.fill(Rat(-F.r, 2));
      d.mu_tautological = lattice::slope(2 * F.r, s, taut, PolFamily::HNKm);
      break;
    }
    case Setting::GenKummer4: {
      top = 3;
      d.mu_candidate = lattice::slope(1, s, GenKummerClass{{Rat(p[0])}, Rat(0)}, PolFamily::HNK);
      d.mu_tautological = lattice::slope(3 * F.r, s, GenKummerClass{{f}, -r}, PolFamily::HNK);
      break;
    }
  }
  d.comparison = exact::compare_leading(d.mu_candidate, d.mu_tautological);
  auto lc = d.mu_candidate.coeff(top), lt = d.mu_tautological.coeff(top);
  if (!lc || !lt) throw Error(ErrorCode::Internal, "leading slope coefficient unknown");
  d.holds = *lc >= *lt;
  d.inequality = "N^" + std::to_string(top) + ": " + lc->str() + (d.holds ? " >= " : " < ") + lt->str();
  return d;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HILBTAUT_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
    throw Error(ErrorCode::ConfigInvalid, std::string("HILBTAUT_WORKERS must be a positive integer, got '") + env + "'");
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

SearchResult destabilizer_search(const SheafData& F, Setting setting, std::int64_t bound, unsigned workers) {
  if (bound < 1) throw Error(ErrorCode::ConfigInvalid, "search bound must be >= 1");
  if (bound > 1000) throw Error(ErrorCode::ConfigInvalid, "search bound above 1000 is not supported");
  if (F.r <= 0) throw Error(ErrorCode::ZeroRank, "sheaf rank must be positive");
  workers = resolve_workers(workers);
  SearchResult res;
  search_into(res, F, setting, bound, workers, "direct");
  if (setting == Setting::RegularHilb && F.n == 3 && F.r == 1) {
    // rank-two subsheaves give rank-one subsheaves of the dual, (F^vee)^[3] (x) O(delta)
    SheafData dual = F;
    dual.f = -F.f;
    search_into(res, dual, setting, bound, workers, "dual");
  }
  std::sort(res.survivors.begin(), res.survivors.end());
  return res;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::StableByTheorem: return "STABLE_BY_THEOREM";
    case Outcome::ExcludedCase: return "EXCLUDED_CASE";
    case Outcome::HypothesisFails: return "HYPOTHESIS_FAILS";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(Target t) {
  switch (t) {
    case Target::Hilb: return "hilb";
    case Target::Kummer: return "kummer";
    case Target::GenKummer: return "gen-kummer";
  }
  return "hilb";
}

Target target_from_string(const std::string& s) {
  if (s == "hilb") return Target::Hilb;
  if (s == "kummer") return Target::Kummer;
  if (s == "gen-kummer") return Target::GenKummer;
  throw Error(ErrorCode::ConfigInvalid, "unknown target '" + s + "'");
}

Setting setting_for(const SurfaceDesc& s, int n, Target target) {
  switch (target) {
    case Target::Hilb:
      if (!s.is_abelian()) return Setting::RegularHilb;
      if (n == 2) return Setting::AbelianHilb2;
      if (n == 3) return Setting::AbelianHilb3;
      throw Error(ErrorCode::Unsupported, "abelian Hilbert schemes are modelled for n in {2,3}");
    case Target::Kummer:
      if (!s.is_abelian()) throw Error(ErrorCode::VarietyMismatch, "Kummer target needs an abelian surface");
      if (n != 2) throw Error(ErrorCode::VarietyMismatch, "the Kummer surface sits in A^[2]; n must be 2");
      return Setting::Kummer;
    case Target::GenKummer:
      if (!s.is_abelian()) throw Error(ErrorCode::VarietyMismatch, "generalised Kummer target needs an abelian surface");
      if (n != 3) throw Error(ErrorCode::VarietyMismatch, "K_2(A) sits in A^[3]; n must be 3");
      return Setting::GenKummer4;
  }
  return Setting::RegularHilb;
}

namespace {

struct Theorem {
  bool abelian;
  Target target;
  int n;
  long rank;
  const char* citation;
  // the determinant/symmetry hypothesis; its failure is the proposition's exception when `exception` is set
  const char* last_hypothesis;
  const char* exception;
};

const Theorem kTheorems[] = {
    {false, Target::Hilb, 2, 1, "regular surface, rank 1, n = 2: F^[2] is mu_{H_N}-stable", "det F nontrivial",
     "exception L = F = O_X of the regular line-subbundle proposition"},
    {false, Target::Hilb, 2, 2, "regular surface, rank 2, n = 2: F^[2] is mu_{H_N}-stable", "det F nontrivial", nullptr},
    {false, Target::Hilb, 3, 1, "regular surface, rank 1, n = 3: F^[3] is mu_{H_N}-stable", "det F nontrivial",
     "exception L = F = O_X of the regular line-subbundle proposition"},
    {true, Target::Hilb, 2, 1, "generic abelian surface, rank 1, n = 2: F^[2] is mu_{H_N^m}-stable", "det F nontrivial",
     "exception F = M1, M2 = O_A, b = c = 0 of the line-subbundle proposition on A x A"},
    {true, Target::Hilb, 2, 2, "generic abelian surface, rank 2, n = 2: F^[2] is mu_{H_N^m}-stable", "det F nontrivial",
     nullptr},
    {true, Target::Hilb, 3, 1, "generic abelian surface, rank 1, n = 3: F^[3] is mu_{H_N^m}-stable", "det F nontrivial",
     "exception a = b = 0, M = F = O_A of the line-subbundle proposition on A^3"},
    {true, Target::Kummer, 2, 1, "Kummer surface, rank 1: F^Km is mu_{H_N^Km}-stable", "F non-symmetric", nullptr},
    {true, Target::Kummer, 2, 2, "Kummer surface, rank 2: F^Km is mu_{H_N^Km}-stable", "det F non-symmetric", nullptr},
    {true, Target::GenKummer, 3, 1, "generalised Kummer K_2(A), rank 1: j^*F^[3] is mu_N^K-stable", "det F nontrivial",
     "exception M = O_A = F of the generalised Kummer line-subbundle proposition"},
};

std::string condition_text(Setting setting, const SheafData& F) {
  std::string fr = Rat(F.f, F.r).str();
  switch (setting) {
    case Setting::RegularHilb: return "l.H >= f.H/(nr) = " + Rat(F.f, F.n * F.r).str();
    case Setting::AbelianHilb2: return "a1+a2+b >= f/r = " + fr;
    case Setting::AbelianHilb3: return "3a+b >= f/r = " + fr;
    case Setting::Kummer: return "H.g >= H.f/r = " + fr;
    case Setting::GenKummer4: return "l >= f/(3r) = " + Rat(F.f, 3 * F.r).str();
  }
  return "";
}

}  // namespace

Verdict stability_verdict(const SheafDesc& F, const SurfaceDesc& s, int n, Target target) {
  Verdict v;
  F.validate(s);
  const Theorem* thm = nullptr;
  for (const auto& t : kTheorems)
    if (t.abelian == s.is_abelian() && t.target == target && t.n == n && t.rank == F.rank) thm = &t;
  if (!thm) {
    v.outcome = Outcome::Unknown;
    v.trail.push_back({"a theorem covers (" + lattice::to_string(s.kind) + ", n = " + std::to_string(n) +
                           ", rank " + std::to_string(F.rank) + ", " + to_string(target) + ")",
                       false});
    return v;
  }
  v.citation = thm->citation;
  const Setting setting = setting_for(s, n, target);
  const SheafData d = sheaf_data(s, F, setting, n);

  v.trail.push_back({s.is_abelian() ? "abelian, NS(A x A) generic" : "surface regular", true});
  v.trail.push_back({"rank " + std::to_string(thm->rank), true});
  bool structural = true;
  if (thm->rank == 1) {
    v.trail.push_back({"F torsion-free", F.flags.torsion_free});
    structural = F.flags.torsion_free;
  } else {
    v.trail.push_back({"F mu_H-stable", F.flags.mu_stable});
    structural = F.flags.mu_stable;
  }
  bool last = true;
  const std::string lh = thm->last_hypothesis;
  if (lh == "det F nontrivial") last = !F.flags.det_trivial;
  if (lh == "F non-symmetric") last = !F.flags.symmetric;
  if (lh == "det F non-symmetric") last = !F.flags.det_symmetric;
  v.trail.push_back({lh, last});
  v.inequalities.push_back("destabilising condition: " + condition_text(setting, d));

  if (!structural) {
    v.outcome = Outcome::HypothesisFails;
    return v;
  }
  if (!last) {
    if (thm->exception) {
      v.outcome = Outcome::ExcludedCase;
      v.citation = thm->exception;
    } else {
      v.outcome = Outcome::HypothesisFails;
    }
    return v;
  }
  if (setting == Setting::RegularHilb && n == 3) {
    // rank one subsheaves directly, rank two through the dual
    auto res = destabilizer_search(d, setting, 20, 1);
    bool direct = std::none_of(res.survivors.begin(), res.survivors.end(),
                               [](const CandidateLine& c) { return c.route == "direct"; });
    bool dual = std::none_of(res.survivors.begin(), res.survivors.end(),
                             [](const CandidateLine& c) { return c.route == "dual"; });
    v.trail.push_back({"no rank 1 destabilising line subbundle (|params| <= 20)", direct});
    v.trail.push_back({"no rank 2 destabiliser: dual (F^vee)^[3] (x) O(delta) has none (|params| <= 20)", dual});
    v.inequalities.push_back("dual route: " + condition_text(setting, SheafData{d.r, -d.f, d.n, d.stable,
                                                                                 d.det_trivial, d.symmetric}));
  }
  bool all = std::all_of(v.trail.begin(), v.trail.end(), [](const Hypothesis& h) { return h.holds; });
  v.outcome = all ? Outcome::StableByTheorem : Outcome::HypothesisFails;
  return v;
}

}  // namespace hilbtaut::stability
