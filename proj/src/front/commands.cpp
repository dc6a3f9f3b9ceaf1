#include "hilbtaut/front/commands.hpp"

#include "hilbtaut/deform/deform.hpp"
#include "hilbtaut/error.hpp"
#include "hilbtaut/oracle/expr.hpp"

namespace hilbtaut::front {

using exact::GradedDims;
using exact::Rat;
using lattice::SurfaceDesc;
using stability::Target;

namespace {

constexpr Provenance kFormula = Provenance::Formula;

std::string vec_str(const lattice::NSVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

std::string hilb_str(const lattice::HilbClass& c) {
  std::string out = "h = " + vec_str(c.h);
  if (c.m) out += ", m = " + c.m->str();
  return out + ", d = " + c.d.str();
}

std::string kummer_str(const lattice::KummerClass& c) {
  bool uniform = true;
  for (const auto& x : c.nodal) uniform = uniform && x == c.nodal[0];
  std::string out = "alpha = " + vec_str(c.alpha);
  if (uniform) return out + ", N_l = " + c.nodal[0].str() + " for all l";
  out += ", N = (";
  for (std::size_t i = 0; i < c.nodal.size(); ++i) out += (i ? ", " : "") + c.nodal[i].str();
  return out + ")";
}

Report start(const std::string& command, const JobConfig& c) {
  Report r;
  r.command = command;
  r.echo = c.echo;
  return r;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Report cmd_slope(const JobConfig& c) {
  Report r = start("slope", c);
  const auto& s = c.surface;
  const auto& F = c.sheaf;
  r.rows.push_back(plain_row("mu_H(F)", (s.dot_H(F.c1) / Rat(F.rank)).str(), kFormula));
  switch (c.target) {
    case Target::Hilb: {
      auto T = taut::tautologize(s, F, c.n);
      r.rows.push_back(plain_row("rank F^[n]", std::to_string(T.rank), kFormula));
      r.rows.push_back(plain_row("c1(F^[n])", hilb_str(T.c1), kFormula));
      r.rows.push_back(
          plain_row("mu(F^[n]) against " + lattice::to_string(c.polarisation), lattice::slope(T.rank, s, T.c1, c.polarisation).str(), kFormula));
      break;
    }
    case Target::Kummer: {
      auto K = taut::kummer_restrict(s, F);
      r.rows.push_back(plain_row("rank F^Km", std::to_string(K.rank), kFormula));
      r.rows.push_back(plain_row("c1(F^Km)", kummer_str(K.c1), kFormula));
      r.rows.push_back(
          plain_row("mu(F^Km) against " + lattice::to_string(c.polarisation), lattice::slope(K.rank, s, K.c1, c.polarisation).str(), kFormula));
      break;
    }
    case Target::GenKummer: {
      stability::setting_for(s, c.n, c.target);
      long rank = 3 * F.rank;
      lattice::GenKummerClass g{F.c1, Rat(-F.rank)};
      r.rows.push_back(plain_row("rank F^[[3]]", std::to_string(rank), kFormula));
      r.rows.push_back(plain_row("c1(F^[[3]])", "h = " + vec_str(g.h) + ", d = " + g.d.str(), kFormula));
      r.rows.push_back(
          plain_row("mu(F^[[3]]) against " + lattice::to_string(c.polarisation), lattice::slope(rank, s, g, c.polarisation).str(), kFormula));
      break;
    }
  }
  return r;
}

Report cmd_stability(const JobConfig& c, std::optional<std::int64_t> bound, unsigned workers) {
  Report r = start("stability", c);
  std::int64_t b = bound.value_or(c.search_bound);
  if (b < 1 || b > 1000) throw Error(ErrorCode::ConfigInvalid, "search bound must lie in 1..1000");
  auto v = stability::stability_verdict(c.sheaf, c.surface, c.n, c.target);
  r.rows.push_back(plain_row("verdict", stability::to_string(v.outcome), kFormula));
  r.rows.push_back(plain_row("citation", v.citation.empty() ? "-" : v.citation, kFormula));
  for (const auto& h : v.trail) r.rows.push_back(plain_row("hypothesis: " + h.name, h.holds ? "holds" : "fails", kFormula));

  auto setting = stability::setting_for(c.surface, c.n, c.target);
  auto data = stability::sheaf_data(c.surface, c.sheaf, setting, c.n);
  auto res = stability::destabilizer_search(data, setting, b, stability::resolve_workers(workers));
  r.rows.push_back(plain_row("search setting", stability::to_string(setting), kFormula));
  r.rows.push_back(plain_row("search bound", std::to_string(b), kFormula));
  r.rows.push_back(plain_row("tuples checked", std::to_string(res.checked), kFormula));
  r.rows.push_back(plain_row("destabilising tuples", std::to_string(res.destabilising), kFormula));
  std::string n_surv = std::to_string(res.survivors.size());
  if (v.outcome == stability::Outcome::StableByTheorem)
    r.rows.push_back(checked_row("surviving destabilisers", "0", n_surv, kFormula, v.citation));
  else
    r.rows.push_back(plain_row("surviving destabilisers", n_surv, kFormula));

  json excluded = json::object();
  for (const auto& [label, count] : res.excluded) excluded[label] = count;
  json survivors = json::array();
  for (const auto& x : res.survivors) survivors.push_back({{"route", x.route}, {"params", x.params}});
  r.details["excluded"] = excluded;
  r.details["survivors"] = survivors;
  if (!v.inequalities.empty()) r.details["inequalities"] = v.inequalities;
  return r;
}

Report cmd_cohomology(const JobConfig& c) {
  Report r = start("cohomology", c);
  const auto& s = c.surface;
  const auto& F = c.sheaf;
  F.validate(s);
  auto T = taut::tautologize(s, F, c.n);
  r.rows.push_back(plain_row("rank F^[n]", std::to_string(T.rank), kFormula));
  r.rows.push_back(plain_row("c1(F^[n])", hilb_str(T.c1), kFormula));
  if (F.flags.locally_free) {
    auto D = taut::dualize(s, T);
    r.rows.push_back(plain_row("c1((F^[n])^vee)", hilb_str(D.c1), kFormula));
    r.rows.push_back(plain_row("(F^[n])^vee twist by delta", std::to_string(D.twist), kFormula));
    r.rows.push_back(plain_row("dual convention tension", yes_no(D.convention_tension), kFormula));
  } else {
    r.rows.push_back(plain_row("(F^[n])^vee", "not computed: F not locally free", kFormula));
  }

  std::optional<GradedDims> cohFL = c.coh_FL ? c.coh_FL : F.coh;
  std::optional<GradedDims> cohL = c.coh_L;
  if (!cohL) {
    if (s.is_k3_like()) cohL = GradedDims{1, 0, 1};
    else if (s.is_abelian()) cohL = GradedDims{1, 2, 1};
  }
  if (cohFL && cohL) {
    auto d = taut::taut_cohomology_dims(*cohFL, *cohL, c.n);
    r.rows.push_back(plain_row("H^*(F^[n] (x) L_n)", d.str(), kFormula));
    r.rows.push_back(plain_row("chi(F^[n] (x) L_n)", std::to_string(d.euler()), kFormula));
  } else {
    r.rows.push_back(plain_row("H^*(F^[n] (x) L_n)", "not computed: missing H^*(F (x) L) or H^*(L)", kFormula));
  }

  if (s.is_k3_like() && F.coh && F.ext_self) {
    auto e = taut::taut_self_ext_k3(F, c.n);
    r.rows.push_back(plain_row("Ext^*(F^[n], F^[n])", e.str(), kFormula));
  }
  if (s.is_k3_like() && F.coh) {
    auto v = taut::mukai_vector(Rat(F.rank), F.c1, Rat(F.coh->euler()));
    auto e1 = taut::ext1_dim(s, v);
    r.rows.push_back(plain_row("v(F)", "(" + v.r.str() + ", " + vec_str(F.c1) + ", " + v.s.str() + ")", kFormula));
    r.rows.push_back(plain_row("v(F)^2", taut::mukai_square(s, v).str(), kFormula));
    std::string dim = e1.value.str();
    for (const auto& w : e1.warnings) dim += " [" + w + "]";
    r.rows.push_back(plain_row("dim of moduli at F", dim, kFormula));
  }
  if (s.is_abelian() && c.target == Target::Kummer) {
    auto K = taut::kummer_restrict(s, F);
    r.rows.push_back(plain_row("rank F^Km", std::to_string(K.rank), kFormula));
    r.rows.push_back(plain_row("c1(F^Km)", kummer_str(K.c1), kFormula));
    if (F.coh) {
      // Km A is a K3; chi(F^Km) = chi(F) + chi(F (x) O(-x)) on the double cover, both equal to chi(F).
      auto v = taut::mukai_vector(Rat(K.rank), K.c1, Rat(F.coh->euler()));
      r.rows.push_back(plain_row("v(F^Km)^2", taut::mukai_square(s, v).str(), kFormula));
    }
  }
  return r;
}

Report cmd_deform(std::optional<long> k, const JobConfig* c) {
  if (!k && !c) throw Error(ErrorCode::ConfigInvalid, "deform needs --k or --config");
  Report r;
  r.command = "deform";
  if (c) r.echo = c->echo;
  if (k) {
    auto rep = deform::singularity_report(*k);
    std::string ks = std::to_string(*k);
    r.rows.push_back(plain_row("F = L (x) I_p, L = C + " + ks + "E: h^0(F)", std::to_string(rep.h0), kFormula));
    r.rows.push_back(plain_row("h^1(F)", std::to_string(rep.h1), kFormula));
    r.rows.push_back(plain_row("ext^1(F, F)", std::to_string(rep.ext1), kFormula));
    r.rows.push_back(checked_row("tangent dimension of M at F^[2]", std::to_string(*k + 3), std::to_string(rep.tangent),
                                 kFormula, "base-point ideal on the elliptic K3, k + 3"));
    r.rows.push_back(checked_row("Ext^1 from the two-summand formula", std::to_string(rep.tangent),
                                 std::to_string(rep.tangent_from_ext), kFormula, "extension groups"));
    r.rows.push_back(plain_row("quadratic targets H^0 (x) H^0", std::to_string(rep.targets.h0_part), kFormula));
    r.rows.push_back(plain_row("quadratic targets H^1 (x) H^1", std::to_string(rep.targets.h1_part), kFormula));
    r.rows.push_back(plain_row("pairing Ext^1 x H^0 -> H^1", rep.pairing_assumed_nonzero ? "assumed nonzero" : "zero", kFormula));
  }
  if (c) {
    auto d = deform::deformation_split(c->sheaf);
    r.rows.push_back(plain_row("deformations of F", std::to_string(d.surface_dim), kFormula));
    r.rows.push_back(plain_row("additional deformations of F^[n]", std::to_string(d.additional_dim), kFormula));
    r.rows.push_back(plain_row("Ext^1(F^[n], F^[n])", std::to_string(d.total), kFormula));
  }
  return r;
}

Report cmd_eval(const std::string& ring, const std::string& expr) {
  Report r;
  r.command = "eval";
  r.echo = json{{"ring", ring}, {"expr", expr}};
  auto node = oracle::parse_class_expr(expr);
  auto res = oracle::eval_class_expr(node, oracle::parse_ring(ring));
  r.rows.push_back(plain_row("parsed", oracle::print_class_expr(node), Provenance::Oracle));
  r.rows.push_back(plain_row("value", res.is_number ? res.value.str() : res.element.str(), Provenance::Oracle));
  if (res.warn_not_top) r.details["warnings"] = json::array({"NOT_TOP_DEGREE"});
  return r;
}

}  // namespace hilbtaut::front
