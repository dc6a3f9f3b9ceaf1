#include "hilbtaut/taut/sheaf.hpp"

#include "hilbtaut/error.hpp"

namespace hilbtaut::taut {

using exact::graded_sum;
using exact::graded_tensor;
using exact::super_sym_power;

namespace {

void invalid(const std::string& what) { throw Error(ErrorCode::ConfigInvalid, what); }

NSVec neg(const NSVec& v) {
  NSVec out;
  for (const auto& x : v) out.push_back(-x);
  return out;
}

bool is_elliptic(const SurfaceDesc& s) { return s.kind == lattice::SurfaceKind::EllipticK3; }

}  // namespace

bool SheafDesc::c1_zero() const {
  for (const auto& x : c1)
    if (!x.is_zero()) return false;
  return true;
}

void SheafDesc::validate(const SurfaceDesc& s) const {
  if (rank <= 0) throw Error(ErrorCode::ZeroRank, "sheaf rank must be positive, got " + std::to_string(rank));
  if (static_cast<int>(c1.size()) != s.rank())
    invalid("sheaf.c1 has " + std::to_string(c1.size()) + " coordinates, NS rank is " + std::to_string(s.rank()));
  if (flags.det_trivial && !c1_zero()) invalid("sheaf.flags.det_trivial set with nonzero c1");
  if (s.is_k3_like() && c1_zero() && !flags.det_trivial) invalid("sheaf.c1 is zero on a K3 but det_trivial is unset");
  if (flags.det_trivial && !flags.det_symmetric) invalid("sheaf.flags.det_trivial implies det_symmetric");
  if (flags.locally_free && !flags.torsion_free) invalid("sheaf.flags.locally_free implies torsion_free");
  if (coh && coh->size() != 3) invalid("sheaf.coh must have length 3");
  if (ext_self && ext_self->size() != 3) invalid("sheaf.ext_self must have length 3");
  if (coh && s.is_k3_like() && flags.mu_stable && coh->at(0) != 0 && coh->at(2) != 0)
    invalid("sheaf.coh: a mu-stable sheaf on a K3 has h0 = 0 or h2 = 0");
}

TautDesc tautologize(const SurfaceDesc& s, const SheafDesc& F, int n) {
  if (n < 2) throw Error(ErrorCode::Unsupported, "tautological sheaves need n >= 2");
  TautDesc t;
  t.n = n;
  t.rank = n * F.rank;
  t.c1 = HilbClass{n, F.c1, s.is_abelian() ? std::optional<Rat>(Rat(0)) : std::nullopt, Rat(-F.rank)};
  t.source = F;
  return t;
}

SheafDesc dual_sheaf(const SheafDesc& F) {
  SheafDesc d = F;
  d.c1 = neg(F.c1);
  d.coh.reset();
  d.ext_self = F.ext_self;
  return d;
}

TautDesc dualize(const SurfaceDesc& s, const TautDesc& T) {
  if (!T.source.flags.locally_free)
    throw Error(ErrorCode::NotLocallyFree, "dual formula needs a locally free source sheaf");
  TautDesc d = tautologize(s, dual_sheaf(T.source), T.n);
  d.twist = 1 - T.twist;
  d.c1.d += Rat(d.rank * d.twist);
  d.convention_tension = T.n >= 3;
  return d;
}

GradedDims taut_cohomology_dims(const GradedDims& cohFL, const GradedDims& cohL, int n) {
  if (n < 1) throw Error(ErrorCode::Unsupported, "n must be positive");
  return graded_tensor(cohFL, super_sym_power(cohL, n - 1));
}

GradedDims taut_ext_dims(const GradedDims& extEF, const GradedDims& extLM, const GradedDims& extEL_M,
                         const GradedDims& extL_FM, int n) {
  if (n < 2) throw Error(ErrorCode::Unsupported, "the extension formula needs n >= 2");
  GradedDims first = graded_tensor(extEF, super_sym_power(extLM, n - 1));
  GradedDims second = graded_tensor(graded_tensor(extEL_M, extL_FM), super_sym_power(extLM, n - 2));
  return graded_sum(first, second);
}

GradedDims serre_flip(const GradedDims& d) {
  if (d.size() != 3) throw Error(ErrorCode::ShapeMismatch, "serre_flip expects (h0,h1,h2), got " + d.str());
  return GradedDims{d.at(2), d.at(1), d.at(0)};
}

GradedDims taut_self_ext_k3(const SheafDesc& F, int n) {
  if (!F.coh || !F.ext_self) throw Error(ErrorCode::MissingData, "needs sheaf.coh and sheaf.ext_self");
  return taut_ext_dims(*F.ext_self, GradedDims{1, 0, 1}, serre_flip(*F.coh), *F.coh, n);
}

MukaiVector mukai_vector(const Rat& r, const LatticeVec& c1, const Rat& chi) { return {r, c1, chi - r}; }

Rat mukai_pair(const SurfaceDesc& s, const MukaiVector& v, const MukaiVector& w) {
  Rat ll;
  if (std::holds_alternative<NSVec>(v.c1) && std::holds_alternative<NSVec>(w.c1)) {
    ll = s.pair(std::get<NSVec>(v.c1), std::get<NSVec>(w.c1));
  } else if (std::holds_alternative<KummerClass>(v.c1) && std::holds_alternative<KummerClass>(w.c1)) {
    ll = lattice::kummer_pair(s, std::get<KummerClass>(v.c1), std::get<KummerClass>(w.c1));
  } else {
    throw Error(ErrorCode::VarietyMismatch, "Mukai vectors live on different lattices");
  }
  return ll - v.r * w.s - w.r * v.s;
}

Rat mukai_square(const SurfaceDesc& s, const MukaiVector& v) { return mukai_pair(s, v, v); }

Ext1Dim ext1_dim(const SurfaceDesc& s, const MukaiVector& v) {
  Ext1Dim out{mukai_square(s, v) + Rat(2), {}};
  if (out.value.sign() < 0) out.warnings.push_back("NOT_A_SHEAF_CLASS");
  return out;
}

KummerSheafDesc kummer_restrict(const SurfaceDesc& s, const SheafDesc& F) {
  if (!s.is_abelian()) throw Error(ErrorCode::VarietyMismatch, "Kummer restriction needs an abelian surface");
  KummerSheafDesc k;
  k.rank = 2 * F.rank;
  k.c1.alpha = F.c1;
  k.c1.nodal.fill(Rat(-F.rank, 2));
  k.source = F;
  return k;
}

Rat k3_line_bundle_chi(const SurfaceDesc& s, const NSVec& c1) {
  if (!s.is_k3_like()) throw Error(ErrorCode::VarietyMismatch, "K3 Riemann-Roch on a non-K3 surface");
  return Rat(2) + s.pair(c1, c1) / Rat(2);
}

SheafDesc elliptic_fibre_bundle(const SurfaceDesc& s, long k) {
  if (!is_elliptic(s)) throw Error(ErrorCode::VarietyMismatch, "needs the elliptic K3");
  if (k < 1) throw Error(ErrorCode::KTooSmall, "O(kE) needs k >= 1");
  SheafDesc F;
  F.c1 = {Rat(0), Rat(k)};
  F.coh = GradedDims{k + 1, k - 1, 0};
  F.ext_self = GradedDims{1, 0, 1};
  F.flags.locally_free = true;
  F.flags.mu_stable = true;
  F.flags.det_symmetric = true;
  return F;
}

SheafDesc base_point_ideal(const SurfaceDesc& s, long k) {
  if (!is_elliptic(s)) throw Error(ErrorCode::VarietyMismatch, "needs the elliptic K3");
  if (k < 2) throw Error(ErrorCode::KTooSmall, "C is a base component of |C + kE| only for k >= 2");
  SheafDesc F;
  F.c1 = {Rat(1), Rat(k)};
  F.coh = GradedDims{k + 1, 1, 0};
  F.ext_self = GradedDims{1, 2, 1};
  F.flags.mu_stable = true;
  return F;
}

}  // namespace hilbtaut::taut
