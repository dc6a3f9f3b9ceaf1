#include "hilbtaut/deform/deform.hpp"

#include "hilbtaut/error.hpp"
#include "hilbtaut/lattice/ns.hpp"

namespace hilbtaut::deform {

namespace {

void need_data(const SheafDesc& F) {
  if (!F.coh) throw Error(ErrorCode::MissingData, "sheaf.coh (h0,h1,h2) is required");
  if (!F.ext_self) throw Error(ErrorCode::MissingData, "sheaf.ext_self (ext0,ext1,ext2) is required");
}

}  // namespace

DeformSplit deformation_split(const SheafDesc& F) {
  need_data(F);
  if (F.coh->at(2) != 0)
    throw Error(ErrorCode::H2Nonzero, "the split needs h2(F) = 0, got " + std::to_string(F.coh->at(2)));
  DeformSplit d;
  d.surface_dim = F.ext_self->at(1);
  d.additional_dim = F.coh->at(0) * F.coh->at(1);
  d.total = d.surface_dim + d.additional_dim;
  return d;
}

QuadraticTargets kuranishi_quadratic_targets(const SheafDesc& F) {
  need_data(F);
  return {F.coh->at(0) * F.coh->at(0), F.coh->at(1) * F.coh->at(1)};
}

SingularityReport singularity_report(long k) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "C is a base component of |C + kE| only for k >= 2, got k = " + std::to_string(k));
  auto s = lattice::SurfaceDesc::elliptic_k3();
  SheafDesc F = taut::base_point_ideal(s, k);
  DeformSplit d = deformation_split(F);
  SingularityReport r;
  r.k = k;
  r.h0 = F.coh->at(0);
  r.h1 = F.coh->at(1);
  r.ext1 = d.surface_dim;
  r.tangent = d.total;
  r.tangent_from_ext = taut::taut_self_ext_k3(F, 2).at(1);
  r.targets = kuranishi_quadratic_targets(F);
  return r;
}

std::string to_string(Deforms d) { return d == Deforms::No ? "NO" : "UNDECIDED"; }

Rat delta_square(int n) {
  if (n < 2) throw Error(ErrorCode::IndexError, "delta_n needs n >= 2");
  return Rat(2 * (1 - n));
}

Rat obstruction_trace(const ObstructionInput& in) {
  return in.kappa_dot_c1 - Rat(in.r) * in.a * delta_square(in.n);
}

Deforms deforms_along(const ObstructionInput& in) {
  return obstruction_trace(in).is_zero() ? Deforms::Undecided : Deforms::No;
}

}  // namespace hilbtaut::deform
