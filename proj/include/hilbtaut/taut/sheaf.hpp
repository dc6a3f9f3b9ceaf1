#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hilbtaut/exact/graded.hpp"
#include "hilbtaut/lattice/ns.hpp"

namespace hilbtaut::taut {

using exact::GradedDims;
using exact::Rat;
using lattice::HilbClass;
using lattice::KummerClass;
using lattice::NSVec;
using lattice::SurfaceDesc;

struct SheafFlags {
  bool mu_stable = false;
  bool torsion_free = true;
  bool locally_free = false;
  bool symmetric = false;
  bool det_trivial = false;
  // det F symmetric under x -> -x; needed separately from `symmetric` for rank >= 2.
  bool det_symmetric = false;
};

struct SheafDesc {
  long rank = 1;
  NSVec c1;
  std::optional<GradedDims> coh;       // h^0, h^1, h^2
  std::optional<GradedDims> ext_self;  // ext^0, ext^1, ext^2
  SheafFlags flags;

  // CONFIG_INVALID on a broken invariant. On K3-type surfaces c1 = 0 forces det_trivial;
  // on abelian surfaces Pic^0 allows c1 = 0 with nontrivial determinant.
  void validate(const SurfaceDesc& s) const;
  bool c1_zero() const;
};

// F^[n] (x) O(twist * delta_n).
struct TautDesc {
  int n = 2;
  long rank = 0;
  HilbClass c1;
  SheafDesc source;
  long twist = 0;
  bool convention_tension = false;
};

struct KummerSheafDesc {
  long rank = 0;
  KummerClass c1;
  SheafDesc source;
};

TautDesc tautologize(const SurfaceDesc& s, const SheafDesc& F, int n);
// (F^[n])^vee = (F^vee)^[n] (x) O(delta_n). NOT_LOCALLY_FREE unless the source is locally free.
TautDesc dualize(const SurfaceDesc& s, const TautDesc& T);
SheafDesc dual_sheaf(const SheafDesc& F);

// H^*(F^[n] (x) L_n) = H^*(F (x) L) (x) S^{n-1} H^*(L).
GradedDims taut_cohomology_dims(const GradedDims& cohFL, const GradedDims& cohL, int n);
// Ext^*(E^[n] (x) L_n, F^[n] (x) M_n) from the two-summand formula.
GradedDims taut_ext_dims(const GradedDims& extEF, const GradedDims& extLM, const GradedDims& extEL_M,
                         const GradedDims& extL_FM, int n);
// Ext^i(F, O) = H^{2-i}(F)^vee on a K3.
GradedDims serre_flip(const GradedDims& d);

// Ext^*(F^[n], F^[n]) for F on a K3 with coh and ext_self present.
GradedDims taut_self_ext_k3(const SheafDesc& F, int n);

using LatticeVec = std::variant<NSVec, KummerClass>;

struct MukaiVector {
  Rat r;
  LatticeVec c1;
  Rat s;
};

MukaiVector mukai_vector(const Rat& r, const LatticeVec& c1, const Rat& chi);
Rat mukai_pair(const SurfaceDesc& s, const MukaiVector& v, const MukaiVector& w);
Rat mukai_square(const SurfaceDesc& s, const MukaiVector& v);

struct Ext1Dim {
  Rat value;
  std::vector<std::string> warnings;
};
Ext1Dim ext1_dim(const SurfaceDesc& s, const MukaiVector& v);

KummerSheafDesc kummer_restrict(const SurfaceDesc& s, const SheafDesc& F);

// chi(L) = 2 + c1^2/2 on a K3.
Rat k3_line_bundle_chi(const SurfaceDesc& s, const NSVec& c1);

// O(kE) on the elliptic K3: h = (k+1, k-1, 0), Ext^*(F,F) = (1,0,1).
SheafDesc elliptic_fibre_bundle(const SurfaceDesc& s, long k);
// L (x) I_p with L = C + kE and p a base point on C: h = (k+1, 1, 0), Ext^*(F,F) = (1,2,1).
SheafDesc base_point_ideal(const SurfaceDesc& s, long k);

}  // namespace hilbtaut::taut
