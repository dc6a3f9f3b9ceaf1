#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbtaut/exact/rat.hpp"
#include "hilbtaut/taut/sheaf.hpp"

namespace hilbtaut::deform {

using exact::Rat;
using taut::SheafDesc;

struct DeformSplit {
  std::int64_t surface_dim = 0;     // ext^1(F,F)
  std::int64_t additional_dim = 0;  // h^0(F) h^1(F)
  std::int64_t total = 0;
};

// MISSING_DATA without coh/ext_self, H2_NONZERO if h^2(F) != 0.
DeformSplit deformation_split(const SheafDesc& F);

// Dimensions of the H^0 (x) H^0 and H^1 (x) H^1 summands the quadratic Kuranishi term can hit.
struct QuadraticTargets {
  std::int64_t h0_part = 0;
  std::int64_t h1_part = 0;
};
QuadraticTargets kuranishi_quadratic_targets(const SheafDesc& F);

struct SingularityReport {
  long k = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t ext1 = 0;
  std::int64_t tangent = 0;
  std::int64_t tangent_from_ext = 0;  // degree 1 of the two-summand Ext formula
  QuadraticTargets targets;
  // The Ext^1 x H^0 -> H^1 pairing is taken as nonzero; it is not computed.
  bool pairing_assumed_nonzero = true;
};

// F = L (x) I_p on the elliptic K3, L = C + kE, p a base point. K_TOO_SMALL for k < 2.
SingularityReport singularity_report(long k);

struct ObstructionInput {
  Rat kappa_dot_c1;
  long r = 1;
  int n = 2;
  Rat a;
};

enum class Deforms { No, Undecided };
std::string to_string(Deforms d);

// q(delta_n) = 2(1-n)
Rat delta_square(int n);
// kappa.c1(F) - r a q(delta_n)
Rat obstruction_trace(const ObstructionInput& in);
Deforms deforms_along(const ObstructionInput& in);

}  // namespace hilbtaut::deform
