#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hilbtaut/exact/npoly.hpp"
#include "hilbtaut/exact/rat.hpp"

namespace hilbtaut::lattice {

using exact::NPoly;
using exact::Rat;
using NSVec = std::vector<Rat>;
using Gram = std::vector<std::vector<Rat>>;

enum class SurfaceKind { K3, EllipticK3, RegularGeneric, AbelianStar };

std::string to_string(SurfaceKind k);
SurfaceKind surface_kind_from_string(const std::string& s);

struct SurfaceDesc {
  SurfaceKind kind = SurfaceKind::K3;
  std::vector<std::string> basis;
  Gram gram;
  int chi_O = 2;
  NSVec H;

  // Throws CONFIG_INVALID on any broken invariant.
  void validate() const;
  int rank() const { return static_cast<int>(basis.size()); }
  Rat pair(const NSVec& a, const NSVec& b) const;
  Rat dot_H(const NSVec& a) const { return pair(a, H); }
  bool is_abelian() const { return kind == SurfaceKind::AbelianStar; }
  bool is_k3_like() const { return kind == SurfaceKind::K3 || kind == SurfaceKind::EllipticK3; }

  static SurfaceDesc k3(const Rat& h_square);
  // Basis {C, E}, gram [[-2,1],[1,0]], H = C + kE (ample for k >= 3).
  static SurfaceDesc elliptic_k3(long k = 3);
  static SurfaceDesc regular(const Rat& h_square);
  static SurfaceDesc abelian_star();
};

// Class on X^[n]: (h)_{X^[n]} + m * m_n^*H + d * delta_n. m is present only on abelian surfaces.
struct HilbClass {
  int n = 2;
  NSVec h;
  std::optional<Rat> m;
  Rat d;

  friend bool operator==(const HilbClass&, const HilbClass&) = default;
};

// alpha(x) + sum_l nodal_l N_l on Km A; alpha is in NS(A) coordinates.
struct KummerClass {
  NSVec alpha;
  std::array<Rat, 16> nodal{};

  // c_1 of L with tau^*L = b^*g + sum a_l E_l.
  static KummerClass from_cover_pullback(const NSVec& g, const std::array<Rat, 16>& a);
  // Integral alpha part and integral nodal part, or all sixteen halves equal.
  bool lattice_shape_ok() const;
  Rat nodal_sum() const;
  friend bool operator==(const KummerClass&, const KummerClass&) = default;
};

// h * j^*H_{A^[3]} + d * j^*delta_3 on K_2(A).
struct GenKummerClass {
  NSVec h;
  Rat d;
};

enum class PolFamily { HN, HNm, HNKm, HNK };
std::string to_string(PolFamily p);
PolFamily pol_family_from_string(const std::string& s);

Rat kummer_pair(const SurfaceDesc& s, const KummerClass& a, const KummerClass& b);

// (2n-1)! / ((n-1)! 2^(n-1)): leading coefficient of l.H_N^{2n-1} divided by (l.H)(H^2)^(n-1).
Rat regular_leading_coefficient(int n);
// Closed form n / 2^(n-1); kept for the errata report.
Rat printed_regular_coefficient(int n);
// int over K_2(A) of (j^*H)^4 = 9 (H^2)^2.
Rat genkummer_top_power(const SurfaceDesc& s);

NPoly degree_against_polarization(const SurfaceDesc& s, const HilbClass& c, PolFamily pol);
NPoly degree_against_polarization(const SurfaceDesc& s, const KummerClass& c, PolFamily pol);
NPoly degree_against_polarization(const SurfaceDesc& s, const GenKummerClass& c, PolFamily pol);

// a1 (H(x)1) + a2 (1(x)H) + b s^*H + c D on the blow-up of A x A along the diagonal,
// against the pullback of H_N^m. No degree-2 halving: this lives upstairs.
NPoly blowup_degree(const SurfaceDesc& s, const Rat& a1, const Rat& a2, const Rat& b, const Rat& c);

NPoly slope(long rank, const SurfaceDesc& s, const HilbClass& c1, PolFamily pol);
NPoly slope(long rank, const SurfaceDesc& s, const KummerClass& c1, PolFamily pol);
NPoly slope(long rank, const SurfaceDesc& s, const GenKummerClass& c1, PolFamily pol);

// sigma^*(p^*(p_part) + q^*(q_part)) + D * [D_n] on the nested Hilbert scheme.
struct NestedClass {
  HilbClass p_part;  // level n-1; at n-1 = 1 the delta part is 0
  NSVec q_part;
  Rat D;
};

NestedClass nested_pullback(const HilbClass& c);

// Beauville-Bogomolov square on a K3^[n]: l.l + d^2 * 2(1-n).
Rat bb_square(const SurfaceDesc& s, const HilbClass& c);

}  // namespace hilbtaut::lattice
