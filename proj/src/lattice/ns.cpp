#include "hilbtaut/lattice/ns.hpp"

#include <map>

#include "hilbtaut/error.hpp"

namespace hilbtaut::lattice {

namespace {

const char* kSupported =
    "supported: regular/K3/elliptic-K3 with n in [2,5] and H_N; abelian-star with n in {2,3} and H_N or H_N^m; "
    "Kummer classes with H_N^Km; generalised Kummer classes with H_N^K";

[[noreturn]] void unsupported(const std::string& what) {
  throw Error(ErrorCode::Unsupported, what + " (" + kSupported + ")");
}

void check_vec(const SurfaceDesc& s, const NSVec& v, const char* what) {
  if (static_cast<int>(v.size()) != s.rank())
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " has " + std::to_string(v.size()) +
                                              " coordinates, NS rank is " + std::to_string(s.rank()));
}

// Monomials x^a y^b s^c on A x A, with x = H(x)1, y = 1(x)H, s = s^*H.
using Mono3 = std::array<int, 3>;
using Poly3 = std::map<Mono3, Rat>;

Poly3 mul(const Poly3& p, const Poly3& q) {
  Poly3 out;
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q) out[{a[0] + b[0], a[1] + b[1], a[2] + b[2]}] += ca * cb;
  return out;
}

// Degree-8 values on A x A for a principal polarisation, H^2 = 2: each variable
// cubes to zero, x^2y^2 = (H^2)^2, and the mixed monomials are the four identities
// s^*H^2(H(x)H) = s^*H^2(1(x)H^2) = s^*H^2(H^2(x)1) = s^*H(H(x)H^2) = s^*H(H^2(x)H) = 4.
Rat abelian2_table(const Mono3& m) {
  if (m[0] > 2 || m[1] > 2 || m[2] > 2) return Rat(0);
  if (m[0] + m[1] + m[2] != 4) throw Error(ErrorCode::Internal, "abelian table called off degree");
  return Rat(4);
}

// B = H^{(+)3}, M = s_3^*H on A^3. Known values in units of (H^2)^3:
// B^6 = 90, B^5 Hs = 180, B^4 Hs^2 = 324 with Hs = M + B; M^3 = 0.
Rat abelian3_table(int j) {
  static const Rat T[3] = {Rat(90), Rat(180), Rat(324)};
  switch (j) {
    case 0: return T[0];
    case 1: return T[1] - T[0];
    case 2: return T[2] - Rat(2) * T[1] + T[0];
    default: return Rat(0);
  }
}

NPoly abelian_degree(const SurfaceDesc& s, const HilbClass& c, PolFamily pol) {
  if (pol != PolFamily::HN && pol != PolFamily::HNm)
    throw Error(ErrorCode::VarietyMismatch, "classes on A^[n] pair with H_N or H_N^m, not " + to_string(pol));
  const Rat h = c.h[0];
  const Rat m = c.m.value_or(Rat(0));
  const Rat mu = pol == PolFamily::HNm ? Rat(1) : Rat(0);
  const Rat h2 = s.pair(s.H, s.H);
  if (c.n == 2) {
    Poly3 P = {{{1, 0, 0}, Rat(1)}, {{0, 1, 0}, Rat(1)}};
    if (!mu.is_zero()) P[{0, 0, 1}] = mu;
    Poly3 C = {{{1, 0, 0}, h}, {{0, 1, 0}, h}, {{0, 0, 1}, m}};
    Poly3 prod = mul(mul(mul(P, P), P), C);
    Rat v;
    for (const auto& [mono, coeff] : prod) v += coeff * abelian2_table(mono);
    return NPoly::leading(v / Rat(2), 3);  // psi: blow-up of A x A -> A^[2] has degree 2
  }
  if (c.n == 3) {
    // (B + mu M)^5 (h B + m M), expanded by the binomial theorem in M
    Rat v;
    for (int j = 0; j <= 5; ++j) {
      Rat coef = Rat(exact::binomial(5, j));
      for (int t = 0; t < j; ++t) coef *= mu;
      v += coef * (h * abelian3_table(j) + m * abelian3_table(j + 1));
    }
    v *= h2 * h2 * h2;
    return NPoly::leading(v / Rat(6), 5);  // A^3 -> S^3A has degree 6
  }
  unsupported("abelian-star with n = " + std::to_string(c.n));
}

}  // namespace

std::string to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::K3: return "K3";
    case SurfaceKind::EllipticK3: return "elliptic-K3";
    case SurfaceKind::RegularGeneric: return "regular-generic";
    case SurfaceKind::AbelianStar: return "abelian-star";
  }
  return "K3";
}

SurfaceKind surface_kind_from_string(const std::string& s) {
  if (s == "K3") return SurfaceKind::K3;
  if (s == "elliptic-K3") return SurfaceKind::EllipticK3;
  if (s == "regular-generic") return SurfaceKind::RegularGeneric;
  if (s == "abelian-star") return SurfaceKind::AbelianStar;
  throw Error(ErrorCode::ConfigInvalid, "unknown surface kind '" + s + "'");
}

std::string to_string(PolFamily p) {
  switch (p) {
    case PolFamily::HN: return "H_N";
    case PolFamily::HNm: return "H_N^m";
    case PolFamily::HNKm: return "H_N^Km";
    case PolFamily::HNK: return "H_N^K";
  }
  return "H_N";
}

PolFamily pol_family_from_string(const std::string& s) {
  if (s == "H_N") return PolFamily::HN;
  if (s == "H_N^m") return PolFamily::HNm;
  if (s == "H_N^Km") return PolFamily::HNKm;
  if (s == "H_N^K") return PolFamily::HNK;
  throw Error(ErrorCode::ConfigInvalid, "unknown polarisation family '" + s + "'");
}

void SurfaceDesc::validate() const {
  auto bad = [](const std::string& m) { throw Error(ErrorCode::ConfigInvalid, "surface: " + m); };
  if (basis.empty()) bad("empty NS basis");
  if (gram.size() != basis.size()) bad("gram size does not match basis");
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != basis.size()) bad("gram is not square");
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (gram[i][j] != gram[j][i]) bad("gram is not symmetric");
      if (!gram[i][j].is_integer()) bad("gram entries must be integers");
    }
  }
  if (H.size() != basis.size()) bad("H has the wrong number of coordinates");
  if (pair(H, H).sign() <= 0) bad("H.H must be positive");
  switch (kind) {
    case SurfaceKind::AbelianStar:
      if (basis.size() != 1 || gram[0][0] != Rat(2) || H != NSVec{Rat(1)})
        bad("abelian-star needs NS = ZH with H^2 = 2");
      if (chi_O != 0) bad("abelian surfaces have chi(O) = 0");
      break;
    case SurfaceKind::EllipticK3:
      if (basis != std::vector<std::string>{"C", "E"} || gram != Gram{{Rat(-2), Rat(1)}, {Rat(1), Rat(0)}})
        bad("elliptic-K3 needs basis {C,E} with gram [[-2,1],[1,0]]");
      [[fallthrough]];
    case SurfaceKind::K3:
      if (chi_O != 2) bad("K3 surfaces have chi(O) = 2");
      break;
    case SurfaceKind::RegularGeneric: break;
  }
}

Rat SurfaceDesc::pair(const NSVec& a, const NSVec& b) const {
  if (a.size() != gram.size() || b.size() != gram.size())
    throw Error(ErrorCode::ShapeMismatch, "NS vector length does not match the gram matrix");
  Rat v;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v += a[i] * gram[i][j] * b[j];
  return v;
}

SurfaceDesc SurfaceDesc::k3(const Rat& h_square) {
  return {SurfaceKind::K3, {"H"}, {{h_square}}, 2, {Rat(1)}};
}

SurfaceDesc SurfaceDesc::elliptic_k3(long k) {
  return {SurfaceKind::EllipticK3, {"C", "E"}, {{Rat(-2), Rat(1)}, {Rat(1), Rat(0)}}, 2, {Rat(1), Rat(k)}};
}

SurfaceDesc SurfaceDesc::regular(const Rat& h_square) {
  return {SurfaceKind::RegularGeneric, {"H"}, {{h_square}}, 1, {Rat(1)}};
}

SurfaceDesc SurfaceDesc::abelian_star() { return {SurfaceKind::AbelianStar, {"H"}, {{Rat(2)}}, 0, {Rat(1)}}; }

KummerClass KummerClass::from_cover_pullback(const NSVec& g, const std::array<Rat, 16>& a) {
  KummerClass k;
  for (const auto& x : g) k.alpha.push_back(x / Rat(2));
  for (int l = 0; l < 16; ++l) k.nodal[l] = a[l] / Rat(2);
  return k;
}

bool KummerClass::lattice_shape_ok() const {
  for (const auto& x : alpha)
    if (!x.is_integer()) return false;
  bool all_int = true, all_equal = true;
  for (const auto& x : nodal) {
    all_int = all_int && x.is_integer();
    all_equal = all_equal && x == nodal[0];
  }
  return all_int || (all_equal && (nodal[0] * Rat(2)).is_integer());
}

Rat KummerClass::nodal_sum() const {
  Rat v;
  for (const auto& x : nodal) v += x;
  return v;
}

Rat kummer_pair(const SurfaceDesc& s, const KummerClass& a, const KummerClass& b) {
  Rat v = Rat(2) * s.pair(a.alpha, b.alpha);
  for (int l = 0; l < 16; ++l) v -= Rat(2) * a.nodal[l] * b.nodal[l];
  return v;
}

Rat regular_leading_coefficient(int n) {
  return Rat(exact::factorial(2 * n - 1)) / (Rat(exact::factorial(n - 1)) * Rat(mpz_class(mpz_class(1) << (n - 1))));
}

Rat printed_regular_coefficient(int n) { return Rat(n) / Rat(mpz_class(mpz_class(1) << (n - 1))); }

Rat genkummer_top_power(const SurfaceDesc& s) {
  Rat h2 = s.pair(s.H, s.H);
  return Rat(9) * h2 * h2;
}

NPoly degree_against_polarization(const SurfaceDesc& s, const HilbClass& c, PolFamily pol) {
  check_vec(s, c.h, "class");
  if (c.m && !s.is_abelian())
    throw Error(ErrorCode::VarietyMismatch, "m^*H part on a non-abelian surface");
  if (s.is_abelian()) return abelian_degree(s, c, pol);
  if (pol != PolFamily::HN) unsupported(to_string(pol) + " on " + to_string(s.kind));
  if (c.n < 2 || c.n > 5) unsupported(to_string(s.kind) + " with n = " + std::to_string(c.n));
  const int top = 2 * c.n - 1;
  Rat h2 = s.pair(s.H, s.H), lead = regular_leading_coefficient(c.n) * s.dot_H(c.h);
  for (int i = 1; i < c.n; ++i) lead *= h2;
  // delta_n . H_{X^[n]}^{2n-1} = 0, so the delta part only feeds the unknown tail
  return NPoly::leading(lead, top);
}

NPoly degree_against_polarization(const SurfaceDesc& s, const KummerClass& c, PolFamily pol) {
  if (pol != PolFamily::HNKm) throw Error(ErrorCode::VarietyMismatch, "Kummer classes pair with H_N^Km only");
  if (!s.is_abelian()) throw Error(ErrorCode::VarietyMismatch, "Kummer surface needs an abelian surface");
  check_vec(s, c.alpha, "Kummer alpha part");
  // c . (N alpha(H) - 1/2 sum N_l) = 2N alpha.H + sum nodal
  return NPoly::exact(Rat(2) * s.dot_H(c.alpha), 1) + NPoly::exact(c.nodal_sum());
}

NPoly degree_against_polarization(const SurfaceDesc& s, const GenKummerClass& c, PolFamily pol) {
  if (pol != PolFamily::HNK) throw Error(ErrorCode::VarietyMismatch, "generalised Kummer classes pair with H_N^K only");
  if (!s.is_abelian()) throw Error(ErrorCode::VarietyMismatch, "generalised Kummer needs an abelian-star surface");
  check_vec(s, c.h, "class");
  Rat h2 = s.pair(s.H, s.H);
  return NPoly::leading(genkummer_top_power(s) * s.dot_H(c.h) / h2, 3);
}

NPoly blowup_degree(const SurfaceDesc& s, const Rat& a1, const Rat& a2, const Rat& b, const Rat& c) {
  if (!s.is_abelian()) throw Error(ErrorCode::VarietyMismatch, "blow-up of A x A needs an abelian-star surface");
  (void)c;  // D pairs to zero with the top power of the pulled-back polarisation
  Poly3 P = {{{1, 0, 0}, Rat(1)}, {{0, 1, 0}, Rat(1)}, {{0, 0, 1}, Rat(1)}};
  Poly3 C = {{{1, 0, 0}, a1}, {{0, 1, 0}, a2}, {{0, 0, 1}, b}};
  Poly3 prod = mul(mul(mul(P, P), P), C);
  Rat v;
  for (const auto& [mono, coeff] : prod) v += coeff * abelian2_table(mono);
  return NPoly::leading(v, 3);
}

namespace {

void check_rank(long rank) {
  if (rank <= 0) throw Error(ErrorCode::ZeroRank, "slope needs positive rank, got " + std::to_string(rank));
}

}  // namespace

NPoly slope(long rank, const SurfaceDesc& s, const HilbClass& c1, PolFamily pol) {
  check_rank(rank);
  return degree_against_polarization(s, c1, pol).divided(Rat(rank));
}

NPoly slope(long rank, const SurfaceDesc& s, const KummerClass& c1, PolFamily pol) {
  check_rank(rank);
  return degree_against_polarization(s, c1, pol).divided(Rat(rank));
}

NPoly slope(long rank, const SurfaceDesc& s, const GenKummerClass& c1, PolFamily pol) {
  check_rank(rank);
  return degree_against_polarization(s, c1, pol).divided(Rat(rank));
}

NestedClass nested_pullback(const HilbClass& c) {
  if (c.n < 2) throw Error(ErrorCode::IndexError, "nested pullback needs n >= 2");
  if (c.m) throw Error(ErrorCode::Unsupported, "nested pullback of m^*H parts is not modelled");
  NestedClass out;
  out.p_part = HilbClass{c.n - 1, c.h, std::nullopt, c.n - 1 == 1 ? Rat(0) : c.d};
  out.q_part = c.h;
  out.D = c.d;
  return out;
}

Rat bb_square(const SurfaceDesc& s, const HilbClass& c) {
  if (!s.is_k3_like()) throw Error(ErrorCode::Unsupported, "Beauville-Bogomolov form needs a K3 surface");
  if (c.m) throw Error(ErrorCode::Unsupported, "m^*H parts have no K3^[n] meaning");
  check_vec(s, c.h, "class");
  return s.pair(c.h, c.h) + c.d * c.d * Rat(2) * Rat(1 - c.n);
}

}  // namespace hilbtaut::lattice
