#include "hilbtaut/oracle/checks.hpp"

#include "hilbtaut/error.hpp"
#include "hilbtaut/oracle/even.hpp"
#include "hilbtaut/oracle/torus.hpp"

namespace hilbtaut::oracle {

Rat abelian_hilb_leading(int n, const Rat& h, const Rat& m, const Rat& mu) {
  if (n != 2 && n != 3) throw Error(ErrorCode::Unsupported, "oracle models A^2 and A^3 only");
  RingElement B = polarization(n);
  RingElement M = n == 2 ? pullback(TorusMap::sum(), polarization(1)) : pullback(TorusMap::sum3(), polarization(1));
  RingElement pol = B + mu * M;
  RingElement cls = h * B + m * M;
  Rat v = integrate(wedge(power(pol, 2 * n - 1), cls)).value;
  return v / Rat(exact::factorial(n));
}

Rat regular_hilb_leading(int n, const std::vector<std::vector<Rat>>& gram, const std::vector<Rat>& H,
                         const std::vector<Rat>& l) {
  auto ring = even_ring(n, gram);
  std::vector<std::vector<Rat>> classes(2 * n - 1, H);
  classes.push_back(l);
  return even_intersection(ring, classes, Normalization::SymmetricProduct);
}

Rat genkummer_top_power_oracle() {
  RingElement fibre = pullback(TorusMap::sum3(), point_class(1));
  return integrate(wedge(power(polarization(3), 4), fibre)).value / Rat(6);
}

Rat two_torsion_count() { return integrate(pullback(TorusMap::multiply(1, 2), point_class(1))).value; }

namespace {

RingElement sum_ps3() {
  RingElement out(torus(3));
  RingElement sH = pullback(TorusMap::sum(), polarization(1));
  for (auto [j, l] : {std::pair{1, 2}, {1, 3}, {2, 3}}) out += pullback(TorusMap::pair_projection(3, j, l), sH);
  return out;
}

}  // namespace

CurveCounts curve_test_counts() {
  RingElement H = polarization(1), pt = point_class(1);
  auto pr = [](int i, const RingElement& x) { return pullback(TorusMap::projection(3, i), x); };
  RingElement l1 = wedge(pr(1, pt), wedge(pr(2, pt), pr(3, H)));
  RingElement l2 = wedge(pr(1, pt), wedge(diagonal_class(3, 2, 3), pr(2, H)));
  Rat h2 = integrate(wedge(H, H)).value;
  RingElement s3H = pullback(TorusMap::sum3(), H), B = polarization(3), Hs = sum_ps3();
  RingElement p23 = pullback(TorusMap::pair_projection(3, 2, 3), pullback(TorusMap::sum(), H));
  auto on = [&](const RingElement& x, const RingElement& l) { return integrate(wedge(x, l)).value / h2; };
  return {on(s3H, l1), on(B, l1), on(Hs, l1), on(s3H, l2), on(B, l2), on(Hs, l2), on(p23, l2)};
}

std::pair<Rat, Rat> curve_system_solution(const CurveCounts& c) {
  Rat det = c.l1_B * c.l2_Hs - c.l1_Hs * c.l2_B;
  if (det == Rat(0)) throw Error(ErrorCode::Internal, "test curves do not separate B and Hs");
  Rat a = (c.l1_s3 * c.l2_Hs - c.l1_Hs * c.l2_s3) / det;
  Rat b = (c.l1_B * c.l2_s3 - c.l1_s3 * c.l2_B) / det;
  return {a, b};
}

}  // namespace hilbtaut::oracle
