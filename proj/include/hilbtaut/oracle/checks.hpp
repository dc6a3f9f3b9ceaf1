#pragma once

#include <utility>
#include <vector>

#include "hilbtaut/exact/rat.hpp"

namespace hilbtaut::oracle {

using exact::Rat;

// Leading N-coefficient of (N(H_hilb + mu m^*H) - delta)^{2n-1} . (h H_hilb + m m^*H) on A^[n],
// n in {2,3}, evaluated in the exterior model of A^n and divided by n!.
Rat abelian_hilb_leading(int n, const Rat& h, const Rat& m, const Rat& mu);

// (1/n!) int_{X^n} (l^{(+)n}) (H^{(+)n})^{2n-1} in the even model; H is the first basis class.
Rat regular_hilb_leading(int n, const std::vector<std::vector<Rat>>& gram, const std::vector<Rat>& H,
                         const std::vector<Rat>& l);

// (1/6) int_{A^3} (H^{(+)3})^4 . s_3^*[pt]: the top self-intersection of j^*H_{A^[3]} on K_2(A).
Rat genkummer_top_power_oracle();

// int_A [2]^*[pt].
Rat two_torsion_count();

// Test curves on A^3: l1 = {x} x {y} x C_H, l2 = {x} x (diagonal over C_H). Each class is
// paired with the curve and divided by H^2. B = H^{(+)3}, Hs = sum p_jk^* s^*H.
struct CurveCounts {
  Rat l1_s3, l1_B, l1_Hs;
  Rat l2_s3, l2_B, l2_Hs, l2_p23;
};
CurveCounts curve_test_counts();

// Solves s3^*H = a B + b Hs on the two test curves.
std::pair<Rat, Rat> curve_system_solution(const CurveCounts& c);

}  // namespace hilbtaut::oracle
