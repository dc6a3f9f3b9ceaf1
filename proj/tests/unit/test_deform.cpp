#include <doctest.h>

#include <random>

#include "hilbtaut/deform/deform.hpp"
#include "hilbtaut/error.hpp"

using namespace hilbtaut;
using namespace hilbtaut::deform;
using exact::GradedDims;
using lattice::SurfaceDesc;

namespace {

SheafDesc with_dims(GradedDims coh, GradedDims ext) {
  SheafDesc F;
  F.c1 = {Rat(1)};
  F.coh = coh;
  F.ext_self = ext;
  return F;
}

}  // namespace

TEST_CASE("deformation split") {
  auto s = SurfaceDesc::elliptic_k3();
  auto d = deformation_split(taut::elliptic_fibre_bundle(s, 4));
  CHECK(d.surface_dim == 0);
  CHECK(d.additional_dim == 15);
  CHECK(d.total == 15);
  for (long k = 2; k <= 10; ++k) {
    CHECK(deformation_split(taut::elliptic_fibre_bundle(s, k)).total == k * k - 1);
    CHECK(deformation_split(taut::base_point_ideal(s, k)).total == k + 3);
  }
  auto loc = deformation_split(with_dims({3, 0, 0}, {1, 4, 1}));
  CHECK(loc.additional_dim == 0);
  CHECK(loc.total == 4);
}

TEST_CASE("split errors") {
  SheafDesc F;
  F.c1 = {Rat(1)};
  try {
    deformation_split(F);
    FAIL("expected MISSING_DATA");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingData);
  }
  try {
    deformation_split(with_dims({1, 0, 1}, {1, 0, 1}));
    FAIL("expected H2_NONZERO");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::H2Nonzero);
  }
  CHECK_THROWS_AS(kuranishi_quadratic_targets(F), Error);
}

TEST_CASE("split agrees with the extension formula") {
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      for (long e = 0; e <= 4; ++e) {
        SheafDesc F = with_dims({a, b, 0}, {1, e, 1});
        GradedDims ext = taut::taut_self_ext_k3(F, 2);
        CHECK(deformation_split(F).total == ext.at(1));
        auto q = kuranishi_quadratic_targets(F);
        // Ext^2(F,F) and Hom(F,F) (x) H^2(O) each contribute 1
        CHECK(1 + q.h0_part + q.h1_part + F.ext_self->at(2) == ext.at(2));
        if (b == 0) CHECK(ext.at(1) == F.ext_self->at(1));
      }
}

TEST_CASE("quadratic targets") {
  auto s = SurfaceDesc::elliptic_k3();
  auto q = kuranishi_quadratic_targets(taut::elliptic_fibre_bundle(s, 2));
  CHECK(q.h0_part == 9);
  CHECK(q.h1_part == 1);
  auto p = kuranishi_quadratic_targets(taut::base_point_ideal(s, 2));
  CHECK(p.h0_part == 9);
  CHECK(p.h1_part == 1);
  CHECK(kuranishi_quadratic_targets(with_dims({4, 0, 0}, {1, 2, 1})).h1_part == 0);
}

TEST_CASE("singularity report") {
  auto r = singularity_report(2);
  CHECK(r.tangent == 5);
  CHECK(r.tangent_from_ext == 5);
  CHECK(r.h0 == 3);
  CHECK(r.h1 == 1);
  CHECK(r.ext1 == 2);
  CHECK(r.pairing_assumed_nonzero);
  CHECK(singularity_report(5).tangent == 8);
  try {
    singularity_report(1);
    FAIL("expected K_TOO_SMALL");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KTooSmall);
  }
}

TEST_CASE("obstruction trace") {
  CHECK(obstruction_trace({Rat(0), 3, 4, Rat(0)}) == 0);
  CHECK(deforms_along({Rat(0), 3, 4, Rat(0)}) == Deforms::Undecided);
  CHECK(obstruction_trace({Rat(-2), 1, 2, Rat(1)}) == 0);
  CHECK(obstruction_trace({Rat(0), 2, 3, Rat(1)}) == 8);
  CHECK(deforms_along({Rat(0), 2, 3, Rat(1)}) == Deforms::No);
  CHECK(delta_square(2) == -2);
  CHECK(delta_square(3) == -4);
  CHECK(delta_square(2) == lattice::bb_square(SurfaceDesc::k3(2), {2, {Rat(0)}, std::nullopt, Rat(1)}));
  CHECK(delta_square(3) == lattice::bb_square(SurfaceDesc::k3(2), {3, {Rat(0)}, std::nullopt, Rat(1)}));
}

TEST_CASE("trace is affine-linear with the expected zero set") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-30, 30), rr(1, 5), nn(2, 6);
  for (int t = 0; t < 300; ++t) {
    long r = rr(rng);
    int n = static_cast<int>(nn(rng));
    Rat k1(c(rng), 1 + (t % 4)), k2(c(rng)), a1(c(rng), 3), a2(c(rng));
    Rat lam(c(rng), 7);
    auto T = [&](const Rat& k, const Rat& a) { return obstruction_trace({k, r, n, a}); };
    // affine combination
    CHECK(T(lam * k1 + (Rat(1) - lam) * k2, lam * a1 + (Rat(1) - lam) * a2) ==
          lam * T(k1, a1) + (Rat(1) - lam) * T(k2, a2));
    // three collinear points on the hyperplane kappa.c1 = 2(1-n) r a
    for (const Rat& a : {a1, a2, a1 + a2}) {
      Rat k = Rat(2 * (1 - n) * r) * a;
      CHECK(T(k, a) == 0);
      CHECK(deforms_along({k, r, n, a}) == Deforms::Undecided);
      CHECK(deforms_along({k + Rat(1), r, n, a}) == Deforms::No);
    }
  }
}
