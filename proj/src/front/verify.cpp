#include <functional>
#include <thread>

#include "hilbtaut/deform/deform.hpp"
#include "hilbtaut/error.hpp"
#include "hilbtaut/front/commands.hpp"
#include "hilbtaut/lattice/ns.hpp"
#include "hilbtaut/oracle/checks.hpp"
#include "hilbtaut/oracle/expr.hpp"
#include "hilbtaut/oracle/torus.hpp"
#include "hilbtaut/stability/rules.hpp"
#include "hilbtaut/taut/sheaf.hpp"

namespace hilbtaut::front {

using exact::GradedDims;
using exact::NPoly;
using exact::Rat;
using lattice::HilbClass;
using lattice::NSVec;
using lattice::PolFamily;
using lattice::SurfaceDesc;
using namespace oracle;

namespace {

using RowFn = std::function<Row()>;

constexpr Provenance O = Provenance::Oracle;
constexpr Provenance F = Provenance::Formula;
constexpr Provenance B = Provenance::Both;

std::string str(const Rat& r) { return r.str(); }

Rat integral(const RingElement& x) { return integrate(x).value; }

RingElement prr(int k, int j, int l, const RingElement& x) { return pullback(TorusMap::pair_projection(k, j, l), x); }

Rat h2cube() {
  Rat h2 = integral(wedge(polarization(1), polarization(1)));
  return h2 * h2 * h2;
}

RingElement sum_ps3() {
  RingElement out(torus(3));
  for (auto [j, l] : {std::pair{1, 2}, {1, 3}, {2, 3}}) out += prr(3, j, l, pullback(TorusMap::sum(), polarization(1)));
  return out;
}

Row expr_row(const std::string& expr, const std::string& ring, const std::string& expected, const std::string& cite) {
  auto r = eval_class_expr(expr, ring);
  return checked_row(expr + " on " + ring, expected, str(r.value), O, cite);
}

// Formula value as computed, or a disagreement marker when the oracle differs.
std::string both(const std::string& formula, const Rat& formula_lead, const Rat& oracle_lead) {
  if (formula_lead == oracle_lead) return formula;
  return "formula " + formula + " / oracle " + str(oracle_lead);
}

NPoly ab_degree(int n, long h, long m, PolFamily pol) {
  return lattice::degree_against_polarization(SurfaceDesc::abelian_star(), HilbClass{n, {Rat(h)}, Rat(m), Rat(0)}, pol);
}

Row slope_table_row(const std::string& label, int n, long h, long m, PolFamily pol, const std::string& expected,
                    const std::string& cite) {
  NPoly d = ab_degree(n, h, m, pol);
  Rat o = abelian_hilb_leading(n, Rat(h), Rat(m), pol == PolFamily::HNm ? Rat(1) : Rat(0));
  return checked_row(label, expected, both(d.str(), *d.coeff(2 * n - 1), o), B, cite);
}

std::vector<RowFn> verify_rows() {
  std::vector<RowFn> rows;
  const std::string tab2 = "A x A intersection table";
  rows.push_back([=] { return expr_row("int(s^H . s^H . p1^H . p2^H)", "A2", "4", tab2); });
  rows.push_back([=] { return expr_row("int(s^H . s^H . p2^(H . H))", "A2", "4", tab2); });
  rows.push_back([=] { return expr_row("int(s^H . p1^H . p2^(H . H))", "A2", "4", tab2); });
  rows.push_back([=] { return expr_row("int(HM . p1^(H . H) . p2^H)", "A2", "0", tab2); });
  rows.push_back([=] { return expr_row("int(HM . HM . p1^H . p2^H)", "A2", "-4", tab2); });

  rows.push_back([] {
    auto s3 = eval_class_expr("s3^H", "A3").element;
    RingElement rhs = Rat(-1) * polarization(3) + sum_ps3();
    return checked_row("s3^*H = -H^{(+)3} + sum p_jk^* s^*H", "true", s3 == rhs ? "true" : "false", O,
                       "s3 decomposition");
  });
  rows.push_back([] {
    auto hm3 = eval_class_expr("HM", "A3").element;
    auto sum = eval_class_expr("p12^HM", "A3").element + eval_class_expr("p13^HM", "A3").element +
               eval_class_expr("p23^HM", "A3").element;
    return checked_row("H_M3 = p12^*H_M + p13^*H_M + p23^*H_M", "true", hm3 == sum ? "true" : "false", O,
                       "Mumford class on A^3");
  });
  rows.push_back([] { return checked_row("int_A [2]^*[pt]", "16", str(two_torsion_count()), O, "two-torsion points"); });
  rows.push_back([] {
    auto [a, b] = curve_system_solution(curve_test_counts());
    return checked_row("curve system for s3^*H: (a, b)", "(-1, 1)", "(" + str(a) + ", " + str(b) + ")", O,
                       "s3 decomposition via test curves");
  });

  const std::string tab3 = "A^3 table, units of (H^2)^3";
  auto a3 = [=](const std::string& label, std::function<RingElement()> f, const std::string& expected) {
    return [=] { return checked_row(label, expected, str(integral(f()) / h2cube()), O, tab3); };
  };
  rows.push_back(a3("B^6", [] { return power(polarization(3), 6); }, "90"));
  rows.push_back(a3("B^5 . Hs", [] { return wedge(power(polarization(3), 5), sum_ps3()); }, "180"));
  rows.push_back(a3("B^4 . Hs^2", [] { return wedge(power(polarization(3), 4), power(sum_ps3(), 2)); }, "324"));
  rows.push_back(a3("B^5 . s3^*H", [] {
    return wedge(power(polarization(3), 5), pullback(TorusMap::sum3(), polarization(1)));
  }, "90"));
  rows.push_back(a3("B^4 . (s3^*H)^2", [] {
    return wedge(power(polarization(3), 4), power(pullback(TorusMap::sum3(), polarization(1)), 2));
  }, "54"));
  rows.push_back(a3("(B + s3^*H)^5 . B", [] {
    RingElement M = pullback(TorusMap::sum3(), polarization(1));
    return wedge(power(polarization(3) + M, 5), polarization(3));
  }, "1080"));
  rows.push_back(a3("(B + s3^*H)^5 . s3^*H", [] {
    RingElement M = pullback(TorusMap::sum3(), polarization(1));
    return wedge(power(polarization(3) + M, 5), M);
  }, "360"));

  const std::string st2 = "A^[2] slope table";
  rows.push_back([=] { return slope_table_row("H_{A^[2]} . (H_N^m)^3", 2, 1, 0, PolFamily::HNm, "72N^3 + O(N^2)", st2); });
  rows.push_back([=] { return slope_table_row("H_m . (H_N^m)^3", 2, -1, 1, PolFamily::HNm, "-36N^3 + O(N^2)", st2); });
  rows.push_back([=] { return slope_table_row("m^*H . (H_N^m)^3", 2, 0, 1, PolFamily::HNm, "36N^3 + O(N^2)", st2); });
  rows.push_back([=] { return slope_table_row("H_m . H_N^3", 2, -1, 1, PolFamily::HN, "0 + O(N^2)", st2); });
  const std::string st3 = "A^[3] leading coefficients";
  rows.push_back([=] { return slope_table_row("H_{A^[3]} . (H_N^m)^5", 3, 1, 0, PolFamily::HNm, "1440N^5 + O(N^4)", st3); });
  rows.push_back([=] { return slope_table_row("m_3^*H . (H_N^m)^5", 3, 0, 1, PolFamily::HNm, "480N^5 + O(N^4)", st3); });
  rows.push_back([=] {
    Rat h = *ab_degree(3, 1, 0, PolFamily::HNm).coeff(5), m = *ab_degree(3, 0, 1, PolFamily::HNm).coeff(5);
    Rat oh = abelian_hilb_leading(3, Rat(1), Rat(0), Rat(1)), om = abelian_hilb_leading(3, Rat(0), Rat(1), Rat(1));
    return checked_row("H_{A^[3]} : m_3^*H leading ratio", "3", both(str(h / m), h / m, oh / om), B, st3);
  });

  for (int n = 2; n <= 5; ++n)
    rows.push_back([n] {
      NPoly d = lattice::degree_against_polarization(SurfaceDesc::k3(2), HilbClass{n, {Rat(0)}, std::nullopt, Rat(1)},
                                                     PolFamily::HN);
      return checked_row("delta_" + std::to_string(n) + " . H_N^" + std::to_string(2 * n - 1),
                         NPoly::leading(Rat(0), 2 * n - 1).str(), d.str(), F, "delta leading term");
    });
  for (int n = 2; n <= 5; ++n)
    rows.push_back([n] {
      auto s = SurfaceDesc::elliptic_k3(3);
      NSVec l = {Rat(2), Rat(-1)};
      NPoly d = lattice::degree_against_polarization(s, HilbClass{n, l, std::nullopt, Rat(0)}, PolFamily::HN);
      Rat o = regular_hilb_leading(n, s.gram, s.H, l);
      return checked_row("elliptic K3^[" + std::to_string(n) + "]: (2C - E) . H_N^" + std::to_string(2 * n - 1) +
                             " leading",
                         str(o), str(*d.coeff(2 * n - 1)), B, "regular intersection formula");
    });

  const std::string krug = "extension groups, h2(F) = 0";
  rows.push_back([=] {
    int ok1 = 0;
    for (long a = 0; a <= 5; ++a)
      for (long b = 0; b <= 5; ++b) {
        GradedDims ext = taut::taut_ext_dims({1, 1, 1}, {1, 0, 1}, taut::serre_flip({a, b, 0}), {a, b, 0}, 2);
        ok1 += ext.at(1) == 1 + a * b;
      }
    return checked_row("Ext^1 = ext^1 + h0 h1 on [0,5]^2", "36/36", std::to_string(ok1) + "/36", F, krug);
  });
  rows.push_back([=] {
    int ok = 0;
    for (long a = 0; a <= 5; ++a)
      for (long b = 0; b <= 5; ++b) {
        GradedDims second = exact::graded_tensor(taut::serre_flip({a, b, 0}), GradedDims{a, b, 0});
        ok += second.at(2) == a * a + b * b;
      }
    return checked_row("second summand in degree 2 = h0^2 + h1^2 on [0,5]^2", "36/36", std::to_string(ok) + "/36", F,
                       krug);
  });
  for (long k = 2; k <= 6; ++k)
    rows.push_back([k] {
      auto F = taut::elliptic_fibre_bundle(SurfaceDesc::elliptic_k3(), k);
      auto ext = taut::taut_self_ext_k3(F, 2).at(1), split = deform::deformation_split(F).total;
      std::string c = ext == split ? std::to_string(ext) : std::to_string(ext) + " / split " + std::to_string(split);
      return checked_row("O(" + std::to_string(k) + "E): Ext^1(F^[2],F^[2])", std::to_string(k * k - 1), c,
                         Provenance::Formula, "elliptic K3, k^2 - 1");
    });
  for (long k = 2; k <= 6; ++k)
    rows.push_back([k] {
      auto r = deform::singularity_report(k);
      std::string c = r.tangent == r.tangent_from_ext
                          ? std::to_string(r.tangent)
                          : std::to_string(r.tangent) + " / ext " + std::to_string(r.tangent_from_ext);
      return checked_row("L (x) I_p, L = C + " + std::to_string(k) + "E: tangent dimension", std::to_string(k + 3), c,
                         Provenance::Formula, "elliptic K3, k + 3");
    });

  const std::string km = "Kummer slopes";
  rows.push_back([=] {
    auto s = SurfaceDesc::abelian_star();
    int ok = 0, total = 0;
    for (long r = 1; r <= 4; ++r)
      for (long f = -10; f <= 10; ++f) {
        taut::SheafDesc G;
        G.rank = r;
        G.c1 = {Rat(f)};
        auto k = taut::kummer_restrict(s, G);
        NPoly mu = lattice::slope(k.rank, s, k.c1, PolFamily::HNKm);
        ok += mu == NPoly::exact(s.dot_H({Rat(f)}) / Rat(r), 1) + NPoly::exact(Rat(-4));
        ++total;
      }
    return checked_row("mu(F^Km) = (1/r) N H.f - 4, r <= 4, |f| <= 10", std::to_string(total) + "/" +
                       std::to_string(total), std::to_string(ok) + "/" + std::to_string(total), F, km);
  });
  rows.push_back([=] {
    auto s = SurfaceDesc::abelian_star();
    std::array<Rat, 16> a{};
    for (int l = 0; l < 16; ++l) a[l] = Rat(l % 4 - 1);
    NPoly mu = lattice::slope(1, s, lattice::KummerClass::from_cover_pullback({Rat(3)}, a), PolFamily::HNKm);
    return checked_row("tau^*L = b^*(3H) + sum a_l E_l: slope", "6N + 4", mu.str(), F, km);
  });
  rows.push_back([] {
    auto s = SurfaceDesc::abelian_star();
    lattice::KummerClass half;
    half.alpha = {Rat(0)};
    half.nodal.fill(Rat(1, 2));
    return checked_row("(1/2 sum N_l)^2", "-8", str(lattice::kummer_pair(s, half, half)), F, "Kummer lattice");
  });
  rows.push_back([] {
    auto s = SurfaceDesc::abelian_star();
    lattice::KummerClass x{{Rat(3)}, {}}, y{{Rat(-5)}, {}};
    return checked_row("alpha(3H) . alpha(-5H) = 2 (3H . -5H)", str(Rat(2) * s.pair({Rat(3)}, {Rat(-5)})),
                       str(lattice::kummer_pair(s, x, y)), F, "Kummer lattice");
  });
  rows.push_back([] {
    auto s = SurfaceDesc::abelian_star();
    taut::SheafDesc P;
    P.c1 = {Rat(0)};
    auto k = taut::kummer_restrict(s, P);
    auto v = taut::mukai_vector(Rat(k.rank), k.c1, Rat(0));
    return checked_row("v = (2, -1/2 sum N_l, -2): v^2", "0", str(taut::mukai_square(s, v)), F, "Kummer Mukai vector");
  });
  rows.push_back([] {
    auto s = SurfaceDesc::abelian_star();
    taut::SheafDesc P;
    P.c1 = {Rat(0)};
    auto k = taut::kummer_restrict(s, P);
    auto v = taut::mukai_vector(Rat(k.rank), k.c1, Rat(0));
    return checked_row("v = (2, -1/2 sum N_l, -2): moduli dimension", "2", str(taut::ext1_dim(s, v).value), F,
                       "Kummer Mukai vector");
  });

  rows.push_back([] {
    Rat f = lattice::genkummer_top_power(SurfaceDesc::abelian_star());
    Rat o = genkummer_top_power_oracle();
    return checked_row("int_{K_2(A)} (j^*H)^4", str(o), both(str(f), f, o), B, "generalised Kummer degree");
  });
  rows.push_back([] {
    NPoly d = lattice::degree_against_polarization(SurfaceDesc::abelian_star(), lattice::GenKummerClass{{Rat(0)}, Rat(1)},
                                                   PolFamily::HNK);
    return checked_row("(H_N^K)^3 . j^*delta_3", "0 + O(N^2)", d.str(), F, "generalised Kummer degree");
  });

  const std::string ob = "obstruction trace";
  rows.push_back([=] {
    return checked_row("q(delta_2)", "-2", str(lattice::bb_square(SurfaceDesc::k3(2), {2, {Rat(0)}, std::nullopt, Rat(1)})),
                       F, "Beauville-Bogomolov form");
  });
  rows.push_back([=] {
    return checked_row("q(delta_3)", "-4", str(lattice::bb_square(SurfaceDesc::k3(2), {3, {Rat(0)}, std::nullopt, Rat(1)})),
                       F, "Beauville-Bogomolov form");
  });
  rows.push_back([=] {
    deform::ObstructionInput in{Rat(-2), 1, 2, Rat(1)};
    return checked_row("trace(kappa.c1 = -2, r = 1, n = 2, a = 1)", "0 UNDECIDED",
                       str(deform::obstruction_trace(in)) + " " + deform::to_string(deform::deforms_along(in)), F, ob);
  });
  rows.push_back([=] {
    deform::ObstructionInput in{Rat(0), 2, 3, Rat(1)};
    return checked_row("trace(kappa.c1 = 0, r = 2, n = 3, a = 1)", "8 NO",
                       str(deform::obstruction_trace(in)) + " " + deform::to_string(deform::deforms_along(in)), F, ob);
  });

  const std::string stab = "line-subbundle search, |params| <= 10";
  auto search_row = [=](const std::string& label, stability::Setting set, stability::SheafData d,
                        const std::string& expected) {
    return [=] {
      auto res = stability::destabilizer_search(d, set, 10, 1);
      std::string c = std::to_string(res.survivors.size());
      for (const auto& x : res.survivors) {
        c += " (";
        for (std::size_t i = 0; i < std::min<std::size_t>(x.params.size(), 4); ++i)
          c += (i ? "," : "") + std::to_string(x.params[i]);
        c += ")";
      }
      return checked_row(label, expected, c, F, stab);
    };
  };
  stability::SheafData one;
  one.f = 1;
  stability::SheafData trivial;
  trivial.det_trivial = trivial.symmetric = true;
  rows.push_back(search_row("abelian n = 2, r = 1, f = 1: survivors", stability::Setting::AbelianHilb2, one, "0"));
  rows.push_back(search_row("abelian n = 2, F = O_A: survivors", stability::Setting::AbelianHilb2, trivial, "1 (0,0,0,0)"));
  rows.push_back(search_row("abelian n = 3, r = 1, f = 1: survivors", stability::Setting::AbelianHilb3, one, "0"));
  rows.push_back(search_row("K_2(A), r = 1, f = 1: survivors", stability::Setting::GenKummer4, one, "0"));
  return rows;
}

std::vector<RowFn> errata_rows() {
  std::vector<RowFn> rows;
  for (int n = 2; n <= 5; ++n)
    rows.push_back([n] {
      return checked_row("regular coefficient, n = " + std::to_string(n),
                         str(lattice::printed_regular_coefficient(n)), str(lattice::regular_leading_coefficient(n)), B,
                         "regular intersection formula; checked against the even-ring oracle");
    });
  rows.push_back([] {
    return checked_row("s3^*H . l2 / H^2", "16", str(curve_test_counts().l2_s3), O, "test curve l2 on A^3");
  });
  rows.push_back([] {
    return checked_row("p23^*s^*H . l2 / H^2", "16", str(curve_test_counts().l2_p23), O, "test curve l2 on A^3");
  });
  rows.push_back([] {
    GradedDims ext = taut::taut_ext_dims({1, 2, 1}, {1, 0, 1}, taut::serre_flip({3, 1, 0}), {3, 1, 0}, 2);
    return checked_row("Ext^2(F^[2],F^[2]) for h = (3,1,0): ext^2 + h0^2 + h1^2", "11", std::to_string(ext.at(2)), F,
                       "Hom(F,F) (x) H^2(O) adds 1");
  });
  return rows;
}

std::vector<Row> run_rows(const std::vector<RowFn>& fns, unsigned workers) {
  std::vector<Row> out(fns.size());
  std::vector<std::string> errors(fns.size());
  auto job = [&](unsigned w) {
    for (std::size_t i = w; i < fns.size(); i += workers) {
      try {
        out[i] = fns[i]();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (workers <= 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < fns.size(); ++i)
    if (!errors[i].empty()) throw Error(ErrorCode::Internal, "verify row " + std::to_string(i + 1) + ": " + errors[i]);
  return out;
}

}  // namespace

Report cmd_verify(unsigned workers, const std::string& inject) {
  workers = stability::resolve_workers(workers);
  Report r;
  r.command = "verify";
  r.rows = run_rows(verify_rows(), workers);
  r.errata = run_rows(errata_rows(), workers);
  if (!inject.empty()) {
    bool found = false;
    for (auto& row : r.rows)
      if (row.label == inject) {
        row.expected = "<injected>";
        row.match = false;
        found = true;
      }
    if (!found) throw Error(ErrorCode::ConfigInvalid, "no verify row labelled '" + inject + "'");
  }
  return r;
}

}  // namespace hilbtaut::front
