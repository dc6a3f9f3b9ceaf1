#include "hilbtaut/oracle/torus.hpp"

#include <array>
#include <bit>
#include <mutex>

#include "hilbtaut/error.hpp"

namespace hilbtaut::oracle {

namespace {

constexpr int kGens = 4;

void check_factors(int k) {
  if (k < 1 || k > 3) throw Error(ErrorCode::IndexError, "torus power must be 1..3, got " + std::to_string(k));
}

void check_index(int k, int i) {
  if (i < 1 || i > k)
    throw Error(ErrorCode::IndexError, "factor index " + std::to_string(i) + " out of range for A" + std::to_string(k));
}

TorusMap blank(TorusMap::Kind kind, int domain, int codomain, std::string label) {
  TorusMap f{kind, domain, codomain, {}, std::move(label)};
  f.image.assign(kGens * codomain, std::vector<long>(kGens * domain, 0));
  return f;
}

}  // namespace

TorusModel::TorusModel(int factors) : k_(factors) { check_factors(factors); }

int TorusModel::degree(Mono m) const { return std::popcount(m); }

std::optional<std::pair<Rat, Mono>> TorusModel::multiply(Mono a, Mono b) const {
  if (a & b) return std::nullopt;
  // sign of sorting a.b: one transposition per (i in a, j in b, j < i)
  int swaps = 0;
  for (Mono rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return std::make_pair(Rat(swaps % 2 ? -1 : 1), a | b);
}

std::string TorusModel::mono_str(Mono m) const {
  if (m == 0) return "1";
  std::string s;
  for (int i = 0; i < 4 * k_; ++i)
    if (m >> i & 1) s += "g" + std::to_string(i + 1);
  return s;
}

std::shared_ptr<const TorusModel> torus(int k) {
  check_factors(k);
  static const std::array<std::shared_ptr<const TorusModel>, 3> models = {
      std::make_shared<TorusModel>(1), std::make_shared<TorusModel>(2), std::make_shared<TorusModel>(3)};
  return models[k - 1];
}

TorusMap TorusMap::projection(int k, int i) {
  check_factors(k);
  check_index(k, i);
  TorusMap f = blank(Kind::Projection, k, 1, "p" + std::to_string(i));
  for (int a = 0; a < kGens; ++a) f.image[a][kGens * (i - 1) + a] = 1;
  return f;
}

TorusMap TorusMap::pair_projection(int k, int j, int l) {
  check_factors(k);
  check_index(k, j);
  check_index(k, l);
  if (j == l) throw Error(ErrorCode::IndexError, "pair projection needs distinct factors");
  TorusMap f = blank(Kind::PairProjection, k, 2, "p" + std::to_string(j) + std::to_string(l));
  for (int a = 0; a < kGens; ++a) {
    f.image[a][kGens * (j - 1) + a] = 1;
    f.image[kGens + a][kGens * (l - 1) + a] = 1;
  }
  return f;
}

TorusMap TorusMap::sum() {
  TorusMap f = blank(Kind::Sum, 2, 1, "s");
  for (int a = 0; a < kGens; ++a) f.image[a][a] = f.image[a][kGens + a] = 1;
  return f;
}

TorusMap TorusMap::sum3() {
  TorusMap f = blank(Kind::Sum3, 3, 1, "s3");
  for (int a = 0; a < kGens; ++a) f.image[a][a] = f.image[a][kGens + a] = f.image[a][2 * kGens + a] = 1;
  return f;
}

TorusMap TorusMap::inverse(int k) {
  check_factors(k);
  TorusMap f = blank(Kind::Inverse, k, k, "iota");
  for (int c = 0; c < kGens * k; ++c) f.image[c][c] = -1;
  return f;
}

TorusMap TorusMap::diagonal(int k, int j, int l) {
  check_factors(k);
  if (k < 2) throw Error(ErrorCode::IndexError, "diagonal embedding needs at least two factors");
  check_index(k, j);
  check_index(k, l);
  if (j == l) throw Error(ErrorCode::IndexError, "diagonal embedding needs distinct factors");
  TorusMap f = blank(Kind::Diagonal, k - 1, k, "delta" + std::to_string(j) + std::to_string(l));
  auto slot = [&](int c) { return c < l ? c : c - 1; };  // codomain factor -> domain factor
  for (int c = 1; c <= k; ++c) {
    int src = c == l ? slot(j) : slot(c);
    for (int a = 0; a < kGens; ++a) f.image[kGens * (c - 1) + a][kGens * (src - 1) + a] = 1;
  }
  return f;
}

TorusMap TorusMap::multiply(int k, long m) {
  check_factors(k);
  TorusMap f = blank(Kind::Multiply, k, k, "times" + std::to_string(m));
  for (int c = 0; c < kGens * k; ++c) f.image[c][c] = m;
  return f;
}

RingElement pullback(const TorusMap& f, const RingElement& x) {
  auto codomain = torus(f.codomain);
  if (!x.ring() || x.ring()->name() != codomain->name())
    throw Error(ErrorCode::RingMismatch, "map " + f.label + " expects a class on " + codomain->name() +
                                             ", got " + (x.ring() ? x.ring()->name() : "?"));
  auto domain = torus(f.domain);
  std::vector<RingElement> images;
  for (const auto& row : f.image) {
    RingElement g(domain);
    for (std::size_t d = 0; d < row.size(); ++d) g.add_term(Mono{1} << d, Rat(row[d]));
    images.push_back(std::move(g));
  }
  RingElement out(domain);
  for (const auto& [m, c] : x.terms()) {
    RingElement prod(domain, 0, c);
    for (Mono rest = m; rest; rest &= rest - 1) prod = wedge(prod, images[std::countr_zero(rest)]);
    out += prod;
  }
  return out;
}

RingElement torus_generator(int k, int index) {
  if (index < 0 || index >= kGens * k) throw Error(ErrorCode::IndexError, "generator index out of range");
  return RingElement(torus(k), Mono{1} << index);
}

RingElement polarization(int k) {
  RingElement h1(torus(1));
  h1.add_term(0b0011, Rat(1));
  h1.add_term(0b1100, Rat(1));
  if (k == 1) return h1;
  RingElement out(torus(k));
  for (int i = 1; i <= k; ++i) out += pullback(TorusMap::projection(k, i), h1);
  return out;
}

RingElement point_class(int k) {
  auto r = torus(k);
  return RingElement(r, r->top());
}

RingElement mumford_class(int k) {
  if (k == 2) return pullback(TorusMap::sum(), polarization(1)) - polarization(2);
  if (k == 3) return pullback(TorusMap::sum3(), polarization(1)) - polarization(3);
  throw Error(ErrorCode::UnknownSymbol, "HM is defined on A2 and A3 only");
}

RingElement diagonal_class(int k, int j, int l) {
  check_factors(k);
  check_index(k, j);
  check_index(k, l);
  if (j == l) throw Error(ErrorCode::IndexError, "diagonal class needs distinct factors");
  // On A x A: Delta = sum_K c_K e_K (x) e_{K^c}, c_K fixed by int Delta.(e_{K^c} (x) e_K) = int e_{K^c} e_K.
  auto a = torus(1);
  auto pr1 = TorusMap::projection(2, 1), pr2 = TorusMap::projection(2, 2);
  RingElement delta(torus(2));
  const Mono full = a->top();
  for (Mono K = 0; K <= full; ++K) {
    Mono Kc = full & ~K;
    RingElement eK(a, K), eKc(a, Kc);
    RingElement cand = wedge(pullback(pr1, eK), pullback(pr2, eKc));
    RingElement test = wedge(pullback(pr1, eKc), pullback(pr2, eK));
    Rat pair = integrate(wedge(cand, test)).value;
    Rat want = integrate(wedge(eKc, eK)).value;
    delta += (want / pair) * cand;
  }
  if (k == 2 && j == 1 && l == 2) return delta;
  return pullback(TorusMap::pair_projection(k, j, l), delta);
}

}  // namespace hilbtaut::oracle
