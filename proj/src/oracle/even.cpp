#include "hilbtaut/oracle/even.hpp"

#include <map>
#include <mutex>

#include "hilbtaut/error.hpp"

namespace hilbtaut::oracle {

EvenModel::EvenModel(int factors, std::vector<std::vector<Rat>> gram) : n_(factors), gram_(std::move(gram)) {
  if (n_ < 1 || n_ > 15) throw Error(ErrorCode::IndexError, "even ring supports 1..15 factors");
  if (gram_.empty() || gram_.size() > 14) throw Error(ErrorCode::ShapeMismatch, "NS rank must be 1..14");
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != gram_.size()) throw Error(ErrorCode::ShapeMismatch, "gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw Error(ErrorCode::ShapeMismatch, "gram matrix is not symmetric");
  }
}

std::string EvenModel::name() const {
  std::string s = "Xn:" + std::to_string(n_);
  for (const auto& row : gram_)
    for (const auto& v : row) s += "," + v.str();
  return s;
}

Mono EvenModel::top() const {
  Mono m = 0;
  for (int f = 0; f < n_; ++f) m |= Mono{kPointCode} << (4 * f);
  return m;
}

int EvenModel::degree(Mono m) const {
  int d = 0;
  for (int f = 0; f < n_; ++f) {
    int c = code(m, f);
    d += c == 0 ? 0 : (c == kPointCode ? 4 : 2);
  }
  return d;
}

std::optional<std::pair<Rat, Mono>> EvenModel::multiply(Mono a, Mono b) const {
  Rat coeff(1);
  Mono out = 0;
  for (int f = 0; f < n_; ++f) {
    int ca = code(a, f), cb = code(b, f), cc;
    if (ca == 0) {
      cc = cb;
    } else if (cb == 0) {
      cc = ca;
    } else if (ca != kPointCode && cb != kPointCode) {
      coeff *= gram_[ca - 1][cb - 1];
      if (coeff.is_zero()) return std::nullopt;
      cc = kPointCode;
    } else {
      return std::nullopt;
    }
    out |= Mono(cc) << (4 * f);
  }
  return std::make_pair(coeff, out);
}

std::string EvenModel::mono_str(Mono m) const {
  std::string s;
  for (int f = 0; f < n_; ++f) {
    int c = code(m, f);
    if (c == 0) continue;
    if (!s.empty()) s += "*";
    s += (c == kPointCode ? "pt" : "e" + std::to_string(c)) + "_" + std::to_string(f + 1);
  }
  return s.empty() ? "1" : s;
}

std::shared_ptr<const EvenModel> even_ring(int factors, const std::vector<std::vector<Rat>>& gram) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const EvenModel>> cache;
  auto model = std::make_shared<EvenModel>(factors, gram);
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace(model->name(), model);
  return it->second;
}

EvenMap EvenMap::projection(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::IndexError, "factor index out of range");
  return {n, {i}, "p" + std::to_string(i)};
}

EvenMap EvenMap::pair_projection(int n, int j, int l) {
  if (j < 1 || j > n || l < 1 || l > n || j == l) throw Error(ErrorCode::IndexError, "bad pair projection");
  return {n, {j, l}, "p" + std::to_string(j) + std::to_string(l)};
}

RingElement pullback(const EvenMap& f, const RingElement& x) {
  auto src = std::dynamic_pointer_cast<const EvenModel>(x.ring());
  if (!src || src->factors() != static_cast<int>(f.placement.size()))
    throw Error(ErrorCode::RingMismatch, "map " + f.label + " does not land on " + (x.ring() ? x.ring()->name() : "?"));
  auto dom = even_ring(f.domain, src->gram());
  RingElement out(dom);
  for (const auto& [m, c] : x.terms()) {
    Mono img = 0;
    for (std::size_t k = 0; k < f.placement.size(); ++k)
      img |= Mono(EvenModel::code(m, static_cast<int>(k))) << (4 * (f.placement[k] - 1));
    out.add_term(img, c);
  }
  return out;
}

RingElement even_boxsum(const std::shared_ptr<const EvenModel>& ring, const std::vector<Rat>& coords) {
  if (static_cast<int>(coords.size()) != ring->rank())
    throw Error(ErrorCode::ShapeMismatch, "class has " + std::to_string(coords.size()) + " coordinates, NS rank is " +
                                              std::to_string(ring->rank()));
  RingElement out(ring);
  for (int f = 0; f < ring->factors(); ++f)
    for (int a = 0; a < ring->rank(); ++a) out.add_term(Mono(a + 1) << (4 * f), coords[a]);
  return out;
}

RingElement even_point(const std::shared_ptr<const EvenModel>& ring) { return RingElement(ring, ring->top()); }

Rat even_intersection(const std::shared_ptr<const EvenModel>& ring, const std::vector<std::vector<Rat>>& classes,
                      Normalization mode) {
  if (2 * classes.size() != static_cast<std::size_t>(ring->top_degree()))
    throw Error(ErrorCode::DegreeMismatch, "need " + std::to_string(2 * ring->factors()) + " divisor classes, got " +
                                               std::to_string(classes.size()));
  RingElement prod(ring, 0, Rat(1));
  for (const auto& c : classes) prod = wedge(prod, even_boxsum(ring, c));
  Rat v = integrate(prod).value;
  if (mode == Normalization::SymmetricProduct) v /= Rat(exact::factorial(ring->factors()));
  return v;
}

}  // namespace hilbtaut::oracle
