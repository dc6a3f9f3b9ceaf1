#pragma once

#include <string>
#include <vector>

#include "hilbtaut/oracle/ring.hpp"

namespace hilbtaut::oracle {

// Exterior-algebra model of H^*(A^k) for A = E x E', four degree-one
// generators per factor. Monomials are bitmasks over the 4k generators.
class TorusModel : public RingModel {
 public:
  explicit TorusModel(int factors);
  int factors() const { return k_; }
  std::string name() const override { return "A" + std::to_string(k_); }
  int top_degree() const override { return 4 * k_; }
  Mono top() const override { return (Mono{1} << (4 * k_)) - 1; }
  int degree(Mono m) const override;
  std::optional<std::pair<Rat, Mono>> multiply(Mono a, Mono b) const override;
  std::string mono_str(Mono m) const override;

 private:
  int k_;
};

// Shared instance for 1 <= k <= 3.
std::shared_ptr<const TorusModel> torus(int k);

// Map A^domain -> A^codomain, described by its action on degree-one generators.
struct TorusMap {
  enum class Kind { Projection, PairProjection, Sum, Sum3, Inverse, Diagonal, Multiply };
  Kind kind;
  int domain = 0;
  int codomain = 0;
  // image[c] = coefficients over the 4*domain domain generators for codomain generator c.
  std::vector<std::vector<long>> image;
  std::string label;

  static TorusMap projection(int k, int i);
  static TorusMap pair_projection(int k, int j, int l);
  static TorusMap sum();
  static TorusMap sum3();
  static TorusMap inverse(int k);
  // A^{k-1} -> A^k repeating factor j in slot l (1-based, codomain indices).
  static TorusMap diagonal(int k, int j, int l);
  static TorusMap multiply(int k, long m);
};

RingElement pullback(const TorusMap& f, const RingElement& x);

// Named classes.
RingElement torus_generator(int k, int index);  // index in [0, 4k)
RingElement polarization(int k);                 // H^{(+)k}; on A this is g1g2 + g3g4
RingElement point_class(int k);
RingElement mumford_class(int k);                // k = 2: s^H - H(+)2; k = 3: s3^H - H(+)3
RingElement diagonal_class(int k, int j, int l);

}  // namespace hilbtaut::oracle
