#pragma once

#include <vector>

#include "hilbtaut/oracle/ring.hpp"

namespace hilbtaut::oracle {

// Even truncated model of H^*(X^n) for a regular surface X restricted to the
// algebraic part: per factor 1, NS basis classes e_a, and the point class.
class EvenModel : public RingModel {
 public:
  EvenModel(int factors, std::vector<std::vector<Rat>> gram);
  int factors() const { return n_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<Rat>>& gram() const { return gram_; }

  std::string name() const override;
  int top_degree() const override { return 4 * n_; }
  Mono top() const override;
  int degree(Mono m) const override;
  std::optional<std::pair<Rat, Mono>> multiply(Mono a, Mono b) const override;
  std::string mono_str(Mono m) const override;

  static constexpr int kPointCode = 15;
  static int code(Mono m, int factor) { return static_cast<int>(m >> (4 * factor) & 0xF); }

 private:
  int n_;
  std::vector<std::vector<Rat>> gram_;
};

std::shared_ptr<const EvenModel> even_ring(int factors, const std::vector<std::vector<Rat>>& gram);

// Projection X^domain -> X^codomain; placement[c] is the 1-based domain factor for codomain factor c.
struct EvenMap {
  int domain = 0;
  std::vector<int> placement;
  std::string label;

  static EvenMap projection(int n, int i);
  static EvenMap pair_projection(int n, int j, int l);
};

RingElement pullback(const EvenMap& f, const RingElement& x);

// sum_i pi_i^* (sum_a x_a e_a)
RingElement even_boxsum(const std::shared_ptr<const EvenModel>& ring, const std::vector<Rat>& coords);
RingElement even_point(const std::shared_ptr<const EvenModel>& ring);

enum class Normalization { Raw, SymmetricProduct };

// Product of the box-sums of the given NS classes, integrated over X^n; with
// SymmetricProduct the result is divided by n!.
Rat even_intersection(const std::shared_ptr<const EvenModel>& ring, const std::vector<std::vector<Rat>>& classes,
                      Normalization mode);

}  // namespace hilbtaut::oracle
