#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "hilbtaut/exact/rat.hpp"

namespace hilbtaut::oracle {

using exact::Rat;
using Mono = std::uint64_t;

// A finite graded-commutative ring with a monomial basis and a top class.
class RingModel {
 public:
  virtual ~RingModel() = default;
  virtual std::string name() const = 0;
  virtual int top_degree() const = 0;
  virtual Mono top() const = 0;
  virtual int degree(Mono m) const = 0;
  // Product of two basis monomials as coefficient * monomial; nullopt if zero.
  virtual std::optional<std::pair<Rat, Mono>> multiply(Mono a, Mono b) const = 0;
  virtual std::string mono_str(Mono m) const = 0;
};

using RingPtr = std::shared_ptr<const RingModel>;

class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {}
  RingElement(RingPtr ring, Mono m, const Rat& c = Rat(1));

  const RingPtr& ring() const { return ring_; }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Degree if all terms share it; nullopt for zero or mixed elements.
  std::optional<int> homogeneous_degree() const;
  bool is_mixed() const;

  void add_term(Mono m, const Rat& c);
  Rat coeff(Mono m) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const Rat& c, const RingElement& x);
  RingElement operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const RingElement& a, const RingElement& b);

  std::string str() const;

 private:
  RingPtr ring_;
  std::map<Mono, Rat> terms_;
};

void require_same_ring(const RingElement& a, const RingElement& b);

RingElement wedge(const RingElement& a, const RingElement& b);
RingElement power(const RingElement& a, int k);

struct Integral {
  Rat value;
  bool warn_not_top = false;  // homogeneous of non-top degree, value forced to 0
};

// Coefficient of the oriented top monomial. Mixed input is a DEGREE_MISMATCH.
Integral integrate(const RingElement& x);

}  // namespace hilbtaut::oracle
