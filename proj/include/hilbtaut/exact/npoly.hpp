#pragma once

#include <map>
#include <optional>
#include <string>

#include "hilbtaut/exact/rat.hpp"

namespace hilbtaut::exact {

enum class Cmp { Less, EqualAtKnownOrder, Greater, Indeterminate };

std::string to_string(Cmp c);

// Polynomial in N whose coefficients are only known from `floor` upwards.
// An absent floor means every coefficient is known (exact polynomial).
class NPoly {
 public:
  NPoly() = default;

  static NPoly exact(const Rat& c, int degree = 0);
  // c*N^degree with everything below `degree` unknown, i.e. c N^d + O(N^{d-1}).
  static NPoly leading(const Rat& c, int degree);
  static NPoly unknown_below(int floor);

  // Coefficient at degree d; nullopt if d lies below the floor.
  std::optional<Rat> coeff(int d) const;
  const std::map<int, Rat>& terms() const { return coeffs_; }
  std::optional<int> floor() const { return floor_; }
  bool is_exact() const { return !floor_.has_value(); }

  // Highest degree carrying a nonzero known coefficient.
  std::optional<int> top_degree() const;
  // Highest degree that may be nonzero, counting the unknown tail.
  std::optional<int> reach() const;

  NPoly scaled(const Rat& c) const;
  NPoly divided(const Rat& c) const;
  // Keeps only the highest known degree (or the floor if nothing is known).
  NPoly truncate_leading() const;
  NPoly with_floor(int f) const;

  friend NPoly operator+(const NPoly& p, const NPoly& q);
  friend NPoly operator-(const NPoly& p, const NPoly& q);
  friend NPoly operator*(const NPoly& p, const NPoly& q);
  NPoly operator-() const { return scaled(Rat(-1)); }
  friend bool operator==(const NPoly& p, const NPoly& q) {
    return p.floor_ == q.floor_ && p.coeffs_ == q.coeffs_;
  }

  std::string str() const;

 private:
  void normalize();

  std::map<int, Rat> coeffs_;
  std::optional<int> floor_;
};

Cmp compare_leading(const NPoly& p, const NPoly& q);

inline std::string to_string(const NPoly& p) { return p.str(); }

}  // namespace hilbtaut::exact
