#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hilbtaut::exact {

// Dimensions of a graded super vector space; index = cohomological degree,
// odd index = odd part.
class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(std::initializer_list<std::int64_t> dims);
  explicit GradedDims(std::vector<std::int64_t> dims);

  const std::vector<std::int64_t>& dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  // Zero outside the stored range.
  std::int64_t at(std::size_t degree) const { return degree < dims_.size() ? dims_[degree] : 0; }
  std::int64_t total() const;
  std::int64_t euler() const;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

  std::string str() const;

 private:
  std::vector<std::int64_t> dims_;
};

GradedDims graded_tensor(const GradedDims& u, const GradedDims& v);
GradedDims graded_sum(const GradedDims& u, const GradedDims& v);
// z^k coefficient of prod_{i even} (1 - t^i z)^{-v_i} * prod_{i odd} (1 + t^i z)^{v_i}.
GradedDims super_sym_power(const GradedDims& v, int k);

}  // namespace hilbtaut::exact
