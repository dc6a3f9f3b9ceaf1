#include "hilbtaut/exact/graded.hpp"

#include "hilbtaut/error.hpp"
#include "hilbtaut/exact/rat.hpp"

namespace hilbtaut::exact {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Internal, "dimension overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Internal, "dimension overflow");
  return out;
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::Internal, "dimension overflow");
  return z.get_si();
}

}  // namespace

GradedDims::GradedDims(std::initializer_list<std::int64_t> dims) : GradedDims(std::vector<std::int64_t>(dims)) {}

GradedDims::GradedDims(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  for (auto d : dims_)
    if (d < 0) throw Error(ErrorCode::ConfigInvalid, "negative dimension");
}

std::int64_t GradedDims::total() const {
  std::int64_t s = 0;
  for (auto d : dims_) s = checked_add(s, d);
  return s;
}

std::int64_t GradedDims::euler() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) s += (i % 2 ? -dims_[i] : dims_[i]);
  return s;
}

std::string GradedDims::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims_[i]);
  }
  return s + ")";
}

GradedDims graded_tensor(const GradedDims& u, const GradedDims& v) {
  if (u.size() == 0 || v.size() == 0) return {};
  std::vector<std::int64_t> out(u.size() + v.size() - 1, 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(u.dims()[i], v.dims()[j]));
  return GradedDims(std::move(out));
}

GradedDims graded_sum(const GradedDims& u, const GradedDims& v) {
  std::vector<std::int64_t> out(std::max(u.size(), v.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(u.at(i), v.at(i));
  return GradedDims(std::move(out));
}

GradedDims super_sym_power(const GradedDims& v, int k) {
  if (k < 0) throw Error(ErrorCode::IndexError, "negative symmetric power");
  if (k == 0) return GradedDims{1};
  if (v.size() == 0) return {};
  const std::size_t width = static_cast<std::size_t>(k) * (v.size() - 1) + 1;
  // acc[m][d]: coefficient of z^m t^d
  std::vector<std::vector<std::int64_t>> acc(k + 1, std::vector<std::int64_t>(width, 0));
  acc[0][0] = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t n = v.dims()[i];
    if (n == 0) continue;
    std::vector<std::int64_t> factor(k + 1, 0);  // z^m coefficient; carries t^{i m}
    for (int m = 0; m <= k; ++m)
      factor[m] = to_i64(i % 2 == 0 ? binomial(n + m - 1, m) : binomial(n, m));
    std::vector<std::vector<std::int64_t>> next(k + 1, std::vector<std::int64_t>(width, 0));
    for (int a = 0; a <= k; ++a)
      for (std::size_t d = 0; d < width; ++d) {
        if (acc[a][d] == 0) continue;
        for (int m = 0; a + m <= k; ++m) {
          if (factor[m] == 0) continue;
          std::size_t e = d + i * static_cast<std::size_t>(m);
          next[a + m][e] = checked_add(next[a + m][e], checked_mul(acc[a][d], factor[m]));
        }
      }
    acc = std::move(next);
  }
  return GradedDims(std::move(acc[k]));
}

}  // namespace hilbtaut::exact
