#include "hilbtaut/exact/rat.hpp"

#include "hilbtaut/error.hpp"

namespace hilbtaut::exact {

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::Internal, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw Error(ErrorCode::ConfigInvalid, "not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::ConfigInvalid, "zero denominator in '" + s + "'");
  q.canonicalize();
  return Rat(q);
}

std::int64_t Rat::to_int64() const {
  if (!is_integer()) throw Error(ErrorCode::Internal, "not an integer: " + str());
  const mpz_class& n = v_.get_num();
  if (!n.fits_slong_p()) throw Error(ErrorCode::Internal, "integer overflow: " + str());
  return n.get_si();
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Internal, "division by zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::Internal, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string to_string(const Rat& r) { return r.str(); }

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return out;
}

}  // namespace hilbtaut::exact
