#include "hilbtaut/oracle/ring.hpp"


#include "hilbtaut/error.hpp"

namespace hilbtaut::oracle {

RingElement::RingElement(RingPtr ring, Mono m, const Rat& c) : ring_(std::move(ring)) { add_term(m, c); }

void RingElement::add_term(Mono m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat RingElement::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> RingElement::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int e = ring_->degree(m);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

bool RingElement::is_mixed() const { return !terms_.empty() && !homogeneous_degree(); }

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!a.ring() || !b.ring() || a.ring()->name() != b.ring()->name()) {
    throw Error(ErrorCode::RingMismatch, "elements live on different rings (" +
                                             (a.ring() ? a.ring()->name() : "?") + " vs " +
                                             (b.ring() ? b.ring()->name() : "?") + ")");
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RingElement operator*(const Rat& c, const RingElement& x) {
  RingElement out(x.ring_);
  for (const auto& [m, v] : x.terms_) out.add_term(m, c * v);
  return out;
}

bool operator==(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return a.terms_ == b.terms_;
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")" + ring_->mono_str(m);
  }
  return s;
}

RingElement wedge(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  RingElement out(a.ring());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto p = a.ring()->multiply(ma, mb)) out.add_term(p->second, p->first * ca * cb);
  return out;
}

RingElement power(const RingElement& a, int k) {
  if (k < 0) throw Error(ErrorCode::IndexError, "negative power");
  RingElement out(a.ring(), 0, Rat(1));
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

Integral integrate(const RingElement& x) {
  if (x.is_zero()) return {Rat(0), false};
  auto d = x.homogeneous_degree();
  if (!d) throw Error(ErrorCode::DegreeMismatch, "cannot integrate a class of mixed degree");
  if (*d != x.ring()->top_degree()) return {Rat(0), true};
  return {x.coeff(x.ring()->top()), false};
}

}  // namespace hilbtaut::oracle
