#include "hilbtaut/exact/npoly.hpp"

#include <algorithm>

namespace hilbtaut::exact {

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "LESS";
    case Cmp::EqualAtKnownOrder: return "EQUAL_AT_KNOWN_ORDER";
    case Cmp::Greater: return "GREATER";
    case Cmp::Indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

NPoly NPoly::exact(const Rat& c, int degree) {
  NPoly p;
  p.coeffs_[degree] = c;
  p.normalize();
  return p;
}

NPoly NPoly::leading(const Rat& c, int degree) {
  NPoly p = exact(c, degree);
  p.floor_ = degree;
  return p;
}

NPoly NPoly::unknown_below(int floor) {
  NPoly p;
  p.floor_ = floor;
  return p;
}

void NPoly::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero() || (floor_ && it->first < *floor_)) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

std::optional<Rat> NPoly::coeff(int d) const {
  if (floor_ && d < *floor_) return std::nullopt;
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

std::optional<int> NPoly::top_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

std::optional<int> NPoly::reach() const {
  auto top = top_degree();
  if (!floor_) return top;
  int tail = *floor_ - 1;
  return top ? std::max(*top, tail) : tail;
}

NPoly NPoly::scaled(const Rat& c) const {
  NPoly out = *this;
  for (auto& [d, v] : out.coeffs_) v *= c;
  out.normalize();
  return out;
}

NPoly NPoly::divided(const Rat& c) const { return scaled(c.inverse()); }

NPoly NPoly::truncate_leading() const {
  NPoly out;
  if (auto top = top_degree()) {
    if (floor_ && *floor_ > *top) return unknown_below(*floor_);
    out.coeffs_[*top] = coeffs_.at(*top);
    out.floor_ = *top;
    return out;
  }
  if (floor_) return unknown_below(*floor_);
  return out;
}

NPoly NPoly::with_floor(int f) const {
  NPoly out = *this;
  out.floor_ = floor_ ? std::max(*floor_, f) : f;
  out.normalize();
  return out;
}

NPoly operator+(const NPoly& p, const NPoly& q) {
  NPoly out = p;
  for (const auto& [d, v] : q.coeffs_) out.coeffs_[d] += v;
  if (p.floor_ && q.floor_) {
    out.floor_ = std::max(*p.floor_, *q.floor_);
  } else {
    out.floor_ = p.floor_ ? p.floor_ : q.floor_;
  }
  out.normalize();
  return out;
}

NPoly operator-(const NPoly& p, const NPoly& q) { return p + (-q); }

NPoly operator*(const NPoly& p, const NPoly& q) {
  NPoly out;
  for (const auto& [dp, vp] : p.coeffs_)
    for (const auto& [dq, vq] : q.coeffs_) out.coeffs_[dp + dq] += vp * vq;
  // The unknown tail of one factor, times anything the other factor may reach,
  // spoils every degree up to floor - 1 + reach.
  std::optional<int> f;
  auto spoil = [&](const NPoly& a, const NPoly& b) {
    if (!a.floor_) return;
    auto r = b.reach();
    if (!r) return;  // b is exactly zero
    int cand = *a.floor_ + *r;
    f = f ? std::max(*f, cand) : cand;
  };
  spoil(p, q);
  spoil(q, p);
  out.floor_ = f;
  out.normalize();
  return out;
}

std::string NPoly::str() const {
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, v] = *it;
    Rat mag = v.sign() < 0 ? -v : v;
    if (s.empty()) {
      if (v.sign() < 0) s += "-";
    } else {
      s += v.sign() < 0 ? " - " : " + ";
    }
    std::string m = mag.str();
    if (d == 0) {
      s += m;
    } else {
      if (mag != Rat(1)) s += (mag.is_integer() ? m : "(" + m + ")");
      s += "N";
      if (d != 1) s += "^" + std::to_string(d);
    }
  }
  if (floor_) {
    int e = *floor_ - 1;
    std::string o = e == 0 ? "O(1)" : (e == 1 ? "O(N)" : "O(N^" + std::to_string(e) + ")");
    s += s.empty() ? "0 + " + o : " + " + o;
  } else if (s.empty()) {
    s = "0";
  }
  return s;
}

Cmp compare_leading(const NPoly& p, const NPoly& q) {
  NPoly d = p - q;
  if (auto top = d.top_degree()) {
    const Rat& c = d.terms().at(*top);
    return c.sign() > 0 ? Cmp::Greater : Cmp::Less;
  }
  return d.is_exact() ? Cmp::EqualAtKnownOrder : Cmp::Indeterminate;
}

}  // namespace hilbtaut::exact
