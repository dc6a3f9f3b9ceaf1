#include "hilbtaut/oracle/expr.hpp"

#include <cctype>
#include <cmath>

#include "hilbtaut/error.hpp"
#include "hilbtaut/oracle/even.hpp"
#include "hilbtaut/oracle/torus.hpp"

namespace hilbtaut::oracle {

namespace {

const std::vector<std::string> kMaps = {"s", "s3", "iota", "p1", "p2", "p3", "p12", "p13", "p23"};
const std::vector<std::string> kClasses = {"H", "HM", "pt", "Delta"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  for (const auto& x : v)
    if (x == s) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprNode parse() {
    skip();
    ExprNode out;
    std::size_t save = at_;
    if (ident_ahead() == "int") {
      std::size_t start = at_;
      at_ += 3;
      skip();
      if (peek() == '(') {
        ++at_;
        out.kind = ExprNode::Kind::Integral;
        out.pos = start;
        out.kids.push_back(wedge());
        expect(')');
      } else {
        throw SyntaxError(at_, "expected '(' after int");
      }
    } else {
      at_ = save;
      out = wedge();
    }
    skip();
    if (at_ != src_.size()) throw SyntaxError(at_, std::string("unexpected '") + src_[at_] + "'");
    return out;
  }

 private:
  void skip() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) ++at_;
  }
  char peek() {
    skip();
    return at_ < src_.size() ? src_[at_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) {
      if (at_ >= src_.size()) throw SyntaxError(at_, std::string("expected '") + c + "' before end of input");
      throw SyntaxError(at_, std::string("expected '") + c + "', found '" + src_[at_] + "'");
    }
    ++at_;
  }
  std::string ident_ahead() {
    skip();
    std::size_t e = at_;
    if (e < src_.size() && std::isalpha(static_cast<unsigned char>(src_[e]))) {
      while (e < src_.size() && std::isalnum(static_cast<unsigned char>(src_[e]))) ++e;
    }
    return std::string(src_.substr(at_, e - at_));
  }
  int integer() {
    skip();
    std::size_t s = at_;
    while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) ++at_;
    if (s == at_ || at_ - s > 6) throw SyntaxError(s, "expected a factor index");
    return std::stoi(std::string(src_.substr(s, at_ - s)));
  }

  ExprNode wedge() {
    ExprNode w;
    w.kind = ExprNode::Kind::Wedge;
    skip();
    w.pos = at_;
    w.kids.push_back(atom());
    while (peek() == '.') {
      ++at_;
      w.kids.push_back(atom());
    }
    return w;
  }

  ExprNode atom() {
    skip();
    ExprNode a;
    a.pos = at_;
    if (peek() == '(') {
      ++at_;
      a.kind = ExprNode::Kind::Group;
      a.kids.push_back(wedge());
      expect(')');
      return a;
    }
    std::string id = ident_ahead();
    if (id.empty()) {
      if (at_ >= src_.size()) throw SyntaxError(at_, "unexpected end of input");
      throw SyntaxError(at_, std::string("unexpected '") + src_[at_] + "'");
    }
    at_ += id.size();
    if (peek() == '^') {
      if (!contains(kMaps, id)) throw Error(ErrorCode::UnknownSymbol, "unknown map '" + id + "' at position " + std::to_string(a.pos));
      ++at_;
      a.kind = ExprNode::Kind::Pull;
      a.name = id;
      a.kids.push_back(atom());
      return a;
    }
    if (!contains(kClasses, id)) throw Error(ErrorCode::UnknownSymbol, "unknown class '" + id + "' at position " + std::to_string(a.pos));
    a.kind = ExprNode::Kind::Class;
    a.name = id;
    if (id == "Delta") {
      expect('(');
      a.i = integer();
      expect(',');
      a.j = integer();
      expect(')');
    }
    return a;
  }

  std::string_view src_;
  std::size_t at_ = 0;
};

struct Target {
  RingPtr ring;
  std::optional<TorusMap> tmap;
  std::optional<EvenMap> emap;
};

int digit(const std::string& s, std::size_t k) { return s[k] - '0'; }

Target resolve_map(const ExprNode& node, const RingPtr& ring) {
  const std::string& m = node.name;
  auto at = " at position " + std::to_string(node.pos);
  if (auto t = std::dynamic_pointer_cast<const TorusModel>(ring)) {
    int k = t->factors();
    if (m == "s") {
      if (k != 2) throw Error(ErrorCode::RingMismatch, "s is the group law on A2, current ring is " + ring->name() + at);
      return {torus(1), TorusMap::sum(), {}};
    }
    if (m == "s3") {
      if (k != 3) throw Error(ErrorCode::RingMismatch, "s3 is the group law on A3, current ring is " + ring->name() + at);
      return {torus(1), TorusMap::sum3(), {}};
    }
    if (m == "iota") return {ring, TorusMap::inverse(k), {}};
    if (m.size() == 2) return {torus(1), TorusMap::projection(k, digit(m, 1)), {}};
    return {torus(2), TorusMap::pair_projection(k, digit(m, 1), digit(m, 2)), {}};
  }
  auto e = std::dynamic_pointer_cast<const EvenModel>(ring);
  if (m.size() == 2 && m[0] == 'p')
    return {even_ring(1, e->gram()), {}, EvenMap::projection(e->factors(), digit(m, 1))};
  if (m.size() == 3 && m[0] == 'p')
    return {even_ring(2, e->gram()), {}, EvenMap::pair_projection(e->factors(), digit(m, 1), digit(m, 2))};
  throw Error(ErrorCode::UnknownSymbol, "map '" + m + "' is not available on " + ring->name() + at);
}

RingElement eval_class(const ExprNode& node, const RingPtr& ring) {
  auto at = " at position " + std::to_string(node.pos);
  if (auto t = std::dynamic_pointer_cast<const TorusModel>(ring)) {
    int k = t->factors();
    if (node.name == "H") return polarization(k);
    if (node.name == "pt") return point_class(k);
    if (node.name == "HM") {
      if (k < 2) throw Error(ErrorCode::UnknownSymbol, "HM needs A2 or A3" + at);
      return mumford_class(k);
    }
    return diagonal_class(k, node.i, node.j);
  }
  auto e = std::dynamic_pointer_cast<const EvenModel>(ring);
  if (node.name == "H") {
    std::vector<Rat> h(e->rank(), Rat(0));
    h[0] = 1;
    return even_boxsum(e, h);
  }
  if (node.name == "pt") return even_point(e);
  throw Error(ErrorCode::UnknownSymbol, "class '" + node.name + "' is not available on " + ring->name() + at);
}

RingElement eval_element(const ExprNode& node, const RingPtr& ring) {
  switch (node.kind) {
    case ExprNode::Kind::Wedge: {
      RingElement acc = eval_element(node.kids[0], ring);
      for (std::size_t i = 1; i < node.kids.size(); ++i) acc = wedge(acc, eval_element(node.kids[i], ring));
      return acc;
    }
    case ExprNode::Kind::Group: return eval_element(node.kids[0], ring);
    case ExprNode::Kind::Class: return eval_class(node, ring);
    case ExprNode::Kind::Pull: {
      Target t = resolve_map(node, ring);
      RingElement inner = eval_element(node.kids[0], t.ring);
      return t.tmap ? pullback(*t.tmap, inner) : pullback(*t.emap, inner);
    }
    case ExprNode::Kind::Integral: break;
  }
  throw SyntaxError(node.pos, "int(...) may only appear at top level");
}

}  // namespace

ExprNode parse_class_expr(std::string_view src) { return Parser(src).parse(); }

std::string print_class_expr(const ExprNode& node) {
  switch (node.kind) {
    case ExprNode::Kind::Integral: return "int(" + print_class_expr(node.kids[0]) + ")";
    case ExprNode::Kind::Wedge: {
      std::string s;
      for (const auto& k : node.kids) s += (s.empty() ? "" : " . ") + print_class_expr(k);
      return s;
    }
    case ExprNode::Kind::Group: return "(" + print_class_expr(node.kids[0]) + ")";
    case ExprNode::Kind::Pull: return node.name + "^" + print_class_expr(node.kids[0]);
    case ExprNode::Kind::Class:
      if (node.name == "Delta") return "Delta(" + std::to_string(node.i) + "," + std::to_string(node.j) + ")";
      return node.name;
  }
  return "";
}

RingPtr parse_ring(std::string_view text) {
  std::string s(text);
  if (s == "A" || s == "A1") return torus(1);
  if (s == "A2") return torus(2);
  if (s == "A3") return torus(3);
  if (s.rfind("Xn:", 0) == 0) {
    std::vector<Rat> nums;
    std::size_t p = 3;
    while (p <= s.size()) {
      std::size_t q = s.find(',', p);
      if (q == std::string::npos) q = s.size();
      try {
        nums.push_back(Rat::parse(s.substr(p, q - p)));
      } catch (const Error&) {
        throw Error(ErrorCode::ConfigInvalid, "bad ring entry '" + s.substr(p, q - p) + "' in '" + s + "'");
      }
      p = q + 1;
    }
    if (nums.size() < 2 || !nums[0].is_integer())
      throw Error(ErrorCode::ConfigInvalid, "ring '" + s + "' needs Xn:n,gram...");
    long n = nums[0].to_int64();
    std::size_t entries = nums.size() - 1;
    auto rho = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(entries))));
    if (rho * rho != entries) throw Error(ErrorCode::ConfigInvalid, "gram in '" + s + "' is not square");
    std::vector<std::vector<Rat>> gram(rho, std::vector<Rat>(rho));
    for (std::size_t i = 0; i < entries; ++i) gram[i / rho][i % rho] = nums[1 + i];
    if (n < 1 || n > 15) throw Error(ErrorCode::ConfigInvalid, "ring '" + s + "': n must be 1..15");
    if (gram[0][0].sign() <= 0) throw Error(ErrorCode::ConfigInvalid, "ring '" + s + "': H^2 must be positive");
    return even_ring(static_cast<int>(n), gram);
  }
  throw Error(ErrorCode::ConfigInvalid, "unknown ring '" + s + "' (expected A2, A3 or Xn:n,gram...)");
}

EvalResult eval_class_expr(const ExprNode& node, const RingPtr& ring) {
  EvalResult out;
  if (node.kind == ExprNode::Kind::Integral) {
    Integral v = integrate(eval_element(node.kids[0], ring));
    out.is_number = true;
    out.value = v.value;
    out.warn_not_top = v.warn_not_top;
    return out;
  }
  out.element = eval_element(node, ring);
  return out;
}

EvalResult eval_class_expr(std::string_view src, std::string_view ring) {
  return eval_class_expr(parse_class_expr(src), parse_ring(ring));
}

}  // namespace hilbtaut::oracle
