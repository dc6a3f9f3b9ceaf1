#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hilbtaut/oracle/ring.hpp"

namespace hilbtaut::oracle {

// expr  := "int(" wedge ")" | wedge
// wedge := atom { "." atom }
// atom  := map "^" atom | class | "(" wedge ")"
// map   := s | s3 | iota | p1 | p2 | p3 | p12 | p13 | p23
// class := H | HM | pt | Delta(i,j)
struct ExprNode {
  enum class Kind { Integral, Wedge, Pull, Class, Group };
  Kind kind = Kind::Class;
  std::string name;  // map or class name
  int i = 0, j = 0;  // Delta indices
  std::size_t pos = 0;
  std::vector<ExprNode> kids;

  friend bool operator==(const ExprNode& a, const ExprNode& b) {
    return a.kind == b.kind && a.name == b.name && a.i == b.i && a.j == b.j && a.kids == b.kids;
  }
};

ExprNode parse_class_expr(std::string_view src);
std::string print_class_expr(const ExprNode& node);

// "A1".."A3" (also "A"), or "Xn:n,g11,g12,..." with a square gram matrix; H is the first basis class.
RingPtr parse_ring(std::string_view text);

struct EvalResult {
  bool is_number = false;
  Rat value;
  RingElement element;
  bool warn_not_top = false;
};

EvalResult eval_class_expr(const ExprNode& node, const RingPtr& ring);
EvalResult eval_class_expr(std::string_view src, std::string_view ring);

}  // namespace hilbtaut::oracle
