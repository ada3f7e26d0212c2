#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "zigzag/wpoly.hpp"

namespace zigzag {

// Integer-coefficient polynomial in the level index n and the modulus m,
// written as text, e.g. "2*n-1", "n^2*m", "(n+1)*(2*n+1)*m - 3".
//
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | 'n' | 'm' | '(' expr ')'
//
// Whitespace is ignored. Parse errors throw std::invalid_argument naming
// the offending column.
class CoeffExpr {
 public:
  static CoeffExpr parse(std::string_view text);

  // Value at level n as a polynomial in m.
  WPoly eval(long n) const;

  const std::string& source() const { return source_; }

  struct Node;

 private:
  CoeffExpr(std::string source, std::shared_ptr<const Node> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  std::shared_ptr<const Node> root_;
};

}  // namespace zigzag
