#include "zigzag/coeff_expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace zigzag {

struct CoeffExpr::Node {
  enum class Kind { integer, var_n, var_m, add, sub, mul, neg, pow };
  Kind kind;
  BigInt value;          // integer literal
  unsigned long exponent = 0;  // pow
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = CoeffExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind k, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("coefficient expression '" + std::string(text_) +
                                "': " + what + " at column " +
                                std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Node::Kind::add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Node::Kind::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (accept('*')) lhs = make(Node::Kind::mul, lhs, unary());
    return lhs;
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::neg, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 3) fail("exponent too large");
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::pow;
      n->exponent = std::stoul(e);
      n->lhs = std::move(base);
      return n;
    }
    return base;
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'n') {
      ++pos_;
      return make(Node::Kind::var_n);
    }
    if (c == 'm') {
      ++pos_;
      return make(Node::Kind::var_m);
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::integer;
      n->value = BigInt(digits());
      return n;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

WPoly eval_node(const Node& node, long n) {
  switch (node.kind) {
    case Node::Kind::integer:
      return WPoly::constant(Rat(node.value));
    case Node::Kind::var_n:
      return WPoly::constant(Rat(n));
    case Node::Kind::var_m:
      return WPoly::variable();
    case Node::Kind::add:
      return eval_node(*node.lhs, n) + eval_node(*node.rhs, n);
    case Node::Kind::sub:
      return eval_node(*node.lhs, n) - eval_node(*node.rhs, n);
    case Node::Kind::mul:
      return eval_node(*node.lhs, n) * eval_node(*node.rhs, n);
    case Node::Kind::neg:
      return -eval_node(*node.lhs, n);
    case Node::Kind::pow: {
      const WPoly base = eval_node(*node.lhs, n);
      WPoly acc{1};
      for (unsigned long i = 0; i < node.exponent; ++i) acc *= base;
      return acc;
    }
  }
  return {};
}

}  // namespace

CoeffExpr CoeffExpr::parse(std::string_view text) {
  NodePtr root = Parser(text).parse();
  return CoeffExpr(std::string(text), std::move(root));
}

WPoly CoeffExpr::eval(long n) const { return eval_node(*root_, n); }

}  // namespace zigzag
