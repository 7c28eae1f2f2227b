#include "lpa/expression.hpp"

#include <cctype>

namespace lpa {

namespace {

class Parser {
 public:
  Parser(const LeavittAlgebra& alg, std::string_view text) : alg_(alg), text_(text) {}

  Element parse() {
    Element e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError(pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
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

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  Element expr() {
    Element acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element acc = factor();
    while (accept('*') || accept('.')) {
      acc = alg_.multiply(acc, factor());
    }
    return acc;
  }

  Element factor() {
    if (accept('-')) {
      return -factor();
    }
    Element e = primary();
    while (accept('\'')) {
      e = alg_.star(e);
    }
    return e;
  }

  Element primary() {
    skip_space();
    if (pos_ >= text_.size()) {
      fail("unexpected end of expression");
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      Element a = expr();
      expect(',');
      Element b = expr();
      expect(']');
      return alg_.commutator(a, b);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return alg_.identity().scaled(Scalar::from_integer(alg_.field(), n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      const Graph& g = alg_.graph();
      if (auto v = g.find_vertex(name)) {
        return alg_.vertex(*v);
      }
      if (auto e = g.find_edge(name)) {
        return alg_.edge(*e);
      }
      pos_ = start;
      fail("unknown name \"" + std::string(name) + "\"");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const LeavittAlgebra& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element evaluate_expression(const LeavittAlgebra& algebra, std::string_view text) {
  return Parser(algebra, text).parse();
}

}  // namespace lpa
