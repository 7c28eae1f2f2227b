#pragma once

// Expression syntax for elements of L(G):
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (('*' | '.') factor)*
//   factor  := '-' factor | primary '\''*
//   primary := INTEGER | NAME | '(' expr ')' | '[' expr ',' expr ']'
// A vertex or edge name denotes that generator, x' is the involution, and
// [x,y] is the commutator xy - yx. Integers denote multiples of 1.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lpa/leavitt.hpp"

namespace lpa {

class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(std::size_t position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  /// 0-based offset into the expression text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Element evaluate_expression(const LeavittAlgebra& algebra, std::string_view text);

}  // namespace lpa
