#include "doctest.h"
#include "lpa/expression.hpp"
#include "support.hpp"

using namespace lpa;
using test::graph;

namespace {

std::string eval(const char* g, const char* expr) {
  LeavittAlgebra alg(graph(g), FieldSpec::rational());
  return alg.render(evaluate_expression(alg, expr));
}

std::size_t error_at(const char* g, const char* expr) {
  LeavittAlgebra alg(graph(g), FieldSpec::rational());
  try {
    evaluate_expression(alg, expr);
  } catch (const ExpressionError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("evaluation examples") {
  CHECK(eval(test::kToe, "[c',c] - [e,e']") == "w");
  CHECK(eval(test::kToe, "e'*e") == "w");
  CHECK(eval(test::kR2, "u - g*g' - h*h'") == "0");
  CHECK(eval(test::kToe, "[e',e]") == "w - e.e'");
  CHECK(eval(test::kToe, "e.e'.e") == "e");
  CHECK(eval(test::kToe, "e''") == "e");
  CHECK(eval(test::kR2, "-(g*h')'") == "-h.g'");
  CHECK(eval(test::kR2, "2*u - 2") == "0");
  CHECK(eval(test::kToe, "e*c") == "0");
}

TEST_CASE("prime field rendering") {
  LeavittAlgebra alg(graph(test::kR2), FieldSpec::prime(3));
  CHECK(alg.render(evaluate_expression(alg, "2*g")) == "-g");
  CHECK(alg.render(evaluate_expression(alg, "3*g")) == "0");
}

TEST_CASE("expression errors report a position") {
  CHECK(error_at(test::kToe, "v + x") == 4);
  CHECK(error_at(test::kToe, "v +") == 3);
  CHECK(error_at(test::kToe, "[v, w") == 5);
  CHECK(error_at(test::kToe, "(v") == 2);
  CHECK(error_at(test::kToe, "v $ w") == 2);
  CHECK(error_at(test::kToe, "") == 0);
  CHECK(error_at(test::kToe, "v w") == 2);
}
