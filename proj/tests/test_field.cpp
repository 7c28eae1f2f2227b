#include <random>

#include "doctest.h"
#include "lpa/field.hpp"
#include "support.hpp"

using namespace lpa;
using lpa::test::vec;

TEST_CASE("scalar examples") {
  auto q = FieldSpec::rational();
  CHECK(Scalar::parse(q, "1/2") + Scalar::parse(q, "1/3") == Scalar::parse(q, "5/6"));
  CHECK((Scalar::parse(q, "1/2") + Scalar::parse(q, "1/3")).to_string() == "5/6");
  auto f5 = FieldSpec::prime(5);
  CHECK(Scalar::from_integer(f5, 2).inverse() == Scalar::from_integer(f5, 3));
  auto f2 = FieldSpec::prime(2);
  CHECK(Scalar::from_integer(f2, -2).is_zero());
  CHECK(Scalar::parse(FieldSpec::prime(7), "1/2") == Scalar::from_integer(FieldSpec::prime(7), 4));
}

TEST_CASE("scalar errors") {
  auto f5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(Scalar::zero(f5).inverse(), FieldError);
  CHECK_THROWS_AS(Scalar::one(f5) + Scalar::one(FieldSpec::rational()), FieldError);
  CHECK_FALSE(Scalar::one(f5) == Scalar::one(FieldSpec::rational()));
  CHECK_THROWS_AS(Scalar::parse(f5, "1/5"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(f5, "x"), FieldError);
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rational());
  CHECK(FieldSpec::parse("f101").characteristic() == 101);
  CHECK(FieldSpec::parse("f2").to_string() == "f2");
  CHECK_THROWS_AS(FieldSpec::parse("f4"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("f"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("r"), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
}

TEST_CASE("primality against trial division") {
  for (std::uint64_t n = 0; n < 3000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) trial = false;
    CHECK_MESSAGE(is_prime(n) == trial, n);
  }
  CHECK(is_prime(2305843009213693951ULL));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ULL));
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 rng(7);
  for (FieldSpec f : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(3),
                      FieldSpec::prime(101), FieldSpec::prime(2305843009213693951ULL)}) {
    for (int i = 0; i < 300; ++i) {
      Scalar a = test::random_scalar(rng, f), b = test::random_scalar(rng, f),
             c = test::random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("solve_in_span examples") {
  auto q = FieldSpec::rational();
  auto s = solve_in_span({vec(q, {-1})}, vec(q, {1}));
  REQUIRE(s.in_span());
  CHECK((*s.coefficients)[0] == Scalar::from_integer(q, -1));

  auto f2 = FieldSpec::prime(2);
  s = solve_in_span({vec(f2, {1, -1})}, vec(f2, {1, 1}));
  REQUIRE(s.in_span());
  CHECK((*s.coefficients)[0].is_one());

  s = solve_in_span({}, vec(q, {0, 1}));
  CHECK_FALSE(s.in_span());
  CHECK(s.basis_rank == 0);
  CHECK(s.augmented_rank == 1);

  CHECK_THROWS_AS(solve_in_span({vec(q, {1})}, vec(q, {1, 0})), FieldError);
  CHECK_THROWS_AS(solve_in_span({vec(f2, {1})}, vec(q, {1})), FieldError);
}

namespace {

// Every coefficient choice over F_p, p small.
bool brute_in_span(const std::vector<VertexVector>& basis, const VertexVector& target) {
  FieldSpec f = target.field();
  std::size_t p = f.characteristic();
  std::vector<std::size_t> digits(basis.size(), 0);
  while (true) {
    VertexVector acc(f, target.dimension());
    for (std::size_t i = 0; i < basis.size(); ++i)
      acc = acc + basis[i].scaled(Scalar::from_integer(f, static_cast<long long>(digits[i])));
    if (acc == target) return true;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) return false;
  }
}

}  // namespace

TEST_CASE("span membership against brute force over F2 and F3") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3}) {
    FieldSpec f = FieldSpec::prime(p);
    std::uniform_int_distribution<int> coord(0, static_cast<int>(p) - 1);
    for (int trial = 0; trial < 400; ++trial) {
      std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      std::size_t count = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
      auto random_vec = [&] {
        VertexVector v(f, dim);
        for (std::size_t i = 0; i < dim; ++i) v.set(i, Scalar::from_integer(f, coord(rng)));
        return v;
      };
      std::vector<VertexVector> basis;
      for (std::size_t i = 0; i < count; ++i) basis.push_back(random_vec());
      VertexVector target = random_vec();
      auto s = solve_in_span(basis, target);
      CHECK(s.in_span() == brute_in_span(basis, target));
      CHECK(s.basis_rank == rank(basis));
      if (s.in_span()) {
        CHECK(s.augmented_rank == s.basis_rank);
        CHECK(linear_combination(basis, *s.coefficients, f, dim) == target);
      } else {
        CHECK(s.augmented_rank == s.basis_rank + 1);
      }
    }
  }
}

TEST_CASE("row reduction") {
  auto q = FieldSpec::rational();
  auto rows = row_reduced_basis({vec(q, {2, 4, 0}), vec(q, {1, 2, 0}), vec(q, {0, 1, 1})});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == vec(q, {1, 0, -2}));
  CHECK(rows[1] == vec(q, {0, 1, 1}));
  CHECK(rank({}) == 0);
}

TEST_CASE("sparse echelon") {
  auto q = FieldSpec::rational();
  SparseEchelon<int> ech;
  auto one = Scalar::one(q);
  CHECK(ech.insert({{1, one}, {2, one}}));
  CHECK(ech.insert({{2, one}}));
  CHECK_FALSE(ech.insert({{1, one + one}}));
  CHECK(ech.rank() == 2);
}
