#include "doorlab/error.hpp"
#include "doorlab/rational.hpp"

#include <doctest.h>

#include <limits>
#include <unordered_set>

using namespace doorlab;

TEST_SUITE("rational") {

TEST_CASE("normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(-4, -2).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational(0), DomainError);
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("overflow is reported, not wrapped") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  // Large intermediates that reduce back into range are fine.
  Rational half_big(std::numeric_limits<std::int64_t>::max() - 1, 2);
  CHECK(half_big * Rational(2) == Rational(std::numeric_limits<std::int64_t>::max() - 1));
}

TEST_CASE("text round trip") {
  CHECK(Rational(3).to_string() == "3/1");
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse(" 6/4 ") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  for (std::int64_t p = -5; p <= 5; ++p)
    for (std::int64_t q = 1; q <= 5; ++q) CHECK(Rational::parse(Rational(p, q).to_string()) == Rational(p, q));
}

TEST_CASE("complex parsing") {
  CHECK(ExactComplex::parse("1+2i") == ExactComplex(1, 2));
  CHECK(ExactComplex::parse("-1/2-3/4i") == ExactComplex(Rational(-1, 2), Rational(-3, 4)));
  CHECK(ExactComplex::parse("2i/3") == ExactComplex(0, Rational(2, 3)));
  CHECK(ExactComplex::parse("i") == ExactComplex(0, 1));
  CHECK(ExactComplex::parse("-i") == ExactComplex(0, -1));
  CHECK(ExactComplex::parse("2+i") == ExactComplex(2, 1));
  CHECK(ExactComplex::parse("5") == ExactComplex(5));
  CHECK_THROWS_AS(ExactComplex::parse(""), DomainError);
  CHECK_THROWS_AS(ExactComplex::parse("1+2j"), DomainError);
}

TEST_CASE("complex arithmetic and round trip") {
  ExactComplex z(1, 2), w(Rational(1, 2), -1);
  CHECK(z + w == ExactComplex(Rational(3, 2), 1));
  CHECK(z * w == ExactComplex(Rational(5, 2), 0));
  CHECK((z / w) * w == z);
  CHECK_THROWS_AS(z / ExactComplex{}, DomainError);
  for (const auto& v : {z, w, ExactComplex(0, -1), ExactComplex(Rational(-7, 3)), ExactComplex{}})
    CHECK(ExactComplex::parse(v.to_string()) == v);
  std::unordered_set<ExactComplex> set{z, w, z};
  CHECK(set.size() == 2);
}

}
