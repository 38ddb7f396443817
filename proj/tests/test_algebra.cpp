#include <doctest.h>

#include <algorithm>
#include <random>

#include "equiarbor/errors.hpp"
#include "equiarbor/linalg.hpp"
#include "oracles.hpp"

using namespace equiarbor;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

RationalMatrix random_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(BigInt(num(rng)), BigInt(den(rng)));
  return m;
}

int parity(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 == 0 ? 1 : -1;
}

// Leibniz expansion as an independent determinant.
Rational leibniz(const RationalMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Rational total(0);
  do {
    Rational term(parity(perm));
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rational serialisation and parsing") {
  CHECK(to_string(r(6, 4)) == "3/2");
  CHECK(to_string(r(-6, 3)) == "-2");
  CHECK(to_string(r(0, 7)) == "0");
  CHECK(parse_rational("-10/4") == r(-5, 2));
  CHECK(parse_rational("+7") == r(7));
  CHECK(parse_rational("0/5") == r(0));
  CHECK(denominator(parse_rational("0/5")) == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("3/"), ParseError);
  CHECK_THROWS_AS(parse_rational("2x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  try {
    parse_rational("12/3q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("rational round trip on random values") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    const Rational x = make_rational(num(rng), den(rng));
    CHECK(parse_rational(to_string(x)) == x);
    CHECK(denominator(x) >= 1);
    CHECK((gcd(numerator(x), denominator(x)) == 1 || numerator(x) == 0));
  }
}

TEST_CASE("determinant examples") {
  CHECK(determinant(RationalMatrix::Identity(3, 3)) == 1);
  RationalMatrix m(2, 2);
  m << r(1), r(2), r(3), r(4);
  CHECK(determinant(m) == -2);
  CHECK(determinant(RationalMatrix(0, 0)) == 1);
  // principal 3x3 minors of L(K4): Cayley gives 4^2
  RationalMatrix l = RationalMatrix::Constant(4, 4, r(-1));
  for (int i = 0; i < 4; ++i) l(i, i) = r(3);
  for (int drop = 0; drop < 4; ++drop) {
    RationalMatrix minor(3, 3);
    for (int i = 0, a = 0; i < 4; ++i) {
      if (i == drop) continue;
      for (int j = 0, b = 0; j < 4; ++j) {
        if (j == drop) continue;
        minor(a, b++) = l(i, j);
      }
      ++a;
    }
    CHECK(determinant(minor) == 16);
  }
  CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), DimensionError);
}

TEST_CASE("determinant matches Leibniz expansion and is fraction-free on integers") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const RationalMatrix m = random_matrix(rng, 1 + trial % 5);
    CHECK(determinant(m) == leibniz(m));
  }
  IntegerMatrix z(3, 3);
  z << 2, 0, 1, 1, 3, 2, 1, 1, 2;
  CHECK(determinant(z) == BigInt(6));
}

TEST_CASE("row permutation flips the determinant by parity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix m = random_matrix(rng, 4);
    std::vector<int> perm = {0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    RationalMatrix p(4, 4);
    for (int i = 0; i < 4; ++i) p.row(i) = m.row(perm[i]);
    CHECK(determinant(p) == determinant(m) * parity(perm));
  }
}

TEST_CASE("solve examples") {
  RationalVector b(2);
  b << r(5), r(7);
  CHECK(solve(RationalMatrix::Identity(2, 2), b) == b);

  // k=7, x=2, y=1: a=5, b=6, c=5. 2aV - cW = a, 2bW - cV = x-1.
  const Rational a = 5, bb = 6, c = 5, x = 2;
  RationalMatrix sys(2, 2);
  sys << 2 * a, -c, -c, 2 * bb;
  RationalVector rhs(2);
  rhs << a, x - 1;
  const RationalVector vw = solve(sys, rhs);
  CHECK(vw(0) == r(13, 19));
  CHECK(vw(1) == r(7, 19));
  CHECK(vw(0) == (2 * a * bb + c * (x - 1)) / (4 * a * bb - c * c));
  CHECK(vw(1) == a * (2 * x + c - 2) / (4 * a * bb - c * c));

  RationalVector ones(2);
  ones << r(1), r(1);
  CHECK_THROWS_AS(solve(RationalMatrix::Zero(2, 2), ones), SingularSystemError);
  CHECK_THROWS_AS(solve(RationalMatrix::Identity(2, 2), RationalVector(3)), DimensionError);
}

TEST_CASE("solve then multiply reproduces b exactly") {
  std::mt19937 rng(17);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const RationalMatrix m = random_matrix(rng, n);
    RationalVector b = random_matrix(rng, n).col(0);
    if (determinant(m) == 0) {
      CHECK_THROWS_AS(solve(m, b), SingularSystemError);
      continue;
    }
    const RationalVector x = solve(m, b);
    CHECK((m * x - b).isZero());
    ++solved;
    const RationalMatrix inv = inverse(m);
    CHECK(m * inv == RationalMatrix::Identity(n, n));
  }
  CHECK(solved > 40);
}

TEST_CASE("zero determinant exactly when solve reports singular") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    RationalMatrix m = random_matrix(rng, 4);
    // make row 3 a combination of rows 0 and 1
    m.row(3) = m.row(0) * oracle::random_positive(rng) - m.row(1) * oracle::random_positive(rng);
    CHECK(determinant(m) == 0);
    RationalVector b = RationalVector::Constant(4, r(1));
    CHECK_THROWS_AS(solve(m, b), SingularSystemError);
  }
}
