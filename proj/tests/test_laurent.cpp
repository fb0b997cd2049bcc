#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brade/laurent.hpp"

using brade::Int;
using brade::LaurentPoly;
using brade::Rat;

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

// Independent oracle: cofactor expansion along the first row.  Only usable for
// small sizes, which is exactly its job.
LaurentPoly det_cofactor(const Matrix& m) {
  size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly acc;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    LaurentPoly term = m[0][j] * det_cofactor(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), expd(-3, 3), coeffd(-4, 4);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += LaurentPoly::monomial(coeffd(rng), expd(rng));
  return p;
}

const LaurentPoly d = LaurentPoly::delta();
const LaurentPoly one(1);

}  // namespace

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == LaurentPoly());
    CHECK(one * a == a);
    CHECK(a - b == a + (-b));
  }
}

TEST_CASE("delta times delta inverse is one") {
  CHECK(d * LaurentPoly::delta(-1) == one);
}

TEST_CASE("(delta-1)(delta+2) expands as expected") {
  CHECK((d - one) * (d + LaurentPoly(2)) ==
        d * d + d - LaurentPoly(2));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(7);
  std::vector<Rat> xs = {Rat(1, 2), Rat(-1, 2), 2, -2, 3};
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    for (const Rat& x : xs) {
      CHECK(a.eval(x) + b.eval(x) == (a + b).eval(x));
      CHECK(a.eval(x) * b.eval(x) == (a * b).eval(x));
    }
  }
  CHECK(d.eval(0) == 0);
  CHECK((d + one).eval(0) == 1);
  CHECK_THROWS_AS(LaurentPoly::delta(-1).eval(0), std::invalid_argument);
}

TEST_CASE("substitute_square doubles exponents and is a homomorphism") {
  CHECK(d.substitute_square() == d * d);
  CHECK(LaurentPoly::delta(-1).substitute_square() == LaurentPoly::delta(-2));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK((a * b).substitute_square() ==
          a.substitute_square() * b.substitute_square());
    CHECK((a + b).substitute_square() ==
          a.substitute_square() + b.substitute_square());
    for (const Rat& x : {Rat(2), Rat(-3), Rat(1, 2)})
      CHECK(a.substitute_square().eval(x) == a.eval(x * x));
  }
}

TEST_CASE("pow matches repeated multiplication") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPoly a = random_poly(rng);
    LaurentPoly acc = one;
    for (unsigned e = 0; e <= 4; ++e) {
      CHECK(a.pow(e) == acc);
      acc *= a;
    }
  }
}

TEST_CASE("determinant matches cofactor oracle") {
  std::mt19937 rng(20240818);
  std::uniform_int_distribution<size_t> sized(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = sized(rng);
    Matrix m(n, std::vector<LaurentPoly>(n));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng);
    CHECK(brade::det(m) == det_cofactor(m));
  }
}

TEST_CASE("determinant frozen values") {
  Matrix m = {{d, one, one}, {one, d, one}, {one, one, d}};
  LaurentPoly expect = (d - one) * (d - one) * (d + LaurentPoly(2));
  CHECK(brade::det(m) == expect);
  CHECK(brade::det(m) == d * d * d - LaurentPoly(3) * d + LaurentPoly(2));
  CHECK(brade::det({}) == one);
  CHECK(brade::det({{LaurentPoly()}}) == LaurentPoly());
  // permutation matrix with a sign
  Matrix p = {{LaurentPoly(), one}, {one, LaurentPoly()}};
  CHECK(brade::det(p) == -one);
}

TEST_CASE("determinant is multiplicative on small random matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeffd(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a(3, std::vector<LaurentPoly>(3)), b = a;
    for (auto& row : a)
      for (auto& e : row) e = LaurentPoly(coeffd(rng));
    for (auto& row : b)
      for (auto& e : row) e = LaurentPoly(coeffd(rng));
    Matrix ab(3, std::vector<LaurentPoly>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) ab[i][j] += a[i][k] * b[k][j];
    CHECK(brade::det(ab) == brade::det(a) * brade::det(b));
  }
}

TEST_CASE("rational roots: frozen examples") {
  CHECK(d.rational_roots() == std::vector<Rat>{0});
  LaurentPoly p = (d - one) * (d - one) * (d + LaurentPoly(2));
  CHECK(p.rational_roots() == std::vector<Rat>{-2, 1});
  CHECK((d * d + one).rational_roots().empty());
  CHECK(LaurentPoly::delta(-1).rational_roots().empty());
  CHECK_THROWS_AS(LaurentPoly().rational_roots(), std::invalid_argument);
}

TEST_CASE("rational roots: reconstructed products") {
  // (2d - 1)(d + 3)(d^2 + d + 1) * d^-2 has roots 1/2 and -3 only
  LaurentPoly p = (LaurentPoly(2) * d - one) * (d + LaurentPoly(3)) *
                  (d * d + d + one) * LaurentPoly::delta(-2);
  CHECK(p.rational_roots() == std::vector<Rat>{-3, Rat(1, 2)});
}

TEST_CASE("string rendering") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(one.str() == "1");
  CHECK((-one).str() == "-1");
  CHECK(d.str() == "δ");
  CHECK((d * d * d - LaurentPoly(3) * d + LaurentPoly(2)).str() ==
        "2 - 3δ + δ^3");
  CHECK((LaurentPoly(-2) + d + d * d).str() == "-2 + δ + δ^2");
  CHECK(LaurentPoly::delta(-1).str() == "δ^-1");
  CHECK(LaurentPoly::monomial(-1, 2).str() == "-δ^2");
}

TEST_CASE("divide_exact round trips") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(brade::divide_exact(a * b, b) == a);
  }
  CHECK_THROWS_AS(brade::divide_exact(one, d + one), std::logic_error);
}
