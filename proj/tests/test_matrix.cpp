#include <doctest.h>

#include "dualbraid/matrix.hpp"

using namespace dualbraid;

TEST_CASE("rank, det, inverse on a known matrix") {
  QMatrix m(3, 3);
  long entries[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = entries[i][j];
  CHECK(m.rank() == 3);
  CHECK(m.det() == 4);
  CHECK(m * m.inverse() == QMatrix::identity(3));
}

TEST_CASE("singular matrix: rank drop and kernel") {
  QMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;
  CHECK(m.rank() == 1);
  auto ker = m.kernel_basis();
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    Rat s = m.at(0, 0) * v[0] + m.at(0, 1) * v[1] + m.at(0, 2) * v[2];
    CHECK(s == 0);
  }
}

TEST_CASE("solve: unique solution and inconsistency") {
  QMatrix m(3, 2);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 0) = 1;
  m.at(2, 1) = 1;
  auto x = m.solve({Rat(2), Rat(3), Rat(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK(!m.solve({Rat(2), Rat(3), Rat(4)}).has_value());
}

TEST_CASE("rationals stay exact") {
  Rat x(1, 3);
  Rat y = x + x + x;
  CHECK(y == 1);
  CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
  CHECK(rat_to_string(Rat(4, 2)) == "2");
}

TEST_CASE("sparse rank matches dense rank") {
  SparseRank sr;
  CHECK(sr.add_row({{0, Rat(1)}, {2, Rat(2)}}));
  CHECK(sr.add_row({{1, Rat(1)}}));
  CHECK(!sr.add_row({{0, Rat(2)}, {1, Rat(3)}, {2, Rat(4)}}));  // dependent
  CHECK(sr.rank() == 2);
}
