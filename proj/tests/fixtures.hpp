#pragma once

#include "ringscope/ring.hpp"

namespace fixtures {

using ringscope::Coords;
using ringscope::RingSpec;

// basis E11, E12, E22
inline RingSpec t2f2() {
  std::vector<std::vector<Coords>> m(3, std::vector<Coords>(3, Coords(3, 0)));
  m[0][0] = {1, 0, 0};
  m[0][1] = {0, 1, 0};
  m[1][2] = {0, 1, 0};
  m[2][2] = {0, 0, 1};
  auto s = ringscope::table_spec({2, 2, 2}, m, {1, 0, 1});
  s.label = "T2(F2)";
  return s;
}

// basis 1, x, y
inline RingSpec f2xy_sq() {
  std::vector<std::vector<Coords>> m(3, std::vector<Coords>(3, Coords(3, 0)));
  for (std::size_t i = 0; i < 3; ++i) {
    m[0][i][i] = 1;
    m[i][0][i] = 1;
  }
  auto s = ringscope::table_spec({2, 2, 2}, m, {1, 0, 0});
  s.label = "F2[x,y]/(x,y)^2";
  return s;
}

// basis 1, x, y, xy
inline RingSpec f2_x2y2() {
  std::vector<std::vector<Coords>> m(4, std::vector<Coords>(4, Coords(4, 0)));
  for (std::size_t i = 0; i < 4; ++i) {
    m[0][i][i] = 1;
    m[i][0][i] = 1;
  }
  m[1][2][3] = 1;
  m[2][1][3] = 1;
  auto s = ringscope::table_spec({2, 2, 2, 2}, m, {1, 0, 0, 0});
  s.label = "F2[x,y]/(x^2,y^2)";
  return s;
}

inline RingSpec quiver() {
  auto s = ringscope::path_algebra_spec(2, 3, {{1, 2}, {1, 3}});
  s.label = "F2(2<-1->3)";
  return s;
}

inline RingSpec z(ringscope::Int n) { return ringscope::zmod_spec(n); }

inline RingSpec m2f2() { return ringscope::matrix_spec(z(2), 2); }
inline RingSpec z4xf2() { return ringscope::product_spec({z(4), z(2)}); }

// Rings of order <= 32.
inline std::vector<RingSpec> small_rings() {
  return {z(8), z4xf2(), t2f2(), f2xy_sq(), f2_x2y2(), quiver(), m2f2()};
}

}  // namespace fixtures
