#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ringscope/ring.hpp"

using namespace ringscope;

namespace {

std::set<Coords> brute_units(const FiniteRing& r) {
  std::set<Coords> out;
  for (std::uint64_t i = 0; i < r.order(); ++i)
    for (std::uint64_t j = 0; j < r.order(); ++j) {
      Coords x = r.element(i), y = r.element(j);
      if (r.multiply(x, y) == r.one() && r.multiply(y, x) == r.one()) out.insert(x);
    }
  return out;
}

std::set<Coords> as_set(const std::vector<Coords>& v) { return {v.begin(), v.end()}; }

bool associative_on_elements(const FiniteRing& r) {
  for (std::uint64_t i = 0; i < r.order(); ++i)
    for (std::uint64_t j = 0; j < r.order(); ++j)
      for (std::uint64_t k = 0; k < r.order(); ++k) {
        Coords a = r.element(i), b = r.element(j), c = r.element(k);
        if (r.multiply(r.multiply(a, b), c) != r.multiply(a, r.multiply(b, c))) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("constructors") {
  auto z8 = ring_from_spec(zmod_spec(8));
  CHECK(z8->rank() == 1);
  CHECK(z8->orders() == std::vector<Int>{8});

  auto q = ring_from_spec(fixtures::quiver());
  CHECK(q->rank() == 5);
  CHECK(q->order() == 32);
  CHECK(associative_on_elements(*q));

  auto m = ring_from_spec(matrix_spec(zmod_spec(4), 2));
  CHECK(m->rank() == 4);
  CHECK(m->orders() == std::vector<Int>{4, 4, 4, 4});
  CHECK(m->order() == 256);

  auto p = ring_from_spec(product_spec({zmod_spec(4), zmod_spec(2)}));
  CHECK(p->order() == 8);

  auto oo = ring_from_spec(opposite_spec(opposite_spec(fixtures::t2f2())));
  CHECK(*oo == *ring_from_spec(fixtures::t2f2()));
  auto o = ring_from_spec(opposite_spec(fixtures::t2f2()));
  CHECK_FALSE(*o == *ring_from_spec(fixtures::t2f2()));
}

TEST_CASE("constructor errors") {
  CHECK_THROWS_AS(ring_from_spec(zmod_spec(0)), InvalidInput);
  CHECK_THROWS_AS(ring_from_spec(path_algebra_spec(4, 2, {{1, 2}})), InvalidInput);
  CHECK_THROWS_AS(ring_from_spec(path_algebra_spec(2, 2, {{1, 2}, {2, 1}})), InvalidInput);
  CHECK_THROWS_AS(ring_from_spec(path_algebra_spec(2, 1, {{1, 1}})), InvalidInput);
  CHECK_THROWS_AS(ring_from_spec(matrix_spec(zmod_spec(4), 3)), BoundExceeded);
  Limits small;
  small.max_ring_order = 10;
  CHECK_THROWS_AS(ring_from_spec(zmod_spec(16), small), BoundExceeded);
  // non-associative table
  std::vector<std::vector<Coords>> m(2, std::vector<Coords>(2, Coords(2, 0)));
  m[0][0] = {1, 0};
  m[0][1] = {0, 1};
  m[1][0] = {0, 1};
  m[1][1] = {1, 1};
  CHECK_NOTHROW(ring_from_spec(table_spec({2, 2}, m, {1, 0})));  // F4
  m[1][1] = {0, 0};
  m[1][0] = {1, 0};
  CHECK_THROWS_AS(ring_from_spec(table_spec({2, 2}, m, {1, 0})), InvalidInput);
}

TEST_CASE("verify_ring_axioms") {
  CHECK_FALSE(verify_ring_axioms(*ring_from_spec(zmod_spec(8))));
  FiniteRing bad({4}, {{Coords{1}}}, Coords{2});
  auto v = verify_ring_axioms(bad);
  REQUIRE(v);
  CHECK(v->kind == RingViolation::Kind::unit_law);
  CHECK_FALSE(verify_ring_axioms(*ring_from_spec(fixtures::quiver())));
  FiniteRing ill({4, 2}, {{Coords{1, 0}, Coords{1, 0}}, {Coords{0, 1}, Coords{0, 0}}},
                 Coords{1, 0});
  auto w = verify_ring_axioms(ill);
  REQUIRE(w);
  CHECK(w->kind == RingViolation::Kind::well_definedness);
}

TEST_CASE("units") {
  auto z8 = ring_from_spec(zmod_spec(8));
  CHECK(as_set(units(*z8)) == std::set<Coords>{{1}, {3}, {5}, {7}});
  CHECK(as_set(units(*ring_from_spec(zmod_spec(2)))) == std::set<Coords>{{1}});
  auto l = ring_from_spec(fixtures::f2xy_sq());
  CHECK(as_set(units(*l)) == std::set<Coords>{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
  for (auto spec : {fixtures::t2f2(), fixtures::quiver(), fixtures::f2_x2y2(),
                    matrix_spec(zmod_spec(2), 2), product_spec({zmod_spec(4), zmod_spec(2)})}) {
    auto r = ring_from_spec(spec);
    CHECK(as_set(units(*r)) == brute_units(*r));
  }
}

TEST_CASE("central idempotents") {
  CHECK(central_idempotents(*ring_from_spec(fixtures::quiver())).size() == 2);
  CHECK(central_idempotents(*ring_from_spec(product_spec({zmod_spec(4), zmod_spec(2)}))).size() == 4);
  CHECK(central_idempotents(*ring_from_spec(zmod_spec(8))).size() == 2);
  // against the definition over all elements
  auto r = ring_from_spec(fixtures::t2f2());
  std::set<Coords> brute;
  for (std::uint64_t i = 0; i < r->order(); ++i) {
    Coords e = r->element(i);
    if (r->multiply(e, e) != e) continue;
    bool central = true;
    for (std::uint64_t j = 0; j < r->order(); ++j)
      central = central && r->multiply(e, r->element(j)) == r->multiply(r->element(j), e);
    if (central) brute.insert(e);
  }
  CHECK(as_set(central_idempotents(*r)) == brute);
}

TEST_CASE("algebra generators generate") {
  for (auto spec : {fixtures::t2f2(), fixtures::quiver(), matrix_spec(zmod_spec(4), 2),
                    fixtures::f2_x2y2()}) {
    auto r = ring_from_spec(spec);
    CHECK(r->algebra_generators().size() <= r->rank());
  }
  CHECK(ring_from_spec(matrix_spec(zmod_spec(4), 2))->algebra_generators().size() <= 3);
}

TEST_CASE("quotient constructor closes to a two-sided ideal") {
  // F2[x,y]/(x^2,y^2) modulo xy
  auto q = ring_from_spec(quotient_spec(fixtures::f2_x2y2(), {{0, 0, 0, 1}}));
  CHECK(q->order() == 8);
  // modulo x: ideal {x, xy}
  auto qx = ring_from_spec(quotient_spec(fixtures::f2_x2y2(), {{0, 1, 0, 0}}));
  CHECK(qx->order() == 4);
  // M2(Z/4) modulo E11 is zero
  auto qm = ring_from_spec(quotient_spec(matrix_spec(zmod_spec(4), 2), {{1, 0, 0, 0}}));
  CHECK(qm->order() == 1);
  auto z8mod4 = ring_from_spec(quotient_spec(zmod_spec(8), {{4}}));
  CHECK(z8mod4->orders() == std::vector<Int>{4});
}

TEST_CASE("spec equality") {
  CHECK(matrix_spec(zmod_spec(4), 2) == matrix_spec(zmod_spec(4), 2));
  CHECK_FALSE(matrix_spec(zmod_spec(4), 2) == matrix_spec(zmod_spec(2), 2));
  CHECK(fixtures::quiver() == fixtures::quiver());
}
