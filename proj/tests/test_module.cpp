#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ringscope/hom.hpp"
#include "ringscope/ideals.hpp"
#include "ringscope/module.hpp"

using namespace ringscope;

namespace {

RightModule z8_quotient(const RingPtr& z8, Int d) {
  return cyclic_module(z8, generated_submodule(regular_module(z8), {Coords{d}}));
}

std::set<oracle::Bits> library_bits(const RightModule& m) {
  oracle::Table t(m);
  std::set<oracle::Bits> out;
  for (const auto& s : submodules(m)) out.insert(oracle::submodule_bits(t, m, s));
  return out;
}

// Modules of order <= 64 generated by one or two elements.
std::vector<RightModule> sample_modules(const RingPtr& r, std::uint64_t max_order = 64) {
  return enumerate_modules(r, {2, max_order});
}

}  // namespace

TEST_CASE("module construction") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto reg = regular_module(z8);
  CHECK(reg.rank() == 1);
  CHECK(reg.order() == 8);
  CHECK_FALSE(verify_module(reg));

  auto z4 = z8_quotient(z8, 4);
  CHECK(z4.order() == 4);
  CHECK(z4.act(Coords{1}, Coords{2}) == Coords{2});
  CHECK(z4.act(Coords{2}, Coords{2}) == Coords{0});

  auto z2 = z8_quotient(z8, 2);
  auto klein = direct_sum({z2, z2});
  CHECK(klein.order() == 4);
  CHECK(is_semisimple_module(klein));
  CHECK_FALSE(verify_module(klein));

  ModMatrix bad(8, {8});
  bad.append_row(Coords{3});
  CHECK_THROWS_AS(make_module(z8, {8}, {bad}), InvalidInput);
  auto f2 = ring_from_spec(fixtures::z(2));
  CHECK_THROWS_AS(direct_sum({z2, regular_module(f2)}), InvalidInput);
}

TEST_CASE("submodules") {
  auto z8 = ring_from_spec(fixtures::z(8));
  CHECK(submodules(z8_quotient(z8, 4)).size() == 3);
  auto z2 = z8_quotient(z8, 2);
  CHECK(submodules(direct_sum({z2, z2})).size() == 5);
  CHECK(submodules(zero_module(z8)).size() == 1);

  auto subs = submodules(regular_module(z8));
  CHECK(subs.front().order() == 1);
  CHECK(subs.back().order() == 8);
  CHECK(std::is_sorted(subs.begin(), subs.end()));

  Limits tight;
  tight.max_module_order = 4;
  CHECK_THROWS_AS(submodules(regular_module(z8), tight), BoundExceeded);
}

TEST_CASE("submodule completeness against subset closure") {
  for (const auto& spec : fixtures::small_rings()) {
    auto r = ring_from_spec(spec);
    std::vector<RightModule> ms = sample_modules(r, 32);
    ms.push_back(regular_module(r));
    for (const auto& m : ms) {
      CAPTURE(spec.label);
      CAPTURE(describe_module(m));
      oracle::Table t(m);
      CHECK(library_bits(m) == oracle::submodules(t));
    }
  }
}

TEST_CASE("quotients and submodule modules") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto reg = regular_module(z8);
  auto q = quotient_module(reg, generated_submodule(reg, {Coords{4}}));
  CHECK(q.module.order() == 4);
  CHECK(is_module_map(q.projection));
  CHECK(span_order(q.projection.image()) == 4);

  auto same = quotient_module(reg, zero_submodule(reg));
  CHECK(same.module.order() == 8);
  CHECK(is_isomorphic_modules(same.module, reg).isomorphic);

  auto z2 = z8_quotient(z8, 2);
  auto klein = direct_sum({z2, z2});
  auto diag = quotient_module(klein, generated_submodule(klein, {Coords{1, 1}}));
  CHECK(diag.module.order() == 2);

  auto t = ring_from_spec(fixtures::t2f2());
  ModMatrix e11(2, {2, 2, 2}), e12(2, {2, 2, 2});
  e11.append_row(Coords{1, 0, 0});
  e12.append_row(Coords{0, 1, 0});
  CHECK_FALSE(is_submodule(regular_module(t), howell_form(e11)));
  CHECK(is_submodule(regular_module(t), howell_form(e12)));
  auto sm = submodule_module(reg, generated_submodule(reg, {Coords{2}}));
  CHECK(sm.module.order() == 4);
  CHECK(is_module_map(sm.inclusion));
}

TEST_CASE("cyclic modules up to isomorphism") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto cz8 = cyclic_modules_up_to_iso(z8);
  REQUIRE(cz8.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(cz8[i].order() == (std::uint64_t{1} << i));

  CHECK(cyclic_modules_up_to_iso(ring_from_spec(fixtures::m2f2())).size() == 3);

  // oracle count: quotients by all right ideals, deduplicated by exhaustive
  // isomorphism search
  for (const auto& spec : fixtures::small_rings()) {
    auto r = ring_from_spec(spec);
    std::vector<RightModule> reps;
    for (const auto& i : right_ideals(r)) {
      auto c = cyclic_module(r, i);
      bool seen = false;
      for (const auto& x : reps)
        if (oracle::isomorphic(x, c)) seen = true;
      if (!seen) reps.push_back(c);
    }
    CAPTURE(spec.label);
    CHECK(cyclic_modules_up_to_iso(r).size() == reps.size());
  }
  CHECK(cyclic_modules_up_to_iso(ring_from_spec(fixtures::t2f2())).size() == 6);
  CHECK(cyclic_modules_up_to_iso(ring_from_spec(fixtures::f2xy_sq())).size() == 6);
}

TEST_CASE("socle and radical series") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto reg = regular_module(z8);
  auto ss = socle_series(reg);
  REQUIRE(ss.chain.size() == 4);
  CHECK(ss.loewy_length == 3);
  CHECK(ss.chain[1].order() == 2);
  CHECK(ss.chain[2].order() == 4);
  CHECK(socle_series(zero_module(z8)).loewy_length == 0);
  CHECK(socle_series(regular_module(ring_from_spec(fixtures::m2f2()))).loewy_length == 1);
  CHECK(socle_series(regular_module(ring_from_spec(fixtures::t2f2()))).loewy_length == 2);

  auto rs = radical_series(reg);
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].order() == 8);
  CHECK(rs[1].order() == 4);
  CHECK(rs[2].order() == 2);
  CHECK(rs[3].order() == 1);

  auto q = ring_from_spec(fixtures::quiver());
  auto qs = radical_series(regular_module(q));
  REQUIRE(qs.size() == 3);
  CHECK(qs[1] == jacobson_radical(q));

  auto z2 = z8_quotient(z8, 2);
  CHECK(radical_series(direct_sum({z2, z2})).size() == 2);
}

TEST_CASE("loewy length agrees with radical series") {
  for (const auto& spec : fixtures::small_rings()) {
    auto r = ring_from_spec(spec);
    for (const auto& m : sample_modules(r)) {
      CAPTURE(spec.label);
      CAPTURE(describe_module(m));
      CHECK(socle_series(m).loewy_length == radical_series(m).size() - 1);
    }
  }
}

TEST_CASE("socle equals the elements killed by J") {
  for (const auto& spec : fixtures::small_rings()) {
    auto r = ring_from_spec(spec);
    auto j = jacobson_radical(r);
    for (const auto& m : sample_modules(r)) {
      Submodule soc = socle(m);
      for (std::uint64_t i = 0; i < m.order(); ++i) {
        Coords x = m.element(i);
        bool killed = true;
        for (std::size_t k = 0; k < j.gens.rows(); ++k)
          if (m.act(x, j.gens.row_vector(k)) != m.zero()) killed = false;
        CHECK(soc.contains(x) == killed);
      }
    }
  }
}

TEST_CASE("singular submodule") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto z4 = z8_quotient(z8, 4);
  CHECK(singular_submodule(z4).order() == 4);
  CHECK(singular_submodule(regular_module(z8)) ==
        generated_submodule(regular_module(z8), {Coords{2}}));
  CHECK(singular_submodule(regular_module(ring_from_spec(fixtures::m2f2()))).order() == 1);

  // per-element check: ann(x) meets every nonzero right ideal
  for (const auto& spec : fixtures::small_rings()) {
    auto r = ring_from_spec(spec);
    auto reg = regular_module(r);
    oracle::Table tr(reg);
    std::vector<oracle::Bits> nonzero;
    for (const auto& b : oracle::submodules(tr))
      if (oracle::popcount(b) > 1) nonzero.push_back(b);
    for (const auto& m : sample_modules(r, 32)) {
      Submodule z = singular_submodule(m);
      for (std::uint64_t i = 0; i < m.order(); ++i) {
        Coords x = m.element(i);
        oracle::Bits ann = oracle::ann_bits(m, x);
        bool essential = true;
        for (const auto& b : nonzero)
          if (oracle::popcount(oracle::intersect(ann, b)) <= 1) essential = false;
        CHECK(z.contains(x) == essential);
      }
      // Z(M) is contained in the preimage of Z(M/Z(M))
      auto q = quotient_module(m, z);
      Submodule z2 = singular_submodule(q.module);
      for (std::uint64_t i = 0; i < m.order(); ++i) {
        Coords x = m.element(i);
        if (z.contains(x)) CHECK(z2.contains(q.projection.apply(x)));
      }
    }
  }
}

TEST_CASE("annihilators") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto z4 = z8_quotient(z8, 4);
  CHECK(Submodule{annihilator(z4)} == generated_submodule(regular_module(z8), {Coords{4}}));
  CHECK(span_order(annihilator(regular_module(z8))) == 1);

  auto t = ring_from_spec(fixtures::t2f2());
  auto j = jacobson_radical(t);
  CHECK(Submodule{annihilator(cyclic_module(t, j))} == j);

  for (const auto& spec : fixtures::small_rings()) {
    auto r = ring_from_spec(spec);
    auto ms = sample_modules(r, 16);
    for (const auto& a : ms) {
      Submodule ann{annihilator(a)};
      CHECK(is_two_sided(*r, ann));
      for (std::uint64_t i = 0; i < r->order(); ++i) {
        Coords x = r->element(i);
        bool kills = true;
        for (std::size_t k = 0; k < a.rank(); ++k)
          if (a.act(a.basis(k), x) != a.zero()) kills = false;
        CHECK(ann.contains(x) == kills);
      }
      for (const auto& b : ms) {
        Submodule both{annihilator(direct_sum({a, b}))};
        CHECK(both == intersection(ann, Submodule{annihilator(b)}));
      }
    }
  }
}

TEST_CASE("isomorphism") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto z4 = z8_quotient(z8, 4);
  auto other = quotient_of_free(z8, 2, {Coords{4, 0}, Coords{0, 1}});
  CHECK(other.order() == 4);
  auto iso = is_isomorphic_modules(z4, other);
  REQUIRE(iso.isomorphic);
  CHECK(is_module_map(*iso.map));
  auto z2 = z8_quotient(z8, 2);
  CHECK_FALSE(is_isomorphic_modules(z4, direct_sum({z2, z2})).isomorphic);

  auto m2 = ring_from_spec(fixtures::m2f2());
  auto reg = regular_module(m2);
  std::vector<Submodule> minimal;
  for (const auto& i : right_ideals(m2))
    if (i.order() == 4) minimal.push_back(i);
  REQUIRE(minimal.size() == 3);
  CHECK(is_isomorphic_modules(submodule_module(reg, minimal[0]).module,
                              submodule_module(reg, minimal[1]).module)
            .isomorphic);

  // agreement with exhaustive search on small modules
  for (const auto& spec : fixtures::small_rings()) {
    auto r = ring_from_spec(spec);
    std::vector<RightModule> cands;
    for (const auto& i : right_ideals(r)) cands.push_back(cyclic_module(r, i));
    for (const auto& a : cands)
      for (const auto& b : cands) {
        if (a.order() != b.order() || a.order() > 16) continue;
        CHECK(is_isomorphic_modules(a, b).isomorphic == oracle::isomorphic(a, b));
      }
  }
}

TEST_CASE("enumerate modules") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto e = enumerate_modules(z8, {1, 64});
  REQUIRE(e.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(e[i].order() == (std::uint64_t{1} << i));

  CHECK(enumerate_modules(ring_from_spec(fixtures::z(2)), {2, 4}).size() == 3);
  auto t = ring_from_spec(fixtures::t2f2());
  CHECK(enumerate_modules(t, {1, 64}).size() == cyclic_modules_up_to_iso(t).size());

  // Every quotient of R^k within bounds appears exactly once.
  for (const auto& spec : {fixtures::z(8), fixtures::t2f2(), fixtures::f2xy_sq()}) {
    auto r = ring_from_spec(spec);
    auto listed = enumerate_modules(r, {2, 64});
    for (std::size_t a = 0; a < listed.size(); ++a)
      for (std::size_t b = a + 1; b < listed.size(); ++b)
        CHECK_FALSE(is_isomorphic_modules(listed[a], listed[b]).isomorphic);
    auto free2 = direct_sum({regular_module(r), regular_module(r)});
    for (const auto& l : submodules(free2)) {
      if (free2.order() / l.order() > 64) continue;
      auto q = quotient_module(free2, l).module;
      std::size_t hits = 0;
      for (const auto& m : listed) hits += is_isomorphic_modules(q, m).isomorphic;
      CAPTURE(spec.label);
      CHECK(hits == 1);
    }
  }

  Limits tight;
  tight.max_candidates = 3;
  CHECK_THROWS_AS(enumerate_modules(t, {2, 64}, tight), BoundExceeded);
}
