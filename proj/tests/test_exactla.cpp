#include <random>
#include <set>

#include "doctest.h"
#include "ringscope/exactla.hpp"

using namespace ringscope;

namespace {

std::set<Coords> brute_span(const ModMatrix& m) {
  std::set<Coords> out;
  out.insert(Coords(m.cols(), 0));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Coords> cur(out.begin(), out.end());
    for (const auto& x : cur)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Coords y = x;
        for (std::size_t c = 0; c < m.cols(); ++c)
          y[c] = mod(y[c] + m(r, c), m.col_moduli()[c]);
        if (out.insert(y).second) grew = true;
      }
  }
  return out;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> d;
  for (Int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

ModMatrix random_matrix(std::mt19937& rng) {
  Int n = std::uniform_int_distribution<Int>(2, 16)(rng);
  auto divs = divisors(n);
  std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::vector<Int> cm(cols);
  for (auto& c : cm) c = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
  ModMatrix m(n, cm);
  std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  for (std::size_t r = 0; r < rows; ++r) {
    Coords v(cols);
    for (std::size_t c = 0; c < cols; ++c)
      v[c] = std::uniform_int_distribution<Int>(0, cm[c] - 1)(rng);
    m.append_row(v);
  }
  return m;
}

}  // namespace

TEST_CASE("howell form examples") {
  ModMatrix a(8, {8}, {{2}, {4}});
  auto h = howell_form(a);
  CHECK(h.rows() == 1);
  CHECK(h(0, 0) == 2);
  CHECK(brute_span(a) == brute_span(h));

  ModMatrix id(8, {8, 8}, {{1, 0}, {0, 1}});
  CHECK(howell_form(id) == id);

  ModMatrix z(8, {8}, {{0}});
  CHECK(howell_form(z).empty());
}

TEST_CASE("howell form is idempotent, sound and canonical") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    ModMatrix m = random_matrix(rng);
    ModMatrix h = howell_form(m);
    CHECK(howell_form(h) == h);
    auto s = brute_span(m);
    REQUIRE(brute_span(h) == s);
    CHECK(span_order(h) == s.size());
    std::set<Coords> visited;
    for_each_span_element(h, [&](const Coords& x) { visited.insert(x); });
    CHECK(visited == s);
    // another generating set of the same span has the same form
    ModMatrix other(m.modulus(), m.col_moduli());
    std::vector<Coords> elems(s.begin(), s.end());
    std::shuffle(elems.begin(), elems.end(), rng);
    for (const auto& e : elems) other.append_row(e);
    CHECK(howell_form(other) == h);
    // in_span / express_in_span agree with the element set
    for_each_group_element(m.col_moduli(), [&](const Coords& v) {
      bool inside = s.count(v) > 0;
      CHECK(in_span(h, v) == inside);
      auto c = express_in_span(h, v);
      CHECK(c.has_value() == inside);
      if (c) {
        Coords back(v.size(), 0);
        for (std::size_t r = 0; r < h.rows(); ++r)
          for (std::size_t k = 0; k < v.size(); ++k)
            back[k] = mod(back[k] + (*c)[r] * h(r, k), m.col_moduli()[k]);
        CHECK(back == v);
      }
    });
  }
}

TEST_CASE("solve_linear examples") {
  ModMatrix a(8, {8}, {{2}});
  auto s = solve_linear(a, Coords{4});
  REQUIRE(s);
  CHECK(mod(s->particular[0] * 2, 8) == 4);
  CHECK(brute_span(s->kernel) == std::set<Coords>{{0}, {4}});
  CHECK_FALSE(solve_linear(a, Coords{1}));

  ModMatrix id(8, {8, 8}, {{1, 0}, {0, 1}});
  auto t = solve_linear(id, Coords{3, 5});
  REQUIRE(t);
  CHECK(t->particular == Coords{3, 5});
  CHECK(t->kernel.empty());
}

TEST_CASE("solve_linear agrees with exhaustive search") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1500; ++trial) {
    ModMatrix a = random_matrix(rng);
    if (a.rows() > 3) continue;
    const Int n = a.modulus();
    Coords b(a.cols());
    for (std::size_t c = 0; c < b.size(); ++c)
      b[c] = std::uniform_int_distribution<Int>(0, a.col_moduli()[c] - 1)(rng);
    auto apply = [&](const Coords& x) {
      Coords y(a.cols(), 0);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          y[c] = mod(y[c] + x[r] * a(r, c), a.col_moduli()[c]);
      return y;
    };
    std::set<Coords> sols;
    std::set<Coords> kern;
    for_each_group_element(std::vector<Int>(a.rows(), n), [&](const Coords& x) {
      if (apply(x) == b) sols.insert(x);
      if (apply(x) == Coords(a.cols(), 0)) kern.insert(x);
    });
    auto s = solve_linear(a, b);
    CHECK(s.has_value() == !sols.empty());
    if (!s) continue;
    CHECK(apply(s->particular) == b);
    CHECK(brute_span(s->kernel) == kern);
  }
}

TEST_CASE("kernels, preimages, intersections and quotients") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 800; ++trial) {
    ModMatrix a = random_matrix(rng);
    ModMatrix b(a.modulus(), a.col_moduli());
    for (int r = 0; r < 2; ++r) {
      Coords v(a.cols());
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = std::uniform_int_distribution<Int>(0, a.col_moduli()[c] - 1)(rng);
      b.append_row(v);
    }
    auto sa = brute_span(a), sb = brute_span(b);
    std::set<Coords> inter, sum;
    for (const auto& x : sa)
      if (sb.count(x)) inter.insert(x);
    for (const auto& x : sa)
      for (const auto& y : sb) {
        Coords z(x.size());
        for (std::size_t c = 0; c < z.size(); ++c) z[c] = mod(x[c] + y[c], a.col_moduli()[c]);
        sum.insert(z);
      }
    CHECK(brute_span(intersect_spans(howell_form(a), howell_form(b))) == inter);
    CHECK(brute_span(sum_spans(howell_form(a), howell_form(b))) == sum);

    // quotient of the column group by span(a)
    std::vector<Coords> rels = a.to_rows();
    const std::size_t t = a.cols();
    const Int n = a.modulus();
    for (std::size_t c = 0; c < t; ++c) {
      Coords e(t, 0);
      e[c] = a.col_moduli()[c];
      rels.push_back(e);
    }
    GroupPresentation p = present_quotient(n, t, rels);
    std::uint64_t total = group_order(a.col_moduli());
    CHECK(group_order(p.moduli) * sa.size() == total);
    for (const auto& x : sa) CHECK(p.project(x) == Coords(p.moduli.size(), 0));
    for (std::size_t j = 0; j < p.lifts.size(); ++j) {
      Coords u(p.moduli.size(), 0);
      u[j] = 1;
      CHECK(p.project(p.lifts[j]) == u);
    }
  }
}

TEST_CASE("kernel_of_map against brute force") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 800; ++trial) {
    ModMatrix img = random_matrix(rng);
    const Int n = img.modulus();
    std::vector<Int> dom(img.rows());
    for (std::size_t i = 0; i < dom.size(); ++i) {
      Int o = 1;
      for (std::size_t c = 0; c < img.cols(); ++c) {
        Int e = img(i, c);
        o = lcm(o, img.col_moduli()[c] / gcd(e, img.col_moduli()[c]));
      }
      Int d = o;
      for (Int k : divisors(n))
        if (k % o == 0 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) d = k;
      dom[i] = std::max<Int>(d, 1);
    }
    bool ok = true;
    for (Int d : dom) ok = ok && d > 1;
    if (!ok) continue;
    std::set<Coords> kern;
    for_each_group_element(dom, [&](const Coords& x) {
      Coords y(img.cols(), 0);
      for (std::size_t r = 0; r < img.rows(); ++r)
        for (std::size_t c = 0; c < img.cols(); ++c)
          y[c] = mod(y[c] + x[r] * img(r, c), img.col_moduli()[c]);
      if (y == Coords(img.cols(), 0)) kern.insert(x);
    });
    ModMatrix k = kernel_of_map(dom, img);
    CHECK(k.col_moduli() == dom);
    CHECK(brute_span(k) == kern);
  }
}

TEST_CASE("elementary divisors") {
  CHECK(elementary_divisors({12, 2}) == std::vector<Int>{2, 3, 4});
  CHECK(elementary_divisors({}) .empty());
}
