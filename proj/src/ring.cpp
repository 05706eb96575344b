#include "ringscope/ring.hpp"

#include <algorithm>
#include <sstream>

namespace ringscope {

namespace {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ModMatrix span_of(const FiniteRing& r, const std::vector<Coords>& xs) {
  return howell_form(ModMatrix(r.characteristic(), r.orders(), xs));
}

// Subring generated by 1 and the listed generators.
ModMatrix subring_span(const FiniteRing& r, const std::vector<std::size_t>& gens) {
  std::vector<Coords> seed{r.one()};
  for (std::size_t g : gens) seed.push_back(r.generator(g));
  ModMatrix s = span_of(r, seed);
  while (true) {
    std::vector<Coords> rows = s.to_rows();
    const std::size_t base = rows.size();
    for (std::size_t i = 0; i < base; ++i)
      for (std::size_t j = 0; j < base; ++j)
        rows.push_back(r.multiply(rows[i], rows[j]));
    ModMatrix next = span_of(r, rows);
    if (next == s) return s;
    s = std::move(next);
  }
}

}  // namespace

FiniteRing::FiniteRing(std::vector<Int> orders,
                       std::vector<std::vector<Coords>> mul, Coords one,
                       std::string label)
    : orders_(std::move(orders)),
      mul_(std::move(mul)),
      one_(std::move(one)),
      label_(std::move(label)) {
  const std::size_t d = orders_.size();
  for (Int n : orders_)
    if (n < 2) throw InvalidInput("ring: generator orders must be at least 2");
  if (mul_.size() != d || one_.size() != d)
    throw InvalidInput("ring: table dimensions do not match the rank");
  for (auto& row : mul_) {
    if (row.size() != d) throw InvalidInput("ring: multiplication table is not square");
    for (auto& entry : row) {
      if (entry.size() != d)
        throw InvalidInput("ring: structure constant has wrong length");
      entry = reduce(std::move(entry));
    }
  }
  one_ = reduce(std::move(one_));
  for (Int n : orders_) characteristic_ = lcm(characteristic_, n);

  if (d == 0) return;
  const std::uint64_t full = order();
  std::vector<std::size_t> chosen;
  ModMatrix s = subring_span(*this, chosen);
  for (std::size_t g = 0; g < d && span_order(s) < full; ++g) {
    if (in_span(s, generator(g))) continue;
    chosen.push_back(g);
    s = subring_span(*this, chosen);
  }
  algebra_generators_ = std::move(chosen);
}

Coords FiniteRing::generator(std::size_t i) const {
  Coords x = zero();
  x[i] = 1;
  return x;
}

Coords FiniteRing::reduce(Coords x) const {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(x[k], orders_[k]);
  return x;
}

Coords FiniteRing::add(const Coords& a, const Coords& b) const {
  Coords x(rank());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(a[k] + b[k], orders_[k]);
  return x;
}

Coords FiniteRing::sub(const Coords& a, const Coords& b) const {
  Coords x(rank());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(a[k] - b[k], orders_[k]);
  return x;
}

Coords FiniteRing::scale(const Coords& a, Int c) const {
  Coords x(rank());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(a[k] * c, orders_[k]);
  return x;
}

Coords FiniteRing::multiply(const Coords& a, const Coords& b) const {
  const std::size_t d = rank();
  Coords x(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const Int c = a[i] * b[j];
      const Coords& m = mul_[i][j];
      for (std::size_t k = 0; k < d; ++k)
        if (m[k] != 0) x[k] = mod(x[k] + c * m[k], orders_[k]);
    }
  }
  return x;
}

Coords FiniteRing::element(std::uint64_t index) const {
  Coords x(rank());
  for (std::size_t k = 0; k < x.size(); ++k) {
    auto n = static_cast<std::uint64_t>(orders_[k]);
    x[k] = static_cast<Int>(index % n);
    index /= n;
  }
  return x;
}

std::uint64_t FiniteRing::index_of(const Coords& x) const {
  std::uint64_t idx = 0;
  for (std::size_t k = x.size(); k-- > 0;)
    idx = idx * static_cast<std::uint64_t>(orders_[k]) +
          static_cast<std::uint64_t>(mod(x[k], orders_[k]));
  return idx;
}

ModMatrix FiniteRing::left_multiplication(const Coords& r) const {
  ModMatrix m(characteristic_, orders_);
  for (std::size_t j = 0; j < rank(); ++j) m.append_row(multiply(r, generator(j)));
  return m;
}

ModMatrix FiniteRing::right_multiplication(const Coords& r) const {
  ModMatrix m(characteristic_, orders_);
  for (std::size_t j = 0; j < rank(); ++j) m.append_row(multiply(generator(j), r));
  return m;
}

std::optional<RingViolation> verify_ring_axioms(const FiniteRing& r) {
  const std::size_t d = r.rank();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Coords& m = r.mul(i, j);
      if (r.scale(m, r.orders()[i]) != r.zero() ||
          r.scale(m, r.orders()[j]) != r.zero())
        return RingViolation{RingViolation::Kind::well_definedness, {i, j},
                             "product of generators " + std::to_string(i) +
                                 " and " + std::to_string(j) +
                                 " is not killed by their orders"};
    }
  for (std::size_t i = 0; i < d; ++i) {
    Coords g = r.generator(i);
    if (r.multiply(r.one(), g) != g || r.multiply(g, r.one()) != g)
      return RingViolation{RingViolation::Kind::unit_law, {i},
                           "unit law fails at generator " + std::to_string(i)};
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Coords left = r.multiply(r.mul(i, j), r.generator(k));
        Coords right = r.multiply(r.generator(i), r.mul(j, k));
        if (left != right)
          return RingViolation{RingViolation::Kind::associativity, {i, j, k},
                               "associativity fails at generators (" +
                                   std::to_string(i) + ", " + std::to_string(j) +
                                   ", " + std::to_string(k) + ")"};
      }
  return std::nullopt;
}

RingPtr make_ring(std::vector<Int> orders, std::vector<std::vector<Coords>> mul,
                  Coords one, std::string label) {
  auto r = std::make_shared<FiniteRing>(std::move(orders), std::move(mul),
                                        std::move(one), std::move(label));
  if (auto v = verify_ring_axioms(*r)) throw InvalidInput("ring: " + v->message);
  return r;
}

// ---------------------------------------------------------------------------

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.label != b.label || a.node.index() != b.node.index()) return false;
  auto same_base = [](const RingSpecPtr& x, const RingSpecPtr& y) {
    return x && y ? *x == *y : x == y;
  };
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, MatrixSpec>) {
          return x.size == y.size && same_base(x.base, y.base);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return x.factors == y.factors;
        } else if constexpr (std::is_same_v<T, QuotientSpec>) {
          return x.generators == y.generators && same_base(x.base, y.base);
        } else if constexpr (std::is_same_v<T, OppositeSpec>) {
          return same_base(x.base, y.base);
        } else {
          return x == y;
        }
      },
      a.node);
}

RingSpec zmod_spec(Int n) { return RingSpec{ZModSpec{n}, {}}; }
RingSpec matrix_spec(RingSpec base, Int size) {
  return RingSpec{MatrixSpec{std::make_shared<RingSpec>(std::move(base)), size}, {}};
}
RingSpec product_spec(std::vector<RingSpec> factors) {
  return RingSpec{ProductSpec{std::move(factors)}, {}};
}
RingSpec opposite_spec(RingSpec base) {
  return RingSpec{OppositeSpec{std::make_shared<RingSpec>(std::move(base))}, {}};
}
RingSpec quotient_spec(RingSpec base, std::vector<Coords> generators) {
  return RingSpec{
      QuotientSpec{std::make_shared<RingSpec>(std::move(base)), std::move(generators)},
      {}};
}
RingSpec path_algebra_spec(Int p, Int vertices,
                           std::vector<std::pair<Int, Int>> arrows) {
  return RingSpec{PathAlgebraSpec{p, vertices, std::move(arrows)}, {}};
}
RingSpec table_spec(std::vector<Int> orders, std::vector<std::vector<Coords>> mul,
                    Coords one) {
  return RingSpec{TableSpec{std::move(orders), std::move(mul), std::move(one)}, {}};
}

std::vector<QuiverPath> quiver_paths(const PathAlgebraSpec& spec) {
  if (spec.vertices < 1) throw InvalidInput("path_algebra: need at least one vertex");
  for (auto [s, t] : spec.arrows)
    if (s < 1 || s > spec.vertices || t < 1 || t > spec.vertices)
      throw InvalidInput("path_algebra: arrow endpoint out of range");
  std::vector<QuiverPath> paths;
  for (Int v = 1; v <= spec.vertices; ++v) paths.push_back({v, v, {}});
  std::vector<QuiverPath> frontier;
  for (std::size_t a = 0; a < spec.arrows.size(); ++a)
    frontier.push_back({spec.arrows[a].first, spec.arrows[a].second, {a}});
  // an acyclic quiver has no path longer than its number of vertices
  std::size_t length = 1;
  while (!frontier.empty()) {
    if (length > static_cast<std::size_t>(spec.vertices))
      throw InvalidInput("path_algebra: quiver has an oriented cycle");
    std::vector<QuiverPath> next;
    for (const auto& path : frontier) {
      paths.push_back(path);
      for (std::size_t a = 0; a < spec.arrows.size(); ++a)
        if (spec.arrows[a].first == path.target) {
          QuiverPath longer = path;
          longer.arrows.push_back(a);
          longer.target = spec.arrows[a].second;
          next.push_back(std::move(longer));
        }
    }
    frontier = std::move(next);
    ++length;
  }
  return paths;
}

namespace {

RingPtr build(const RingSpec& spec, const Limits& limits);

RingPtr build_zmod(const ZModSpec& s) {
  if (s.n < 1) throw InvalidInput("zmod: n must be at least 1");
  if (s.n == 1) return make_ring({}, {}, {}, "Z/1");
  return make_ring({s.n}, {{Coords{1}}}, Coords{1}, "Z/" + std::to_string(s.n));
}

RingPtr build_path_algebra(const PathAlgebraSpec& s) {
  if (!is_prime(s.p)) throw InvalidInput("path_algebra: p must be prime");
  auto paths = quiver_paths(s);
  const std::size_t d = paths.size();
  auto find = [&](const QuiverPath& q) -> std::size_t {
    for (std::size_t i = 0; i < d; ++i)
      if (paths[i].arrows == q.arrows && paths[i].source == q.source &&
          paths[i].target == q.target)
        return i;
    throw InternalError("path_algebra: composite path missing from basis");
  };
  std::vector<std::vector<Coords>> mul(d, std::vector<Coords>(d, Coords(d, 0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& p = paths[i];
      const auto& q = paths[j];
      if (p.source != q.target) continue;
      QuiverPath c{q.source, p.target, q.arrows};
      c.arrows.insert(c.arrows.end(), p.arrows.begin(), p.arrows.end());
      mul[i][j][find(c)] = 1;
    }
  Coords one(d, 0);
  for (Int v = 0; v < s.vertices; ++v) one[static_cast<std::size_t>(v)] = 1;
  return make_ring(std::vector<Int>(d, s.p), std::move(mul), std::move(one),
                   "F" + std::to_string(s.p) + "Q");
}

RingPtr build_matrix(const FiniteRing& b, Int k) {
  if (k < 1) throw InvalidInput("matrix: size must be at least 1");
  const std::size_t d = b.rank(), kk = static_cast<std::size_t>(k);
  const std::size_t dim = kk * kk * d;
  auto idx = [&](std::size_t a, std::size_t c, std::size_t i) {
    return (a * kk + c) * d + i;
  };
  std::vector<Int> orders(dim);
  std::vector<std::vector<Coords>> mul(dim, std::vector<Coords>(dim, Coords(dim, 0)));
  Coords one(dim, 0);
  for (std::size_t a = 0; a < kk; ++a)
    for (std::size_t c = 0; c < kk; ++c)
      for (std::size_t i = 0; i < d; ++i) orders[idx(a, c, i)] = b.orders()[i];
  for (std::size_t a = 0; a < kk; ++a)
    for (std::size_t c = 0; c < kk; ++c)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t e = 0; e < kk; ++e)
          for (std::size_t j = 0; j < d; ++j) {
            const Coords& m = b.mul(i, j);
            Coords& out = mul[idx(a, c, i)][idx(c, e, j)];
            for (std::size_t l = 0; l < d; ++l) out[idx(a, e, l)] = m[l];
          }
  for (std::size_t a = 0; a < kk; ++a)
    for (std::size_t i = 0; i < d; ++i) one[idx(a, a, i)] = b.one()[i];
  return make_ring(std::move(orders), std::move(mul), std::move(one),
                   "M" + std::to_string(k) + "(" + b.label() + ")");
}

RingPtr build_product(const std::vector<RingPtr>& fs) {
  std::size_t dim = 0;
  for (const auto& f : fs) dim += f->rank();
  std::vector<Int> orders;
  std::vector<std::vector<Coords>> mul(dim, std::vector<Coords>(dim, Coords(dim, 0)));
  Coords one;
  std::string label;
  std::size_t off = 0;
  for (const auto& f : fs) {
    const std::size_t d = f->rank();
    orders.insert(orders.end(), f->orders().begin(), f->orders().end());
    one.insert(one.end(), f->one().begin(), f->one().end());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) mul[off + i][off + j][off + k] = f->mul(i, j)[k];
    label += (label.empty() ? "" : " x ") + f->label();
    off += d;
  }
  return make_ring(std::move(orders), std::move(mul), std::move(one), label);
}

RingPtr build_opposite(const FiniteRing& b) {
  const std::size_t d = b.rank();
  std::vector<std::vector<Coords>> mul(d, std::vector<Coords>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mul[i][j] = b.mul(j, i);
  return make_ring(b.orders(), std::move(mul), b.one(), b.label() + "^op");
}

RingPtr build_quotient(const FiniteRing& b, const std::vector<Coords>& gens) {
  for (const auto& g : gens)
    if (g.size() != b.rank())
      throw InvalidInput("quotient: ideal generator has wrong length");
  ModMatrix ideal = span_of(b, gens);
  while (true) {
    std::vector<Coords> rows = ideal.to_rows();
    const std::size_t base = rows.size();
    for (std::size_t i = 0; i < base; ++i)
      for (std::size_t g = 0; g < b.rank(); ++g) {
        rows.push_back(b.multiply(b.generator(g), rows[i]));
        rows.push_back(b.multiply(rows[i], b.generator(g)));
      }
    ModMatrix next = span_of(b, rows);
    if (next == ideal) break;
    ideal = std::move(next);
  }
  return quotient_ring(b, ideal, b.label() + "/I").ring;
}

RingPtr build(const RingSpec& spec, const Limits& limits) {
  auto need = [](const RingSpecPtr& p) -> const RingSpec& {
    if (!p) throw InvalidInput("ring spec: missing base");
    return *p;
  };
  RingPtr r = std::visit(
      [&](const auto& s) -> RingPtr {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ZModSpec>) {
          return build_zmod(s);
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          return make_ring(s.orders, s.mul, s.one, "table");
        } else if constexpr (std::is_same_v<T, PathAlgebraSpec>) {
          return build_path_algebra(s);
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          auto base = build(need(s.base), limits);
          const auto k = static_cast<std::uint64_t>(std::max<Int>(s.size, 1));
          double est = 1;
          for (std::uint64_t i = 0; i < k * k; ++i) est *= static_cast<double>(base->order());
          if (est > static_cast<double>(limits.max_ring_order))
            throw BoundExceeded("matrix ring exceeds the ring order bound");
          return build_matrix(*base, s.size);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          if (s.factors.empty()) throw InvalidInput("product: no factors");
          std::vector<RingPtr> fs;
          for (const auto& f : s.factors) fs.push_back(build(f, limits));
          return build_product(fs);
        } else if constexpr (std::is_same_v<T, QuotientSpec>) {
          return build_quotient(*build(need(s.base), limits), s.generators);
        } else {
          return build_opposite(*build(need(s.base), limits));
        }
      },
      spec.node);
  if (r->order() > limits.max_ring_order)
    throw BoundExceeded("ring of order " + std::to_string(r->order()) +
                        " exceeds the ring order bound " +
                        std::to_string(limits.max_ring_order));
  if (!spec.label.empty()) {
    r = std::make_shared<FiniteRing>(r->orders(),
                                     [&] {
                                       std::vector<std::vector<Coords>> m(r->rank());
                                       for (std::size_t i = 0; i < r->rank(); ++i)
                                         for (std::size_t j = 0; j < r->rank(); ++j)
                                           m[i].push_back(r->mul(i, j));
                                       return m;
                                     }(),
                                     r->one(), spec.label);
  }
  return r;
}

}  // namespace

RingPtr ring_from_spec(const RingSpec& spec, const Limits& limits) {
  return build(spec, limits);
}

QuotientRing quotient_ring(const FiniteRing& r, const ModMatrix& ideal,
                           std::string label) {
  const std::size_t d = r.rank();
  const Int n = r.characteristic();
  std::vector<Coords> rels;
  for (std::size_t i = 0; i < d; ++i) {
    Coords e(d, 0);
    e[i] = r.orders()[i];
    rels.push_back(std::move(e));
  }
  for (auto& row : ideal.to_rows()) rels.push_back(std::move(row));
  GroupPresentation pres = present_quotient(n, d, rels);
  const std::size_t m = pres.moduli.size();
  std::vector<Coords> lifts;
  for (const auto& l : pres.lifts) lifts.push_back(r.reduce(l));
  std::vector<std::vector<Coords>> mul(m, std::vector<Coords>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      mul[a][b] = pres.project(r.multiply(lifts[a], lifts[b]));
  Coords one = pres.project(r.one());
  QuotientRing out{make_ring(pres.moduli, std::move(mul), std::move(one),
                             label.empty() ? r.label() + "/I" : std::move(label)),
                   std::move(pres)};
  return out;
}

std::vector<Coords> units(const FiniteRing& r, const Limits& limits) {
  if (r.order() > limits.max_ring_order)
    throw BoundExceeded("units: ring too large to enumerate");
  std::vector<Coords> out;
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    Coords x = r.element(i);
    auto sol = solve_linear(r.left_multiplication(x), r.one());
    if (!sol) continue;
    Coords y = r.reduce(sol->particular);
    if (r.multiply(x, y) == r.one() && r.multiply(y, x) == r.one())
      out.push_back(std::move(x));
  }
  return out;
}

std::vector<Coords> central_idempotents(const FiniteRing& r, const Limits& limits) {
  if (r.order() > limits.max_ring_order)
    throw BoundExceeded("central_idempotents: ring too large to enumerate");
  std::vector<Coords> out;
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    Coords e = r.element(i);
    if (r.multiply(e, e) != e) continue;
    bool central = true;
    for (std::size_t g : r.algebra_generators()) {
      Coords x = r.generator(g);
      if (r.multiply(e, x) != r.multiply(x, e)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(std::move(e));
  }
  return out;
}

std::string format_coords(const Coords& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

}  // namespace ringscope
