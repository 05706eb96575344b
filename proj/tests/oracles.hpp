#pragma once

// Brute-force element-level oracles. Nothing here uses Howell forms or the
// library's linear algebra; modules are handled as explicit element tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ringscope/module.hpp"

namespace oracle {

using ringscope::Coords;
using ringscope::Int;
using ringscope::RightModule;
using Bits = std::vector<bool>;

// Element table of a module: addition, negation-free closure and the action
// of every ring generator, all by element index.
struct Table {
  std::size_t size = 0;
  std::vector<Coords> elems;
  std::map<Coords, std::size_t> index;
  std::vector<std::vector<std::size_t>> add;  // add[x][y]
  std::vector<std::vector<std::size_t>> act;  // act[g][x]
  std::vector<std::size_t> basis;               // indices of e_i

  explicit Table(const RightModule& m) {
    size = static_cast<std::size_t>(m.order());
    std::vector<Int> orders = m.orders();
    for (std::size_t i = 0; i < size; ++i) {
      Coords c(orders.size());
      std::size_t v = i;
      for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = static_cast<Int>(v % static_cast<std::size_t>(orders[k]));
        v /= static_cast<std::size_t>(orders[k]);
      }
      index[c] = elems.size();
      elems.push_back(c);
    }
    add.assign(size, std::vector<std::size_t>(size));
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y) {
        Coords z(orders.size());
        for (std::size_t k = 0; k < z.size(); ++k)
          z[k] = (elems[x][k] + elems[y][k]) % orders[k];
        add[x][y] = index.at(z);
      }
    const std::size_t d = m.ring().rank();
    act.assign(d, std::vector<std::size_t>(size));
    for (std::size_t g = 0; g < d; ++g) {
      const auto& a = m.action(g);
      for (std::size_t x = 0; x < size; ++x) {
        Coords z(orders.size(), 0);
        for (std::size_t i = 0; i < orders.size(); ++i)
          for (std::size_t k = 0; k < z.size(); ++k)
            z[k] = (z[k] + elems[x][i] * a(i, k)) % orders[k];
        act[g][x] = index.at(z);
      }
    }
    for (std::size_t i = 0; i < orders.size(); ++i) {
      Coords e(orders.size(), 0);
      e[i] = 1;
      basis.push_back(index.at(e));
    }
  }

  // Smallest submodule containing the marked elements.
  Bits close(Bits s) const {
    s[0] = true;
    std::vector<std::size_t> todo;
    for (std::size_t x = 0; x < size; ++x)
      if (s[x]) todo.push_back(x);
    while (!todo.empty()) {
      std::size_t x = todo.back();
      todo.pop_back();
      auto mark = [&](std::size_t y) {
        if (!s[y]) {
          s[y] = true;
          todo.push_back(y);
        }
      };
      for (const auto& row : act) mark(row[x]);
      for (std::size_t y = 0; y < size; ++y)
        if (s[y]) mark(add[x][y]);
    }
    return s;
  }

  Bits singleton(std::size_t x) const {
    Bits b(size, false);
    b[x] = true;
    return b;
  }
};

inline std::size_t popcount(const Bits& b) { return static_cast<std::size_t>(std::count(b.begin(), b.end(), true)); }

// Every submodule, found by closing {S + x} from {0}.
inline std::set<Bits> submodules(const Table& t) {
  std::set<Bits> found;
  std::vector<Bits> queue{t.close(Bits(t.size, false))};
  found.insert(queue.front());
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Bits s = queue[h];
    for (std::size_t x = 0; x < t.size; ++x) {
      if (s[x]) continue;
      Bits u = s;
      u[x] = true;
      u = t.close(u);
      if (found.insert(u).second) queue.push_back(u);
    }
  }
  return found;
}

inline Bits submodule_bits(const Table& t, const RightModule& m, const ringscope::Submodule& s) {
  Bits b(t.size, false);
  for (std::size_t x = 0; x < t.size; ++x) b[x] = s.contains(t.elems[x]);
  (void)m;
  return b;
}

// Module generators of the submodule s of t, chosen greedily.
inline std::vector<std::size_t> generators(const Table& t, const Bits& s) {
  std::vector<std::size_t> gens;
  Bits cur = t.close(Bits(t.size, false));
  for (std::size_t x = 0; x < t.size; ++x) {
    if (!s[x] || cur[x]) continue;
    gens.push_back(x);
    Bits u = cur;
    u[x] = true;
    cur = t.close(u);
  }
  return gens;
}

// A homomorphism from the submodule dom of `a` to `b`, as an array over the
// elements of `a` (unassigned = SIZE_MAX).
using Map = std::vector<std::size_t>;
constexpr std::size_t kNone = SIZE_MAX;

// Extends the assignment gens -> images to the submodule they generate.
inline std::optional<Map> extend(const Table& a, const Table& b,
                                 const std::vector<std::size_t>& gens,
                                 const std::vector<std::size_t>& images) {
  Map f(a.size, kNone);
  f[0] = 0;
  std::vector<std::size_t> assigned{0};
  std::vector<std::size_t> todo;
  auto set = [&](std::size_t x, std::size_t y) {
    if (f[x] == kNone) {
      f[x] = y;
      assigned.push_back(x);
      todo.push_back(x);
      return true;
    }
    return f[x] == y;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!set(gens[i], images[i])) return std::nullopt;
  todo.push_back(0);
  while (!todo.empty()) {
    std::size_t x = todo.back();
    todo.pop_back();
    for (std::size_t g = 0; g < a.act.size(); ++g)
      if (!set(a.act[g][x], b.act[g][f[x]])) return std::nullopt;
    for (std::size_t k = 0; k < assigned.size(); ++k) {
      std::size_t y = assigned[k];
      if (!set(a.add[x][y], b.add[f[x]][f[y]])) return std::nullopt;
    }
  }
  return f;
}

// All homomorphisms from the submodule dom of a into b.
inline std::set<Map> homs(const Table& a, const Bits& dom, const Table& b) {
  auto gens = generators(a, dom);
  std::set<Map> out;
  std::vector<std::size_t> images(gens.size(), 0);
  while (true) {
    if (auto f = extend(a, b, gens, images)) out.insert(*f);
    std::size_t k = 0;
    for (; k < images.size(); ++k) {
      if (++images[k] < b.size) break;
      images[k] = 0;
    }
    if (k == images.size()) break;
  }
  return out;
}

inline Map restrict(const Map& f, const Bits& dom) {
  Map g(f.size(), kNone);
  for (std::size_t x = 0; x < f.size(); ++x)
    if (dom[x]) g[x] = f[x];
  return g;
}

// M is N-injective: every map K -> M from a submodule K of N extends to N.
inline bool relatively_injective(const RightModule& m, const RightModule& n) {
  Table tm(m), tn(n);
  Bits all(tn.size, true);
  std::set<Map> restricted_source = homs(tn, all, tm);
  for (const auto& k : submodules(tn)) {
    std::set<Map> restricted;
    for (const auto& f : restricted_source) restricted.insert(restrict(f, k));
    for (const auto& phi : homs(tn, k, tm))
      if (!restricted.count(phi)) return false;
  }
  return true;
}

// Element table of N/L: cosets represented by their smallest element.
struct CosetTable {
  std::vector<std::size_t> rep;  // element of N -> coset id
  std::size_t count = 0;
};

inline CosetTable cosets(const Table& t, const Bits& l) {
  CosetTable c;
  c.rep.assign(t.size, kNone);
  for (std::size_t x = 0; x < t.size; ++x) {
    if (c.rep[x] != kNone) continue;
    for (std::size_t y = 0; y < t.size; ++y)
      if (l[y]) c.rep[t.add[x][y]] = c.count;
    ++c.count;
  }
  return c;
}

// M is N-projective: every map M -> N/L lifts through N -> N/L.
inline bool relatively_projective(const RightModule& m, const RightModule& n) {
  Table tm(m), tn(n);
  Bits all(tm.size, true);
  std::set<Map> to_n = homs(tm, all, tn);
  auto mgens = generators(tm, all);
  for (const auto& l : submodules(tn)) {
    CosetTable c = cosets(tn, l);
    std::set<std::vector<std::size_t>> lifted;
    for (const auto& f : to_n) {
      std::vector<std::size_t> g(tm.size);
      for (std::size_t x = 0; x < tm.size; ++x) g[x] = c.rep[f[x]];
      lifted.insert(g);
    }
    // maps M -> N/L: choose coset images of the generators, check by lifting
    // each candidate to an element-level function on cosets
    std::vector<std::size_t> images(mgens.size(), 0);
    std::vector<std::size_t> coset_rep(c.count);
    for (std::size_t x = tn.size; x-- > 0;) coset_rep[c.rep[x]] = x;
    while (true) {
      // build psi on M by closure, working with coset ids
      std::vector<std::size_t> psi(tm.size, kNone);
      bool ok = true;
      std::vector<std::size_t> assigned, todo;
      auto set = [&](std::size_t x, std::size_t y) {
        if (psi[x] == kNone) {
          psi[x] = y;
          assigned.push_back(x);
          todo.push_back(x);
          return true;
        }
        return psi[x] == y;
      };
      set(0, c.rep[0]);
      for (std::size_t i = 0; i < mgens.size() && ok; ++i) ok = set(mgens[i], images[i]);
      while (ok && !todo.empty()) {
        std::size_t x = todo.back();
        todo.pop_back();
        for (std::size_t g = 0; g < tm.act.size() && ok; ++g)
          ok = set(tm.act[g][x], c.rep[tn.act[g][coset_rep[psi[x]]]]);
        for (std::size_t k = 0; k < assigned.size() && ok; ++k) {
          std::size_t y = assigned[k];
          ok = set(tm.add[x][y], c.rep[tn.add[coset_rep[psi[x]]][coset_rep[psi[y]]]]);
        }
      }
      if (ok && !lifted.count(psi)) return false;
      std::size_t k = 0;
      for (; k < images.size(); ++k) {
        if (++images[k] < c.count) break;
        images[k] = 0;
      }
      if (k == images.size()) break;
    }
  }
  return true;
}

// Ring elements as indices; ann(x) as a bitset over them.
inline Bits ann_bits(const RightModule& m, const Coords& x) {
  const auto& r = m.ring();
  Bits out(static_cast<std::size_t>(r.order()));
  for (std::uint64_t i = 0; i < r.order(); ++i) out[i] = m.act(x, r.element(i)) == m.zero();
  return out;
}

inline Bits intersect(const Bits& a, const Bits& b) {
  Bits c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] && b[i];
  return c;
}

inline bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// N in sigma[M]: every cyclic xR of N is a quotient of a cyclic submodule
// (m_1, ..., m_k) R of M^k, i.e. ann(m_1) cap ... cap ann(m_k) lies in ann(x),
// with k <= log2|N| + 1.
inline bool sigma_contains(const RightModule& m, const RightModule& n) {
  std::size_t k = 1;
  for (std::uint64_t s = n.order(); s > 1; s >>= 1) ++k;
  std::set<Bits> level;
  for (std::uint64_t i = 0; i < m.order(); ++i) level.insert(ann_bits(m, m.element(i)));
  std::set<Bits> reach = level;
  for (std::size_t step = 1; step < k; ++step) {
    std::set<Bits> next = reach;
    for (const auto& a : reach)
      for (const auto& b : level) next.insert(intersect(a, b));
    if (next == reach) break;
    reach = std::move(next);
  }
  for (std::uint64_t i = 0; i < n.order(); ++i) {
    Bits ax = ann_bits(n, n.element(i));
    bool found = false;
    for (const auto& a : reach)
      if (subset(a, ax)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Isomorphism by exhausting maps between element tables.
inline bool isomorphic(const RightModule& a, const RightModule& b) {
  if (a.order() != b.order()) return false;
  Table ta(a), tb(b);
  for (const auto& f : homs(ta, Bits(ta.size, true), tb)) {
    std::set<std::size_t> img(f.begin(), f.end());
    if (img.size() == tb.size) return true;
  }
  return false;
}

}  // namespace oracle
