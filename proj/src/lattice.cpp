#include "ringscope/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ringscope {

bool FiniteLattice::covers(std::size_t upper, std::size_t lower) const {
  if (!less(lower, upper)) return false;
  for (std::size_t z = 0; z < size(); ++z)
    if (less(lower, z) && less(z, upper)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (covers(b, a)) out.emplace_back(a, b);
  return out;
}

FiniteLattice build_lattice_from_order(std::vector<std::string> labels, std::vector<bool> leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidInput("lattice: no elements");
  if (leq.size() != n * n) throw InvalidInput("lattice: order matrix has the wrong size");
  auto at = [&](std::size_t a, std::size_t b) { return leq[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (!at(a, a)) throw InvalidInput("lattice: order is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && at(a, b) && at(b, a))
        throw InvalidInput("lattice: order is not antisymmetric at (" + labels[a] + ", " +
                           labels[b] + ")");
      for (std::size_t c = 0; c < n; ++c)
        if (at(a, b) && at(b, c) && !at(a, c))
          throw InvalidInput("lattice: order is not transitive");
    }
  }
  FiniteLattice l;
  l.labels_ = std::move(labels);
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::optional<std::size_t> m, j;
      for (std::size_t c = 0; c < n; ++c) {
        if (at(c, a) && at(c, b) && (!m || at(*m, c))) m = c;
        if (at(a, c) && at(b, c) && (!j || at(c, *j))) j = c;
      }
      // the candidate must dominate every lower bound (resp. be below every
      // upper bound)
      for (std::size_t c = 0; c < n; ++c) {
        if (m && at(c, a) && at(c, b) && !at(c, *m)) m.reset();
        if (j && at(a, c) && at(b, c) && !at(*j, c)) j.reset();
      }
      if (!m)
        throw InvalidInput("lattice: (" + l.labels_[a] + ", " + l.labels_[b] +
                           ") has no meet");
      if (!j)
        throw InvalidInput("lattice: (" + l.labels_[a] + ", " + l.labels_[b] +
                           ") has no join");
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
    }
  std::size_t bot = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bot = l.meet_[bot * n + a];
    top = l.join_[top * n + a];
  }
  l.leq_ = std::move(leq);
  l.bottom_ = bot;
  l.top_ = top;
  return l;
}

FiniteLattice build_lattice(std::vector<std::string> labels,
                            const std::vector<std::pair<std::size_t, std::size_t>>& order_pairs) {
  const std::size_t n = labels.size();
  std::vector<bool> leq(n * n, false);
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = true;
  for (auto [a, b] : order_pairs) {
    if (a >= n || b >= n) throw InvalidInput("lattice: order pair out of range");
    leq[a * n + b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (leq[a * n + k])
        for (std::size_t b = 0; b < n; ++b)
          if (leq[k * n + b]) leq[a * n + b] = true;
  return build_lattice_from_order(std::move(labels), std::move(leq));
}

FiniteLattice chain_lattice(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<bool> leq(n * n, false);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = a; b < n; ++b) leq[a * n + b] = true;
  }
  return build_lattice_from_order(std::move(labels), std::move(leq));
}

FiniteLattice dual_lattice(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<bool> leq(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = l.leq(b, a);
  return build_lattice_from_order(l.labels(), std::move(leq));
}

FiniteLattice lattice_product(const FiniteLattice& a, const FiniteLattice& b,
                              const Limits& limits) {
  const std::size_t n = a.size() * b.size();
  if (n > limits.max_lattice_size) throw BoundExceeded("lattice_product: result too large");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      labels.push_back("(" + a.labels()[i] + "," + b.labels()[j] + ")");
  std::vector<bool> leq(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      leq[x * n + y] = a.leq(x / b.size(), y / b.size()) && b.leq(x % b.size(), y % b.size());
  return build_lattice_from_order(std::move(labels), std::move(leq));
}

StructureReport structure_report(const FiniteLattice& l, const Limits& limits) {
  const std::size_t n = l.size();
  if (n > limits.max_lattice_size) throw BoundExceeded("structure_report: lattice too large");
  StructureReport r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!l.leq(a, b) && !l.leq(b, a)) r.chain = false;

  for (std::size_t a = 0; a < n && !r.pentagon; ++a)
    for (std::size_t b = 0; b < n && !r.pentagon; ++b) {
      if (!l.less(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (l.meet(a, c) == l.meet(b, c) && l.join(a, c) == l.join(b, c)) {
          r.pentagon = std::array<std::size_t, 5>{l.meet(a, c), a, b, c, l.join(a, c)};
          break;
        }
    }
  for (std::size_t x = 0; x < n && !r.diamond; ++x)
    for (std::size_t y = x + 1; y < n && !r.diamond; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        std::size_t o = l.meet(x, y), i = l.join(x, y);
        if (o == i || l.meet(x, z) != o || l.meet(y, z) != o || l.join(x, z) != i ||
            l.join(y, z) != i)
          continue;
        r.diamond = std::array<std::size_t, 5>{o, x, y, z, i};
        break;
      }
  r.modular = !r.pentagon;
  r.distributive = r.modular && !r.diamond;

  for (std::size_t a = 0; a < n; ++a) {
    if (l.covers(a, l.bottom())) r.atoms.push_back(a);
    if (l.covers(l.top(), a)) r.coatoms.push_back(a);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (a != l.bottom() &&
        std::none_of(r.atoms.begin(), r.atoms.end(), [&](std::size_t t) { return l.leq(t, a); }))
      r.atomic = false;
    if (a != l.top() && std::none_of(r.coatoms.begin(), r.coatoms.end(),
                                     [&](std::size_t t) { return l.leq(a, t); }))
      r.coatomic = false;
  }

  // longest chain, processing elements by the size of their down-set
  std::vector<std::size_t> order(n), below(n, 0), height(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (l.leq(b, a)) ++below[a];
  for (std::size_t a = 0; a < n; ++a) order[a] = a;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
  for (std::size_t a : order)
    for (std::size_t b = 0; b < n; ++b)
      if (l.less(b, a)) height[a] = std::max(height[a], height[b] + 1);
  r.length = height[l.top()];
  return r;
}

std::optional<std::vector<std::size_t>> are_isomorphic(const FiniteLattice& a,
                                                       const FiniteLattice& b, bool anti,
                                                       const Limits& limits) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  if (n > limits.max_lattice_size) throw BoundExceeded("are_isomorphic: lattice too large");
  auto profile = [](const FiniteLattice& l, std::size_t x, bool flip) {
    std::size_t down = 0, up = 0;
    for (std::size_t y = 0; y < l.size(); ++y) {
      down += l.leq(y, x);
      up += l.leq(x, y);
    }
    return flip ? std::pair{up, down} : std::pair{down, up};
  };
  std::vector<std::pair<std::size_t, std::size_t>> pa(n), pb(n);
  for (std::size_t x = 0; x < n; ++x) {
    pa[x] = profile(a, x, false);
    pb[x] = profile(b, x, anti);
  }
  auto sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t x) {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || pa[x] != pb[y]) continue;
      bool ok = true;
      for (std::size_t w = 0; w < x && ok; ++w) {
        bool lab = anti ? b.leq(image[w], y) : b.leq(y, image[w]);
        bool lba = anti ? b.leq(y, image[w]) : b.leq(image[w], y);
        ok = a.leq(x, w) == lab && a.leq(w, x) == lba;
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::string to_dot(const FiniteLattice& l, const std::vector<std::string>& labels,
                   const std::string& name) {
  const auto& names = labels.empty() ? l.labels() : labels;
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t a = 0; a < l.size(); ++a) {
    std::string label = a < names.size() ? names[a] : std::to_string(a);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    os << "  n" << a << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [lo, hi] : l.covering_pairs()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ringscope
