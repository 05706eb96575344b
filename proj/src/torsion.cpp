#include "ringscope/torsion.hpp"

#include <algorithm>
#include <map>

namespace ringscope {

bool LinearFilter::contains(const RightIdeal& i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

LinearFilter make_filter(std::vector<RightIdeal> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return LinearFilter{std::move(members)};
}

std::string axiom_name(FilterAxiom a) {
  switch (a) {
    case FilterAxiom::F1: return "F1";
    case FilterAxiom::F2: return "F2";
    case FilterAxiom::F3: return "F3";
    case FilterAxiom::F4: return "F4";
  }
  return "?";
}

std::optional<FilterViolation> check_linear_filter(const RingPtr& r,
                                                   const std::vector<RightIdeal>& s,
                                                   const Limits& limits) {
  if (r->order() > limits.max_ring_order) throw BoundExceeded("check_linear_filter: ring too large");
  LinearFilter f = make_filter(s);
  const FiniteRing& ring = *r;
  if (!f.contains(unit_ideal(ring)))
    return FilterViolation{FilterAxiom::F1, "R is not a member"};
  for (const auto& a : f.members)
    for (const auto& b : f.members)
      if (!f.contains(intersection(a, b)))
        return FilterViolation{FilterAxiom::F2, "intersection of " + format_ideal(ring, a) +
                                                    " and " + format_ideal(ring, b) +
                                                    " is missing"};
  for (const auto& a : f.members)
    for (const auto& b : right_ideals(r, limits))
      if (b.contains(a) && !f.contains(b))
        return FilterViolation{FilterAxiom::F3, format_ideal(ring, b) + " contains member " +
                                                    format_ideal(ring, a) + " but is missing"};
  for (const auto& a : f.members)
    for (std::uint64_t k = 0; k < ring.order(); ++k) {
      Coords x = ring.element(k);
      if (!f.contains(colon(ring, a, x)))
        return FilterViolation{FilterAxiom::F4, "(" + format_ideal(ring, a) + " : " +
                                                    format_coords(x) + ") is missing"};
    }
  return std::nullopt;
}

bool is_linear_filter(const RingPtr& r, const std::vector<RightIdeal>& s, const Limits& limits) {
  return !check_linear_filter(r, s, limits);
}

namespace {

LinearFilter up_set(const RingPtr& r, const RightIdeal& base, const Limits& limits) {
  std::vector<RightIdeal> members;
  for (const auto& i : right_ideals(r, limits))
    if (i.contains(base)) members.push_back(i);
  return LinearFilter{std::move(members)};
}

void assert_filter(const RingPtr& r, const LinearFilter& f, const Limits& limits,
                   const char* where) {
  if (auto v = check_linear_filter(r, f.members, limits))
    throw InternalError(std::string(where) + ": result violates " + axiom_name(v->axiom) + ": " +
                        v->message);
}

// Right ideals by index with inclusion, meet and colon tables.
struct IdealPoset {
  std::vector<RightIdeal> ideals;
  std::map<RightIdeal, std::size_t> index;
  std::vector<std::uint64_t> up;      // up[a]: mask of ideals containing a
  std::vector<std::size_t> meet;      // meet[a * n + b]
  std::vector<std::uint64_t> colons;  // colons[a]: mask of (a : x) over x in R
  std::uint64_t maximal = 0;
  std::size_t top = 0;

  IdealPoset(const RingPtr& r, const Limits& limits) : ideals(right_ideals(r, limits)) {
    const std::size_t n = ideals.size();
    if (n > limits.max_filter_ideals || n > 64)
      throw BoundExceeded("linear filters: " + std::to_string(n) +
                          " right ideals exceed the filter search guard of " +
                          std::to_string(std::min<std::size_t>(limits.max_filter_ideals, 64)));
    for (std::size_t a = 0; a < n; ++a) index[ideals[a]] = a;
    up.assign(n, 0);
    meet.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (ideals[b].contains(ideals[a])) up[a] |= std::uint64_t{1} << b;
        meet[a * n + b] = index.at(intersection(ideals[a], ideals[b]));
      }
    colons.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::uint64_t k = 0; k < r->order(); ++k)
        colons[a] |= std::uint64_t{1} << index.at(colon(*r, ideals[a], r->element(k)));
    for (const auto& m : maximal_right_ideals(r, limits)) maximal |= std::uint64_t{1} << index.at(m);
    top = index.at(unit_ideal(*r));
  }

  LinearFilter filter(std::uint64_t mask) const {
    std::vector<RightIdeal> members;
    for (std::size_t a = 0; a < ideals.size(); ++a)
      if (mask >> a & 1) members.push_back(ideals[a]);
    return LinearFilter{std::move(members)};
  }

  std::uint64_t mask_of(const LinearFilter& f) const {
    std::uint64_t m = 0;
    for (const auto& i : f.members) m |= std::uint64_t{1} << index.at(i);
    return m;
  }

  // Smallest F1-F4 family containing the mask.
  std::uint64_t close(std::uint64_t mask) const {
    const std::size_t n = ideals.size();
    mask |= std::uint64_t{1} << top;
    for (std::uint64_t before = 0; before != mask;) {
      before = mask;
      for (std::size_t a = 0; a < n; ++a) {
        if (!(mask >> a & 1)) continue;
        mask |= up[a] | colons[a];
        for (std::size_t b = 0; b < n; ++b)
          if (mask >> b & 1) mask |= std::uint64_t{1} << meet[a * n + b];
      }
    }
    return mask;
  }
};

}  // namespace

LinearFilter eta_filter(const RingPtr& r, const RightIdeal& i, const Limits& limits) {
  if (!is_two_sided(*r, i)) throw InvalidInput("eta_filter: ideal is not two-sided");
  LinearFilter f = up_set(r, i, limits);
  assert_filter(r, f, limits, "eta_filter");
  return f;
}

std::vector<LinearFilter> all_linear_filters(const RingPtr& r, bool above_all_maximal,
                                             const Limits& limits) {
  const IdealPoset p(r, limits);
  const std::size_t n = p.ideals.size();
  std::vector<LinearFilter> out;
  std::size_t visited = 0;
  std::vector<std::size_t> chosen;

  // Antichain A generates the up-set U. U satisfies F2 iff meets of members
  // of A lie in U, and F4 iff colons of members of A lie in U.
  auto accept = [&](std::uint64_t u) {
    if (above_all_maximal && (p.maximal & ~u)) return;
    for (std::size_t a : chosen) {
      if (p.colons[a] & ~u) return;
      for (std::size_t b : chosen)
        if (!(u >> p.meet[a * n + b] & 1)) return;
    }
    out.push_back(p.filter(u));
  };
  auto dfs = [&](auto&& self, std::size_t from, std::uint64_t u) -> void {
    for (std::size_t a = from; a < n; ++a) {
      bool comparable = false;
      for (std::size_t b : chosen)
        if ((p.up[a] >> b & 1) || (p.up[b] >> a & 1)) comparable = true;
      if (comparable) continue;
      if (++visited > limits.max_candidates)
        throw BoundExceeded("all_linear_filters: antichain search exceeded the candidate ceiling");
      chosen.push_back(a);
      std::uint64_t v = u | p.up[a];
      accept(v);
      self(self, a + 1, v);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);

  for (const auto& f : out) assert_filter(r, f, limits, "all_linear_filters");
  std::sort(out.begin(), out.end());
  return out;
}

LinearFilter sigma_filter(const RightModule& m, const Limits& limits) {
  if (m.order() > limits.max_module_order)
    throw BoundExceeded("sigma_filter: module order exceeds the bound");
  const RingPtr& r = m.ring_ptr();
  RightIdeal d = unit_ideal(*r);
  for (std::uint64_t k = 0; k < m.order(); ++k)
    d = intersection(d, Submodule{element_annihilator(m, m.element(k))});
  if (!(d == Submodule{annihilator(m)}))
    throw InternalError("sigma_filter: element annihilators disagree with ann(M)");
  LinearFilter f = up_set(r, d, limits);
  assert_filter(r, f, limits, "sigma_filter");
  return f;
}

bool sigma_contains(const RightModule& m, const RightModule& n, const Limits& limits) {
  if (n.order() > limits.max_module_order)
    throw BoundExceeded("sigma_contains: module order exceeds the bound");
  LinearFilter f = sigma_filter(m, limits);
  for (std::uint64_t k = 0; k < n.order(); ++k)
    if (!f.contains(Submodule{element_annihilator(n, n.element(k))})) return false;
  return true;
}

LinearFilter filter_meet(const LinearFilter& a, const LinearFilter& b) {
  std::vector<RightIdeal> both;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(both));
  return LinearFilter{std::move(both)};
}

LinearFilter filter_join(const RingPtr& r, const LinearFilter& a, const LinearFilter& b,
                         const Limits& limits) {
  const IdealPoset p(r, limits);
  LinearFilter f = p.filter(p.close(p.mask_of(a) | p.mask_of(b)));
  assert_filter(r, f, limits, "filter_join");
  return f;
}

std::optional<RightIdeal> filter_base(const RingPtr& r, const LinearFilter& f,
                                      const Limits& limits) {
  if (f.members.empty()) return std::nullopt;
  RightIdeal d = f.members.back();
  for (const auto& i : f.members) d = intersection(d, i);
  if (!is_two_sided(*r, d) || !(up_set(r, d, limits) == f)) return std::nullopt;
  return d;
}

}  // namespace ringscope
