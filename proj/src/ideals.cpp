#include "ringscope/ideals.hpp"

#include <algorithm>
#include <sstream>

namespace ringscope {

namespace {

RightModule regular(const RingPtr& r) { return regular_module(r); }

}  // namespace

std::vector<RightIdeal> right_ideals(const RingPtr& r, const Limits& limits) {
  {
    std::lock_guard lock(r->memo().mutex);
    if (r->memo().right_ideals) {
      std::vector<RightIdeal> out;
      for (const auto& m : *r->memo().right_ideals) out.push_back({m});
      return out;
    }
  }
  auto subs = submodules(regular(r), limits);
  std::lock_guard lock(r->memo().mutex);
  std::vector<ModMatrix> store;
  for (const auto& s : subs) store.push_back(s.gens);
  r->memo().right_ideals = std::move(store);
  return subs;
}

bool is_two_sided(const FiniteRing& r, const RightIdeal& i) {
  // right closure is part of being a right ideal; left multiplication by
  // algebra generators suffices by bilinearity and associativity
  for (std::size_t k = 0; k < i.gens.rows(); ++k)
    for (std::size_t g : r.algebra_generators())
      if (!in_span(i.gens, r.multiply(r.generator(g), i.gens.row_vector(k)))) return false;
  return true;
}

std::vector<RightIdeal> two_sided_ideals(const RingPtr& r, const Limits& limits) {
  std::vector<RightIdeal> out;
  for (auto& i : right_ideals(r, limits))
    if (is_two_sided(*r, i)) out.push_back(std::move(i));
  return out;
}

std::vector<RightIdeal> maximal_right_ideals(const RingPtr& r, const Limits& limits) {
  auto all = right_ideals(r, limits);
  const std::uint64_t full = r->order();
  std::vector<RightIdeal> out;
  for (const auto& i : all) {
    if (i.order() == full) continue;
    bool maximal = true;
    for (const auto& k : all)
      if (k.order() > i.order() && k.order() < full && k.contains(i)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

RightIdeal zero_ideal(const FiniteRing& r) { return {ModMatrix(r.characteristic(), r.orders())}; }

RightIdeal unit_ideal(const FiniteRing& r) {
  ModMatrix m(r.characteristic(), r.orders());
  for (std::size_t i = 0; i < r.rank(); ++i) m.append_row(r.generator(i));
  return {howell_form(m)};
}

RightIdeal ideal_product(const FiniteRing& r, const RightIdeal& i, const RightIdeal& k) {
  ModMatrix m(r.characteristic(), r.orders());
  for (std::size_t a = 0; a < i.gens.rows(); ++a)
    for (std::size_t b = 0; b < k.gens.rows(); ++b)
      m.append_row(r.multiply(i.gens.row_vector(a), k.gens.row_vector(b)));
  return {howell_form(m)};
}

RightIdeal two_sided_closure(const FiniteRing& r, const std::vector<Coords>& xs) {
  ModMatrix s = howell_form(ModMatrix(r.characteristic(), r.orders(), xs));
  while (true) {
    ModMatrix next = s;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t g : r.algebra_generators()) {
        next.append_row(r.multiply(r.generator(g), s.row_vector(i)));
        next.append_row(r.multiply(s.row_vector(i), r.generator(g)));
      }
    next = howell_form(next);
    if (next == s) return {s};
    s = std::move(next);
  }
}

RightIdeal colon(const FiniteRing& r, const RightIdeal& i, const Coords& x) {
  return {preimage_of_span(r.orders(), r.left_multiplication(x), i.gens)};
}

std::size_t nilpotency_index(const FiniteRing& r, const RightIdeal& i) {
  RightIdeal p = i;
  for (std::size_t k = 1;; ++k) {
    if (p.gens.empty()) return k;
    RightIdeal next = ideal_product(r, p, i);
    if (next == p) return 0;
    p = std::move(next);
  }
}

RightIdeal jacobson_radical(const RingPtr& r, const Limits& limits) {
  {
    std::lock_guard lock(r->memo().mutex);
    if (r->memo().jacobson) return {*r->memo().jacobson};
  }
  RightIdeal j = unit_ideal(*r);
  for (const auto& m : maximal_right_ideals(r, limits)) j = intersection(j, m);
  if (!j.gens.empty() && nilpotency_index(*r, j) == 0)
    throw InternalError("jacobson_radical: intersection of maximal right ideals is not nilpotent");
  if (!is_semisimple_module(quotient_module(regular(r), j).module, limits))
    throw InternalError("jacobson_radical: R/J is not semisimple");
  std::lock_guard lock(r->memo().mutex);
  r->memo().jacobson = j.gens;
  return j;
}

RightIdeal right_socle(const RingPtr& r, const Limits& limits) {
  {
    std::lock_guard lock(r->memo().mutex);
    if (r->memo().socle) return {*r->memo().socle};
  }
  RightIdeal s = socle(regular(r), limits);
  std::lock_guard lock(r->memo().mutex);
  r->memo().socle = s.gens;
  return s;
}

bool is_essential(const RingPtr& r, const RightIdeal& i, const Limits& limits) {
  for (const auto& k : right_ideals(r, limits)) {
    if (k.gens.empty()) continue;
    if (intersection(i, k).gens.empty()) return false;
  }
  return true;
}

IdealLattice inclusion_lattice(const std::vector<RightIdeal>& family,
                               const std::vector<std::string>& labels) {
  const std::size_t n = family.size();
  std::vector<bool> leq(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = family[b].contains(family[a]);
  std::vector<std::string> names = labels;
  if (names.empty())
    for (std::size_t a = 0; a < n; ++a) names.push_back("I" + std::to_string(a));
  return IdealLattice{family, build_lattice_from_order(std::move(names), std::move(leq))};
}

IdealLattice ideals_in_radical(const RingPtr& r, const Limits& limits) {
  RightIdeal j = jacobson_radical(r, limits);
  std::vector<RightIdeal> inside;
  std::vector<std::string> labels;
  for (auto& i : two_sided_ideals(r, limits))
    if (j.contains(i)) {
      labels.push_back(format_ideal(*r, i));
      inside.push_back(std::move(i));
    }
  auto out = inclusion_lattice(inside, labels);
  // sum and intersection of ideals inside J stay inside J
  for (std::size_t a = 0; a < inside.size(); ++a)
    for (std::size_t b = 0; b < inside.size(); ++b) {
      if (!(inside[out.lattice.meet(a, b)] == intersection(inside[a], inside[b])) ||
          !(inside[out.lattice.join(a, b)] == sum(inside[a], inside[b])))
        throw InternalError("ideals_in_radical: lattice operations disagree with sum and intersection");
    }
  return out;
}

IdealLattice ideal_lattice(const RingPtr& r, const Limits& limits) {
  auto all = two_sided_ideals(r, limits);
  std::vector<std::string> labels;
  for (const auto& i : all) labels.push_back(format_ideal(*r, i));
  return inclusion_lattice(all, labels);
}

std::string format_ideal(const FiniteRing& r, const RightIdeal& i) {
  if (i.gens.empty()) return "0";
  if (i.order() == r.order()) return "R";
  std::ostringstream os;
  os << "span{";
  for (std::size_t k = 0; k < i.gens.rows(); ++k)
    os << (k ? "," : "") << format_coords(i.gens.row_vector(k));
  os << "}";
  return os.str();
}

}  // namespace ringscope
