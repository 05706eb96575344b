#pragma once

#include <vector>

#include "ringscope/lattice.hpp"
#include "ringscope/module.hpp"

namespace ringscope {

// Right ideals are submodules of the regular module, i.e. Howell matrices
// over the ring's additive group.
using RightIdeal = Submodule;

std::vector<RightIdeal> right_ideals(const RingPtr& r, const Limits& limits = {});
bool is_two_sided(const FiniteRing& r, const RightIdeal& i);
std::vector<RightIdeal> two_sided_ideals(const RingPtr& r, const Limits& limits = {});
std::vector<RightIdeal> maximal_right_ideals(const RingPtr& r, const Limits& limits = {});

// Intersection of the maximal right ideals. Verified nilpotent with
// semisimple factor ring; a failure throws InternalError.
RightIdeal jacobson_radical(const RingPtr& r, const Limits& limits = {});
// Soc(R_R)
RightIdeal right_socle(const RingPtr& r, const Limits& limits = {});

bool is_essential(const RingPtr& r, const RightIdeal& i, const Limits& limits = {});

RightIdeal zero_ideal(const FiniteRing& r);
RightIdeal unit_ideal(const FiniteRing& r);
// Additive span of products a*b, a in I, b in K.
RightIdeal ideal_product(const FiniteRing& r, const RightIdeal& i, const RightIdeal& k);
// Smallest two-sided ideal containing the elements.
RightIdeal two_sided_closure(const FiniteRing& r, const std::vector<Coords>& xs);
// (I : x) = {y : x*y in I}
RightIdeal colon(const FiniteRing& r, const RightIdeal& i, const Coords& x);
// Smallest k >= 1 with I^k = 0, or 0 when I is not nilpotent.
std::size_t nilpotency_index(const FiniteRing& r, const RightIdeal& i);

struct IdealLattice {
  std::vector<RightIdeal> ideals;  // index = lattice element
  FiniteLattice lattice;           // inclusion
};
// Two-sided ideals contained in J(R), ordered by inclusion.
IdealLattice ideals_in_radical(const RingPtr& r, const Limits& limits = {});
// All two-sided ideals ordered by inclusion.
IdealLattice ideal_lattice(const RingPtr& r, const Limits& limits = {});

// Lattice on a family of submodules closed under sum and intersection.
IdealLattice inclusion_lattice(const std::vector<RightIdeal>& family,
                               const std::vector<std::string>& labels = {});

std::string format_ideal(const FiniteRing& r, const RightIdeal& i);

}  // namespace ringscope
