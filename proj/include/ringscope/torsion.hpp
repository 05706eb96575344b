#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringscope/ideals.hpp"

namespace ringscope {

// A set of right ideals, stored sorted. Whether it satisfies F1-F4 is decided
// by check_linear_filter; the constructors of this module always do.
struct LinearFilter {
  std::vector<RightIdeal> members;

  bool contains(const RightIdeal& i) const;
  std::size_t size() const { return members.size(); }
  friend bool operator==(const LinearFilter&, const LinearFilter&) = default;
  friend auto operator<=>(const LinearFilter& a, const LinearFilter& b) {
    if (auto c = a.members.size() <=> b.members.size(); c != 0) return c;
    return a.members <=> b.members;
  }
};

LinearFilter make_filter(std::vector<RightIdeal> members);

enum class FilterAxiom { F1, F2, F3, F4 };
std::string axiom_name(FilterAxiom a);

struct FilterViolation {
  FilterAxiom axiom;
  std::string message;
};

// Literal check of F1 (R in F), F2 (meets), F3 (up-closure among right
// ideals), F4 ((I : r) in F for every ring element r). First violation wins.
std::optional<FilterViolation> check_linear_filter(const RingPtr& r,
                                                   const std::vector<RightIdeal>& s,
                                                   const Limits& limits = {});
bool is_linear_filter(const RingPtr& r, const std::vector<RightIdeal>& s,
                      const Limits& limits = {});

// eta(I) = right ideals containing I; I must be two-sided.
LinearFilter eta_filter(const RingPtr& r, const RightIdeal& i, const Limits& limits = {});

// Every linear filter (optionally only those containing every maximal right
// ideal), by enumerating antichains of the right-ideal poset.
std::vector<LinearFilter> all_linear_filters(const RingPtr& r, bool above_all_maximal,
                                             const Limits& limits = {});

// Filter of right ideals containing a finite intersection of element
// annihilators of M.
LinearFilter sigma_filter(const RightModule& m, const Limits& limits = {});
// N in sigma[M]: ann(x) in sigma_filter(M) for every x in N.
bool sigma_contains(const RightModule& m, const RightModule& n, const Limits& limits = {});

LinearFilter filter_meet(const LinearFilter& a, const LinearFilter& b);
// Least linear filter containing both.
LinearFilter filter_join(const RingPtr& r, const LinearFilter& a, const LinearFilter& b,
                         const Limits& limits = {});

// The two-sided ideal I with F = eta(I), when there is one.
std::optional<RightIdeal> filter_base(const RingPtr& r, const LinearFilter& f,
                                      const Limits& limits = {});

}  // namespace ringscope
