#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringscope/errors.hpp"

namespace ringscope {

// A finite lattice on elements 0..size()-1 with explicit order and
// meet/join tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool covers(std::size_t upper, std::size_t lower) const;
  // (lower, upper) pairs of the Hasse diagram, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

  friend FiniteLattice build_lattice_from_order(std::vector<std::string> labels,
                                                std::vector<bool> leq);

 private:
  std::vector<std::string> labels_;
  std::vector<bool> leq_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
};

// From a generating relation: pairs (a, b) mean a <= b. Takes the
// reflexive-transitive closure; throws InvalidInput when the closure is not
// antisymmetric or some pair lacks a meet or join (message names the pair).
FiniteLattice build_lattice(std::vector<std::string> labels,
                            const std::vector<std::pair<std::size_t, std::size_t>>& order_pairs);
// From a full order matrix (row-major, leq[a * n + b]).
FiniteLattice build_lattice_from_order(std::vector<std::string> labels,
                                       std::vector<bool> leq);

FiniteLattice chain_lattice(std::size_t n);
FiniteLattice dual_lattice(const FiniteLattice& l);
FiniteLattice lattice_product(const FiniteLattice& a, const FiniteLattice& b,
                              const Limits& limits = {});

struct StructureReport {
  bool modular = true;
  bool distributive = true;
  bool chain = true;
  bool atomic = true;
  bool coatomic = true;
  std::size_t length = 0;
  std::vector<std::size_t> atoms, coatoms;
  // embedded N5 as (bottom, a, b, c, top) with a < b and c the side element
  std::optional<std::array<std::size_t, 5>> pentagon;
  // embedded M3 as (bottom, x, y, z, top)
  std::optional<std::array<std::size_t, 5>> diamond;
};

StructureReport structure_report(const FiniteLattice& l, const Limits& limits = {});

// Order isomorphism a -> b (order-reversing when anti); result[i] is the image
// of element i of a.
std::optional<std::vector<std::size_t>> are_isomorphic(const FiniteLattice& a,
                                                       const FiniteLattice& b, bool anti,
                                                       const Limits& limits = {});

std::string to_dot(const FiniteLattice& l, const std::vector<std::string>& labels = {},
                   const std::string& name = "lattice");

}  // namespace ringscope
