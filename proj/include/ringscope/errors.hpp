#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringscope {

// Malformed user input: bad files, ill-formed specs, failed ring axioms.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration or order guard was hit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagreed. Always a bug (or a counterexample
// to a structure theorem), never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Limits {
  std::uint64_t max_ring_order = 65536;
  // largest module whose elements we are willing to enumerate
  std::uint64_t max_module_order = 4096;
  // right-ideal count above which filter enumeration is refused
  std::size_t max_filter_ideals = 30;
  std::size_t max_lattice_size = 64;
  // nodes visited by enumerate_modules / antichains visited by filter search
  std::size_t max_candidates = 200000;
  // Hom-group size up to which isomorphism search exhausts the group
  std::uint64_t max_hom_exhaust = std::uint64_t{1} << 20;
};

}  // namespace ringscope
