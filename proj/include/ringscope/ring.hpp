#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringscope/errors.hpp"
#include "ringscope/exactla.hpp"

namespace ringscope {

// Lazily computed structure shared by all users of a ring.
struct RingMemo {
  std::mutex mutex;
  std::optional<std::vector<ModMatrix>> right_ideals;
  std::optional<ModMatrix> jacobson;
  std::optional<ModMatrix> socle;
};

// A finite associative ring with identity, presented by its additive group
// Z/n_1 + ... + Z/n_d and the structure constants g_i * g_j = mul(i, j).
//
// A FiniteRing constructed directly is only shape-checked; use make_ring or
// ring_from_spec for a validated one.
class FiniteRing {
 public:
  FiniteRing(std::vector<Int> orders, std::vector<std::vector<Coords>> mul,
             Coords one, std::string label = {});

  std::size_t rank() const { return orders_.size(); }
  const std::vector<Int>& orders() const { return orders_; }
  // exponent of the additive group, the modulus of every computation
  Int characteristic() const { return characteristic_; }
  std::uint64_t order() const { return group_order(orders_); }
  const Coords& mul(std::size_t i, std::size_t j) const { return mul_[i][j]; }
  const Coords& one() const { return one_; }
  const std::string& label() const { return label_; }

  // Additive generators that generate the ring as a unital ring. Closure of
  // anything under right (or left) multiplication by these equals closure
  // under multiplication by all of R.
  const std::vector<std::size_t>& algebra_generators() const {
    return algebra_generators_;
  }

  Coords zero() const { return Coords(rank(), 0); }
  Coords generator(std::size_t i) const;
  Coords reduce(Coords x) const;
  Coords add(const Coords& a, const Coords& b) const;
  Coords sub(const Coords& a, const Coords& b) const;
  Coords scale(const Coords& a, Int c) const;
  Coords multiply(const Coords& a, const Coords& b) const;

  // Mixed-radix indexing of elements, coordinate 0 varying fastest.
  Coords element(std::uint64_t index) const;
  std::uint64_t index_of(const Coords& x) const;

  // Left multiplication x -> r*x as a matrix over the additive generators.
  ModMatrix left_multiplication(const Coords& r) const;
  ModMatrix right_multiplication(const Coords& r) const;

  RingMemo& memo() const { return *memo_; }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.orders_ == b.orders_ && a.mul_ == b.mul_ && a.one_ == b.one_;
  }

 private:
  std::vector<Int> orders_;
  std::vector<std::vector<Coords>> mul_;
  Coords one_;
  std::string label_;
  Int characteristic_ = 1;
  std::vector<std::size_t> algebra_generators_;
  std::shared_ptr<RingMemo> memo_ = std::make_shared<RingMemo>();
};

using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingViolation {
  enum class Kind { shape, well_definedness, unit_law, associativity };
  Kind kind;
  std::vector<std::size_t> generators;  // offending generator indices
  std::string message;
};

// Checks well-definedness of the bilinear product on the presented group,
// the unit laws, and associativity on all generator triples. Returns the
// first violation found.
std::optional<RingViolation> verify_ring_axioms(const FiniteRing& r);

// Builds and validates; throws InvalidInput on an axiom violation.
RingPtr make_ring(std::vector<Int> orders, std::vector<std::vector<Coords>> mul,
                  Coords one, std::string label = {});

// ---------------------------------------------------------------------------
// Constructor specifications.

struct RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

struct ZModSpec {
  Int n = 0;
  friend bool operator==(const ZModSpec&, const ZModSpec&) = default;
};
struct TableSpec {
  std::vector<Int> orders;
  std::vector<std::vector<Coords>> mul;
  Coords one;
  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};
// Path algebra of a finite acyclic quiver over F_p. Vertices are 1..vertices;
// an arrow is (source, target). The product p*q of paths is "first q, then
// p", nonzero iff source(p) == target(q); hence alpha = e_t * alpha * e_s.
struct PathAlgebraSpec {
  Int p = 2;
  Int vertices = 0;
  std::vector<std::pair<Int, Int>> arrows;
  friend bool operator==(const PathAlgebraSpec&, const PathAlgebraSpec&) = default;
};
struct MatrixSpec {
  RingSpecPtr base;
  Int size = 1;
};
struct ProductSpec {
  std::vector<RingSpec> factors;
};
// Factor ring by the two-sided ideal generated by the given elements.
struct QuotientSpec {
  RingSpecPtr base;
  std::vector<Coords> generators;
};
struct OppositeSpec {
  RingSpecPtr base;
};

struct RingSpec {
  std::variant<ZModSpec, TableSpec, PathAlgebraSpec, MatrixSpec, ProductSpec,
               QuotientSpec, OppositeSpec>
      node;
  std::string label;
};

bool operator==(const RingSpec& a, const RingSpec& b);

RingPtr ring_from_spec(const RingSpec& spec, const Limits& limits = {});

// Convenience constructors used across the library and tests.
RingSpec zmod_spec(Int n);
RingSpec matrix_spec(RingSpec base, Int size);
RingSpec product_spec(std::vector<RingSpec> factors);
RingSpec opposite_spec(RingSpec base);
RingSpec quotient_spec(RingSpec base, std::vector<Coords> generators);
RingSpec path_algebra_spec(Int p, Int vertices,
                           std::vector<std::pair<Int, Int>> arrows);
RingSpec table_spec(std::vector<Int> orders,
                    std::vector<std::vector<Coords>> mul, Coords one);

// Basis of a path algebra: paths as arrow-index sequences in traversal
// order, trivial paths carry their vertex. Exposed for labelling.
struct QuiverPath {
  Int source = 0, target = 0;
  std::vector<std::size_t> arrows;
};
std::vector<QuiverPath> quiver_paths(const PathAlgebraSpec& spec);

// Factor ring R/I for a two-sided ideal given by a Howell generating matrix
// (column moduli = r.orders()). Also returns the projection R -> R/I.
struct QuotientRing {
  RingPtr ring;
  GroupPresentation presentation;
};
QuotientRing quotient_ring(const FiniteRing& r, const ModMatrix& ideal,
                           std::string label = {});

// Elements with a two-sided inverse.
std::vector<Coords> units(const FiniteRing& r, const Limits& limits = {});
// Idempotents commuting with everything; {0, 1} iff r is indecomposable.
std::vector<Coords> central_idempotents(const FiniteRing& r,
                                        const Limits& limits = {});

std::string format_coords(const Coords& c);

}  // namespace ringscope
