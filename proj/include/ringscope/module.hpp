#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringscope/errors.hpp"
#include "ringscope/exactla.hpp"
#include "ringscope/ring.hpp"

namespace ringscope {

// A finite right module over a FiniteRing. The additive group is
// Z/m_1 + ... + Z/m_k; the ring generator g_j acts by x -> x * action(j).
// All coordinates are taken modulo the ring characteristic, which every m_i
// divides. Copies share their data.
class RightModule {
 public:
  RightModule() = default;
  // Shape-checked only; see make_module.
  RightModule(RingPtr ring, std::vector<Int> orders, std::vector<ModMatrix> action);

  const FiniteRing& ring() const { return *data_->ring; }
  const RingPtr& ring_ptr() const { return data_->ring; }
  std::size_t rank() const { return data_->orders.size(); }
  const std::vector<Int>& orders() const { return data_->orders; }
  std::uint64_t order() const { return group_order(data_->orders); }
  Int modulus() const { return data_->ring->characteristic(); }
  bool is_zero() const { return rank() == 0; }
  const ModMatrix& action(std::size_t g) const { return data_->action[g]; }

  Coords zero() const { return Coords(rank(), 0); }
  Coords basis(std::size_t i) const;
  Coords reduce(Coords x) const;
  Coords add(const Coords& a, const Coords& b) const;
  Coords scale(const Coords& a, Int c) const;
  Coords act(const Coords& x, const Coords& r) const;      // x * r
  Coords act_generator(const Coords& x, std::size_t g) const;
  Coords element(std::uint64_t index) const;

  // Empty generating matrix over this module's group.
  ModMatrix empty_span() const { return ModMatrix(modulus(), orders()); }
  ModMatrix full_span() const;

  friend bool operator==(const RightModule& a, const RightModule& b);

 private:
  struct Data {
    RingPtr ring;
    std::vector<Int> orders;
    std::vector<ModMatrix> action;
  };
  std::shared_ptr<const Data> data_;
};

struct ActionViolation {
  std::string message;
};

// Checks well-definedness of every action matrix, the unit law and
// x(g_i g_j) = (x g_i) g_j on all basis vectors.
std::optional<ActionViolation> verify_module(const RightModule& m);
RightModule make_module(RingPtr ring, std::vector<Int> orders,
                        std::vector<ModMatrix> action);

// An additive map commuting with the action; row i of matrix is the image of
// the basis element e_i of the source.
struct ModuleMap {
  RightModule source;
  RightModule target;
  ModMatrix matrix;

  Coords apply(const Coords& x) const { return vec_mat(x, matrix); }
  ModMatrix image() const { return howell_form(matrix); }
  ModMatrix kernel() const { return kernel_of_map(source.orders(), matrix); }
};

ModuleMap compose(const ModuleMap& first, const ModuleMap& second);  // second after first
ModuleMap identity_map(const RightModule& m);
ModuleMap zero_map(const RightModule& a, const RightModule& b);
bool is_module_map(const ModuleMap& f);

// A submodule of a given parent, by its Howell generating matrix. Equality of
// generating matrices is equality of submodules.
struct Submodule {
  ModMatrix gens;

  std::uint64_t order() const { return span_order(gens); }
  bool contains(const Coords& x) const { return in_span(gens, x); }
  bool contains(const Submodule& other) const;
  friend bool operator==(const Submodule&, const Submodule&) = default;
  friend auto operator<=>(const Submodule& a, const Submodule& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.gens <=> b.gens;
  }
};

Submodule zero_submodule(const RightModule& m);
Submodule whole_submodule(const RightModule& m);
// Smallest submodule containing the given elements.
Submodule generated_submodule(const RightModule& m, const std::vector<Coords>& xs);
Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersection(const Submodule& a, const Submodule& b);
bool is_submodule(const RightModule& m, const ModMatrix& gens);

// ---------------------------------------------------------------------------
// Construction.

RightModule regular_module(RingPtr r);
RightModule zero_module(RingPtr r);
// R/I for a right ideal I (a submodule of the regular module).
RightModule cyclic_module(RingPtr r, const Submodule& right_ideal);
RightModule direct_sum(const std::vector<RightModule>& summands);
// R^k / span(relations); relation rows are in R^k coordinates.
RightModule quotient_of_free(RingPtr r, std::size_t rank,
                             const std::vector<Coords>& relations);

struct QuotientModule {
  RightModule module;
  ModuleMap projection;
};
QuotientModule quotient_module(const RightModule& n, const Submodule& k);

// A submodule presented as a module in its own right, with its inclusion.
struct SubmoduleModule {
  RightModule module;
  ModuleMap inclusion;
};
SubmoduleModule submodule_module(const RightModule& n, const Submodule& k);

// ---------------------------------------------------------------------------
// Structure.

// The complete canonically sorted submodule list, 0 first and N last.
std::vector<Submodule> submodules(const RightModule& n, const Limits& limits = {});
// Distinct cyclic submodules xR, canonically sorted.
std::vector<Submodule> cyclic_submodules(const RightModule& n,
                                         const Limits& limits = {});
Submodule cyclic_submodule(const RightModule& n, const Coords& x);

Submodule socle(const RightModule& m, const Limits& limits = {});
struct SocleSeries {
  std::vector<Submodule> chain;  // 0 = chain[0] < ... < chain.back() = M
  std::size_t loewy_length = 0;
};
SocleSeries socle_series(const RightModule& m, const Limits& limits = {});
// M > MJ > MJ^2 > ... > 0
std::vector<Submodule> radical_series(const RightModule& m, const Limits& limits = {});
Submodule radical(const RightModule& m, const Limits& limits = {});
Submodule singular_submodule(const RightModule& m, const Limits& limits = {});
bool is_semisimple_module(const RightModule& m, const Limits& limits = {});
bool is_simple_module(const RightModule& m, const Limits& limits = {});

// Right ideals as Howell matrices over the ring's additive group.
ModMatrix annihilator(const RightModule& m);
ModMatrix element_annihilator(const RightModule& m, const Coords& x);
// Submodule M * I for a set of ring elements spanning I additively.
Submodule module_times(const RightModule& m, const Submodule& sub, const ModMatrix& ideal);

// Cheap isomorphism invariants; equal for isomorphic modules.
struct ModuleInvariants {
  std::uint64_t order = 0;
  std::vector<Int> elementary_divisors;
  ModMatrix annihilator;
  std::vector<std::uint64_t> kernel_orders;  // per algebra generator
  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};
ModuleInvariants module_invariants(const RightModule& m);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<ModuleMap> map;
};
IsomorphismResult is_isomorphic_modules(const RightModule& a, const RightModule& b,
                                        const Limits& limits = {});

// Representatives R/I of the isomorphism classes of cyclic modules, sorted by
// order (0 first, R last).
std::vector<RightModule> cyclic_modules_up_to_iso(RingPtr r, const Limits& limits = {});

struct EnumerationBounds {
  std::size_t max_free_rank = 2;
  std::uint64_t max_order = 64;
};
// One module per isomorphism class among the quotients R^k / L with
// k <= max_free_rank and |R^k / L| <= max_order, sorted by order.
std::vector<RightModule> enumerate_modules(RingPtr r, const EnumerationBounds& bounds,
                                           const Limits& limits = {});

std::string describe_module(const RightModule& m);

}  // namespace ringscope
