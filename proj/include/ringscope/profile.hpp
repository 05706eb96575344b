#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringscope/hom.hpp"
#include "ringscope/torsion.hpp"

namespace ringscope {

// Representatives of the cyclic modules of a ring, prepared once for the many
// relative tests run against them.
class CyclicCatalog {
 public:
  explicit CyclicCatalog(RingPtr r, const Limits& limits = {});

  const RingPtr& ring() const { return ring_; }
  const Limits& limits() const { return limits_; }
  std::size_t size() const { return modules_.size(); }
  const RightModule& module(std::size_t i) const { return modules_[i]; }
  const PreparedModule& prepared(std::size_t i) const { return prepared_[i]; }
  const RightIdeal& annihilator(std::size_t i) const { return annihilators_[i]; }
  bool semisimple(std::size_t i) const { return semisimple_[i]; }
  // Index of the representative isomorphic to a cyclic module.
  std::optional<std::size_t> find(const RightModule& m) const;

 private:
  RingPtr ring_;
  Limits limits_;
  std::vector<RightModule> modules_;
  std::vector<PreparedModule> prepared_;
  std::vector<RightIdeal> annihilators_;
  std::vector<bool> semisimple_;
};

// A set of catalog indices.
struct CyclicFingerprint {
  std::vector<bool> members;

  std::size_t count() const;
  bool subset_of(const CyclicFingerprint& other) const;
  friend bool operator==(const CyclicFingerprint&, const CyclicFingerprint&) = default;
};

enum class ProfileKind { i, p };
std::string kind_name(ProfileKind k);

CyclicFingerprint inj_fingerprint(const CyclicCatalog& c, const RightModule& m);
CyclicFingerprint proj_fingerprint(const CyclicCatalog& c, const RightModule& m);
CyclicFingerprint fingerprint(const CyclicCatalog& c, const RightModule& m, ProfileKind k);
CyclicFingerprint intersect(const CyclicFingerprint& a, const CyclicFingerprint& b);
// {C : C I = 0}; the cyclic part of Mod-R/I.
CyclicFingerprint killed_by(const CyclicCatalog& c, const RightIdeal& i);
CyclicFingerprint semisimple_cyclics(const CyclicCatalog& c);

// Fingerprint equals the semisimple cyclics.
bool is_poor(const CyclicCatalog& c, const RightModule& m, ProfileKind k);

// R/J(R), and the direct sum of one copy of each simple module.
RightModule top_module(const RingPtr& r, const Limits& limits = {});
RightModule sum_of_simples(const CyclicCatalog& c);

struct ProfileNode {
  RightIdeal ideal;     // two-sided, inside J(R)
  LinearFilter filter;  // eta(ideal)
  CyclicFingerprint fingerprint;
  std::optional<RightModule> witness;
  std::string witness_note;
};

struct ProfileReport {
  ProfileKind kind = ProfileKind::i;
  std::string ring_label;
  std::vector<ProfileNode> nodes;  // index = lattice element
  FiniteLattice lattice;           // bottom = smallest class
  StructureReport structure;
  bool has_middle_class = false;
};

struct ProfileOptions {
  // search enumerate_modules for injectivity witnesses of every node
  bool search_witnesses = false;
  EnumerationBounds bounds;
};

// Built from the brute-force filter enumeration (filters containing every
// maximal right ideal), ordered by inclusion, and cross-checked against the
// structural description {eta(I) : I two-sided, I <= J(R)}. A mismatch, or a
// lattice not anti-isomorphic to ideals_in_radical, throws InternalError.
ProfileReport i_profile(const RingPtr& r, const ProfileOptions& opts = {},
                        const Limits& limits = {});
// Nodes are the projectivity fingerprints of R/I for two-sided I <= J(R),
// ordered by inclusion; each is verified to equal {C : C I = 0}. The lattice
// is asserted anti-isomorphic to ideals_in_radical.
ProfileReport p_profile(const RingPtr& r, const ProfileOptions& opts = {},
                        const Limits& limits = {});
ProfileReport profile(const RingPtr& r, ProfileKind k, const ProfileOptions& opts = {},
                      const Limits& limits = {});

bool has_middle_class(const RingPtr& r, ProfileKind k, const Limits& limits = {});

struct RisesResult {
  bool refuted = false;
  std::optional<RightModule> witness;  // M-injective but not N-injective
  std::size_t searched = 0;
};
// Semi-decision for "every M-injective module is N-injective".
RisesResult rises_bounded(const RightModule& m, const RightModule& n,
                          const EnumerationBounds& bounds, const Limits& limits = {});

struct WitnessResult {
  std::optional<RightModule> module;
  std::size_t searched = 0;
  EnumerationBounds bounds;
};
// A module whose domain is Mod-R/I. Kind p returns R/I (verified); kind i
// searches enumerate_modules.
WitnessResult find_witness(const CyclicCatalog& c, const RightIdeal& i, ProfileKind k,
                           const EnumerationBounds& bounds);

}  // namespace ringscope
