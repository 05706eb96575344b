#pragma once

#include <optional>
#include <vector>

#include "ringscope/module.hpp"

namespace ringscope {

// Hom_R(A, B) as a subgroup of B^rank(A): a map is flattened row by row.
class HomGroup {
 public:
  HomGroup(RightModule source, RightModule target, ModMatrix basis);

  const RightModule& source() const { return source_; }
  const RightModule& target() const { return target_; }
  // Howell form; column moduli = target orders repeated rank(source) times
  const ModMatrix& basis() const { return basis_; }
  std::uint64_t order() const { return span_order(basis_); }

  ModuleMap to_map(std::span<const Int> flat) const;
  Coords flatten(const ModuleMap& f) const;
  std::vector<ModuleMap> generators() const;
  // Flattened column moduli of the ambient group.
  std::vector<Int> ambient_moduli() const;

 private:
  RightModule source_, target_;
  ModMatrix basis_;
};

HomGroup hom_group(const RightModule& a, const RightModule& b);
std::vector<ModuleMap> hom_basis(const RightModule& a, const RightModule& b);

// A module N together with its submodules, each presented as a module with
// its inclusion, and the corresponding quotients. Reused across many tests
// against the same N.
class PreparedModule {
 public:
  explicit PreparedModule(RightModule n, const Limits& limits = {});

  struct Frame {
    Submodule sub;
    RightModule as_module;
    ModuleMap inclusion;
    RightModule quotient;
    ModuleMap projection;
  };

  const RightModule& module() const { return n_; }
  const std::vector<Frame>& frames() const { return frames_; }

 private:
  RightModule n_;
  std::vector<Frame> frames_;
};

struct InjectivityResult {
  bool holds = true;
  // On failure: K <= N and a map phi: K -> M (on the presented K) with no
  // extension to N.
  std::optional<Submodule> submodule;
  std::optional<ModuleMap> map;
};

struct ProjectivityResult {
  bool holds = true;
  // On failure: L <= N and psi: M -> N/L that does not lift to N.
  std::optional<Submodule> submodule;
  std::optional<ModuleMap> map;
};

InjectivityResult is_relatively_injective(const RightModule& m, const PreparedModule& n);
InjectivityResult is_relatively_injective(const RightModule& m, const RightModule& n,
                                          const Limits& limits = {});
ProjectivityResult is_relatively_projective(const RightModule& m, const PreparedModule& n);
ProjectivityResult is_relatively_projective(const RightModule& m, const RightModule& n,
                                            const Limits& limits = {});

bool is_injective(const RightModule& m, const Limits& limits = {});
bool is_projective(const RightModule& m, const Limits& limits = {});

enum class Kind { injective, projective };
bool is_quasi(const RightModule& m, Kind kind, const Limits& limits = {});

// Sum of f(N) over all f in Hom(N, target), N ranging over the sources.
Submodule trace(const std::vector<RightModule>& sources, const RightModule& target);

}  // namespace ringscope
