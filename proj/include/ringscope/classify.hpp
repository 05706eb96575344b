#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringscope/profile.hpp"

namespace ringscope {

bool is_semisimple_ring(const RingPtr& r, const Limits& limits = {});
// Non-units closed under addition.
bool is_local(const RingPtr& r, const Limits& limits = {});
bool is_chain_ring(const RingPtr& r, const Limits& limits = {});
// Any two nonzero right ideals meet nontrivially.
bool is_uniform_ring(const RingPtr& r, const Limits& limits = {});
// R_R injective (Baer test; finite rings are noetherian).
bool is_qf(const RingPtr& r, const Limits& limits = {});

struct SuperQfResult {
  bool holds = true;
  std::optional<RightIdeal> ideal;  // first I with R/I not QF
};
// Every factor ring R/I, I two-sided, is QF.
SuperQfResult is_super_qf(const RingPtr& r, const Limits& limits = {});

// M is semisimple and its simple summands are pairwise isomorphic.
bool socle_homogeneous(const RightModule& m, const Limits& limits = {});

RingPtr factor_ring(const RingPtr& r, const RightIdeal& i);

enum class CheckStatus { pass, fail, skipped };
std::string status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;  // certificate on failure, reason when skipped
};

struct VerifyReport {
  std::string ring_label;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  EnumerationBounds bounds;
  // partner rings S for the product law, checked against R x S
  std::vector<RingSpec> product_partners;
  // the ring's own spec, needed to build R x S
  std::optional<RingSpec> spec;
};

// Runs checks V1-V17 and records each as pass, fail or skipped.
VerifyReport verify_suite(const RingPtr& r, const VerifyOptions& opts = {},
                          const Limits& limits = {});

}  // namespace ringscope
