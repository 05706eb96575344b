#pragma once

#include <string>

#include "json.hpp"
#include "ringscope/classify.hpp"

namespace ringscope {

using Json = nlohmann::ordered_json;

// Ring files: {"label": ..., "construct": {"type": ..., ...}}. Syntax errors
// report line and column; schema errors report the JSON pointer of the
// offending value. Both throw InvalidInput.
RingSpec parse_ring_file(const std::string& text, const Limits& limits = {});
Json ring_spec_json(const RingSpec& spec);
std::string render_ring_file(const RingSpec& spec);

// Module files: {"type": "regular" | "zero" | "cyclic" | "quotient_of_free" |
// "direct_sum", ...} over a given ring.
RightModule parse_module_file(const std::string& text, const RingPtr& r);

// Reports.
std::string ring_text(const RingPtr& r, const Limits& limits = {});

struct Classification {
  bool semisimple, local, chain, uniform, qf;
  SuperQfResult super_qf;
  bool socle_homogeneous_j;
  bool middle_i, middle_p;
  std::size_t central_idempotents;
};
Classification classify_ring(const RingPtr& r, const Limits& limits = {});
std::string classification_text(const RingPtr& r, const Classification& c);
Json classification_json(const RingPtr& r, const Classification& c);

std::string profile_text(const RingPtr& r, const ProfileReport& p);
// {kind, ring, nodes: [{ideal, filter_size, witness}], order_pairs, flags};
// order_pairs lists every strict a < b.
Json profile_json(const RingPtr& r, const ProfileReport& p);
std::string profile_dot(const ProfileReport& p);

std::string fingerprint_text(const CyclicCatalog& c, const CyclicFingerprint& f, ProfileKind k);
Json fingerprint_json(const CyclicCatalog& c, const CyclicFingerprint& f, ProfileKind k);

std::string verify_text(const VerifyReport& rep);
Json verify_json(const VerifyReport& rep);

}  // namespace ringscope
