#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltamix/config.hpp"
#include "deltamix/mixing.hpp"

namespace deltamix {

// "# deltamix <version>\n# config <line>\n" — every text artifact starts so
std::string artifact_header(const RunConfig& config);

uint64_t fnv1a64(const std::string& data);
std::string hex64(uint64_t value);

// versioned tree document; independence evidence is pinned by a digest of
// the recomputable witness table
std::string write_tree(const ConstructionTree& tree, const RunConfig& config);
ConstructionTree parse_tree(const std::string& text,
                            std::vector<uint64_t>& level_digests);

// full replay: structural invariants plus digest comparison; returns one
// human-readable line per verified aspect, throws InvariantViolation on the
// first failure
std::vector<std::string> verify_tree_text(const std::string& text);

uint64_t certificate_digest(const IndependenceCertificate& cert);

}  // namespace deltamix
