#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltamix/cylinder.hpp"
#include "deltamix/density.hpp"
#include "deltamix/subshift.hpp"

namespace deltamix {

// selector s ∈ {1,...,k}^J as 1-based set indices aligned with sorted J
using Selector = std::vector<int>;

// J together with one realizing word per selector. When `relative_to` is
// set, every selector intersection is additionally required to meet that set
// at offset 0.
struct IndependenceCertificate {
  std::vector<CylinderUnion> tuple;
  std::optional<CylinderUnion> relative_to;
  std::vector<int> J;  // sorted
  std::vector<std::pair<Selector, Word>> witnesses;  // odometer order

  bool covers_all_selectors() const;
  std::string text() const;
};

struct IndependenceFailure {
  Selector selector;   // first failing selector in odometer order
  std::string reason;  // "conflict" or "unreachable"
};

struct IndependenceResult {
  std::optional<IndependenceCertificate> certificate;
  std::optional<IndependenceFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

// Exhaustively certifies J as an independence set for the tuple, or reports
// the first failing selector. k^|J| is capped.
IndependenceResult independence_check(
    const SubshiftSpec& spec, const std::vector<CylinderUnion>& tuple,
    const std::vector<int>& J, long long cap = 4096,
    const std::optional<CylinderUnion>& relative_to = std::nullopt);

// Greedy growth of J (smallest candidate first) within [0, horizon], up to
// target_size; returns the largest certificate found plus its density data.
struct ExtendResult {
  IndependenceCertificate certificate;
  DensityReport density;
};
ExtendResult independence_extend(
    const SubshiftSpec& spec, const std::vector<CylinderUnion>& tuple,
    const std::vector<int>& J_seed, int horizon, int target_size,
    long long cap = 4096,
    const std::optional<CylinderUnion>& relative_to = std::nullopt);

// Splitting step: a1 = a11 ∪ a12. Keeps the full J on one half when
// possible, otherwise searches subsets J' with |J'| >= ceil(|J|/2),
// larger first, half 1 before half 2.
struct SplitResult {
  int chosen = 0;  // 1 or 2
  IndependenceCertificate certificate;
};
SplitResult split_tuple(const SubshiftSpec& spec,
                        const std::vector<CylinderUnion>& tuple,
                        const CylinderUnion& a11, const CylinderUnion& a12,
                        const std::vector<int>& J, long long cap = 4096);

// replay: witness word realizes the selector's windows (and the relative set)
bool replay_independence_witness(const SubshiftSpec& spec,
                                 const IndependenceCertificate& cert,
                                 const Selector& selector, const Word& word);

}  // namespace deltamix
