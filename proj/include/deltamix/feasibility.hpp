#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "deltamix/bitmat.hpp"
#include "deltamix/cylinder.hpp"
#include "deltamix/subshift.hpp"
#include "deltamix/word.hpp"

namespace deltamix {

// Window placements (offset, word) unify into per-position symbol constraints.
// Returns false on a symbol conflict inside an overlap.
struct Placement {
  int offset;
  const Word* word;
};
bool merge_placements(const std::vector<Placement>& placements,
                      std::vector<std::pair<int, Symbol>>& out);

// Powers of the adjacency matrix, grown on demand. One instance per query
// family; cheap to build and keeps the public operations pure.
class ReachCache {
 public:
  explicit ReachCache(const SubshiftSpec& spec) : spec_(&spec) {
    powers_.push_back(BitMat::identity(spec.state_count()));
    powers_.push_back(spec.adjacency());
  }
  const BitMat& power(int t);

 private:
  const SubshiftSpec* spec_;
  std::vector<BitMat> powers_;
};

// Decides whether some point of the subshift matches every fixed symbol.
// Fixed positions translate into state masks; unconstrained stretches are
// bridged with adjacency powers.
bool constraints_feasible(const SubshiftSpec& spec, ReachCache& reach,
                          const std::vector<std::pair<int, Symbol>>& fixed);

// Lexicographically smallest allowed word of length `span` matching the
// constraints, or nullopt.
std::optional<Word> smallest_witness(const SubshiftSpec& spec, int span,
                                     const std::vector<std::pair<int, Symbol>>& fixed);

// Lexicographically smallest allowed extension of `w` to length `target`.
Word extend_word(const SubshiftSpec& spec, const Word& w, int target);

// Feasibility of placing one cylinder-union member at each offset. Tries
// member combinations in lexicographic order with conflict pruning; the
// number of attempted combinations is capped.
bool union_placements_feasible(const SubshiftSpec& spec, ReachCache& reach,
                               const std::vector<std::pair<int, const CylinderUnion*>>& slots,
                               long long combo_cap = 1 << 20);

// Same, but returns the lexicographically smallest witness word across all
// feasible combinations (length = max window end over the chosen combo,
// at least `min_span`).
std::optional<Word> union_placements_witness(
    const SubshiftSpec& spec, ReachCache& reach,
    const std::vector<std::pair<int, const CylinderUnion*>>& slots,
    int min_span = 0, long long combo_cap = 1 << 20);

}  // namespace deltamix
