#include "deltamix/feasibility.hpp"

#include <algorithm>
#include <map>

#include "deltamix/errors.hpp"

namespace deltamix {

bool merge_placements(const std::vector<Placement>& placements,
                      std::vector<std::pair<int, Symbol>>& out) {
  std::map<int, Symbol> fixed;
  for (const Placement& p : placements) {
    const Word& w = *p.word;
    for (int t = 0; t < w.size(); ++t) {
      int pos = p.offset + t;
      auto it = fixed.find(pos);
      if (it == fixed.end()) {
        fixed.emplace(pos, w[t]);
      } else if (it->second != w[t]) {
        return false;
      }
    }
  }
  out.assign(fixed.begin(), fixed.end());
  return true;
}

const BitMat& ReachCache::power(int t) {
  if (t < 0) throw InvalidArgument("negative gap in reachability query");
  while (static_cast<int>(powers_.size()) <= t)
    powers_.push_back(powers_.back().multiply(spec_->adjacency()));
  return powers_[t];
}

namespace {

// state-index masks induced by fixed symbols; span is the word length
// considered, state indices run over [0, span - c].
struct MaskedIndices {
  int span;
  std::vector<std::pair<int, uint64_t>> masks;  // sorted by index
};

MaskedIndices build_masks(const SubshiftSpec& spec,
                          const std::vector<std::pair<int, Symbol>>& fixed) {
  int c = spec.context_len();
  int span = c;
  for (const auto& [pos, sym] : fixed) {
    (void)sym;
    span = std::max(span, pos + 1);
  }
  int last_index = span - c;
  std::map<int, uint64_t> masks;
  uint64_t full = spec.adjacency().full_mask();
  for (const auto& [pos, sym] : fixed) {
    // state at index i covers positions [i, i+c)
    int lo = std::max(0, pos - c + 1);
    int hi = std::min(pos, last_index);
    for (int i = lo; i <= hi; ++i) {
      auto [it, inserted] = masks.emplace(i, full);
      it->second &= spec.symbol_mask(pos - i, sym);
    }
  }
  MaskedIndices out;
  out.span = span;
  out.masks.assign(masks.begin(), masks.end());
  return out;
}

}  // namespace

bool constraints_feasible(const SubshiftSpec& spec, ReachCache& reach,
                          const std::vector<std::pair<int, Symbol>>& fixed) {
  for (const auto& [pos, sym] : fixed) {
    if (pos < 0) throw InvalidArgument("negative position in constraint");
    if (!spec.symbol_alive(sym)) return false;
  }
  if (fixed.empty()) return spec.state_count() > 0;
  MaskedIndices mi = build_masks(spec, fixed);
  uint64_t live = spec.adjacency().full_mask();
  int at = 0;
  for (const auto& [idx, mask] : mi.masks) {
    int gap = idx - at;
    if (gap > 0) {
      const BitMat& p = reach.power(gap);
      uint64_t next = 0;
      uint64_t cur = live;
      while (cur) {
        int i = __builtin_ctzll(cur);
        cur &= cur - 1;
        next |= p.rows[i];
      }
      live = next;
    }
    live &= mask;
    if (!live) return false;
    at = idx;
  }
  return true;
}

std::optional<Word> smallest_witness(
    const SubshiftSpec& spec, int span,
    const std::vector<std::pair<int, Symbol>>& fixed) {
  for (const auto& [pos, sym] : fixed) {
    if (pos >= span) throw InvalidArgument("constraint beyond witness span");
    if (!spec.symbol_alive(sym)) return std::nullopt;
  }
  int c = spec.context_len();
  int n_idx = std::max(1, span - c + 1);
  int eff_span = n_idx + c - 1;  // >= span
  uint64_t full = spec.adjacency().full_mask();

  std::vector<uint64_t> mask(n_idx, full);
  for (const auto& [pos, sym] : fixed) {
    int lo = std::max(0, pos - c + 1);
    int hi = std::min(pos, n_idx - 1);
    for (int i = lo; i <= hi; ++i) mask[i] &= spec.symbol_mask(pos - i, sym);
    if (pos > n_idx - 1 + c - 1) return std::nullopt;  // unreachable by design
  }
  // backward viability
  std::vector<uint64_t> viable(n_idx);
  viable[n_idx - 1] = mask[n_idx - 1];
  for (int i = n_idx - 2; i >= 0; --i)
    viable[i] = spec.adjacency().backward(viable[i + 1]) & mask[i];
  if (!viable[0]) return std::nullopt;

  // greedy lexicographic walk over states
  std::vector<int> path;
  uint64_t options = viable[0];
  int first = -1;
  {
    // states are sorted by word, so the lowest set bit is the lex-min context
    first = __builtin_ctzll(options);
  }
  path.push_back(first);
  for (int i = 1; i < n_idx; ++i) {
    uint64_t next = spec.adjacency().rows[path.back()] & viable[i];
    // choose the successor with the smallest appended symbol
    int best = -1;
    uint64_t cur = next;
    while (cur) {
      int j = __builtin_ctzll(cur);
      cur &= cur - 1;
      if (best < 0 || spec.states()[j].syms.back() < spec.states()[best].syms.back())
        best = j;
    }
    path.push_back(best);
  }
  std::vector<Symbol> syms;
  syms.reserve(eff_span);
  for (int i = 0; i < n_idx; ++i) syms.push_back(spec.states()[path[i]][0]);
  for (int t = 1; t < c; ++t) syms.push_back(spec.states()[path.back()][t]);
  Word w{std::move(syms)};
  if (w.size() > span) w = w.prefix(std::max(span, 1));
  return w;
}

Word extend_word(const SubshiftSpec& spec, const Word& w, int target) {
  if (w.size() >= target) return w;
  std::vector<std::pair<int, Symbol>> fixed;
  for (int i = 0; i < w.size(); ++i) fixed.emplace_back(i, w[i]);
  auto out = smallest_witness(spec, target, fixed);
  if (!out)
    throw InvariantViolation("allowed word failed to extend; spec not essential?");
  return *out;
}

namespace {

struct ComboSearch {
  const SubshiftSpec& spec;
  ReachCache& reach;
  const std::vector<std::pair<int, const CylinderUnion*>>& slots;
  long long combos_left;
  bool want_witness;
  int min_span;
  std::optional<Word> best;
  bool feasible_found = false;

  bool run(size_t depth, std::vector<Placement>& chosen) {
    if (combos_left <= 0)
      throw CapExceeded("cylinder-union combination search exceeded its cap");
    if (depth == slots.size()) {
      --combos_left;
      std::vector<std::pair<int, Symbol>> fixed;
      if (!merge_placements(chosen, fixed)) return false;
      if (!constraints_feasible(spec, reach, fixed)) return false;
      feasible_found = true;
      if (want_witness) {
        int span = min_span;
        for (const Placement& p : chosen)
          span = std::max(span, p.offset + p.word->size());
        span = std::max(span, 1);
        auto w = smallest_witness(spec, span, fixed);
        if (w && (!best || *w < *best)) best = *w;
        return false;  // keep scanning for the lex-min witness
      }
      return true;
    }
    const auto& [offset, uni] = slots[depth];
    for (const Word& w : uni->cylinders) {
      chosen.push_back({offset, &w});
      // prune early on a direct conflict with what is already placed
      std::vector<std::pair<int, Symbol>> fixed;
      bool ok = merge_placements(chosen, fixed);
      if (ok && run(depth + 1, chosen)) {
        chosen.pop_back();
        return true;
      }
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

bool union_placements_feasible(
    const SubshiftSpec& spec, ReachCache& reach,
    const std::vector<std::pair<int, const CylinderUnion*>>& slots,
    long long combo_cap) {
  for (const auto& [offset, uni] : slots) {
    (void)offset;
    if (uni->empty()) return false;
  }
  ComboSearch search{spec, reach, slots, combo_cap, false, 0, std::nullopt};
  std::vector<Placement> chosen;
  return search.run(0, chosen);
}

std::optional<Word> union_placements_witness(
    const SubshiftSpec& spec, ReachCache& reach,
    const std::vector<std::pair<int, const CylinderUnion*>>& slots,
    int min_span, long long combo_cap) {
  for (const auto& [offset, uni] : slots) {
    (void)offset;
    if (uni->empty()) return std::nullopt;
  }
  ComboSearch search{spec, reach, slots, combo_cap, true, min_span, std::nullopt};
  std::vector<Placement> chosen;
  search.run(0, chosen);
  return search.best;
}

}  // namespace deltamix
