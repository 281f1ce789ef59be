#pragma once

#include <string>
#include <vector>

#include "deltamix/subshift.hpp"
#include "deltamix/word.hpp"

namespace deltamix {

// A finite union of cylinder sets based at 0. Canonical form: words sorted,
// duplicates and words shadowed by a shorter prefix removed.
struct CylinderUnion {
  std::vector<Word> cylinders;

  CylinderUnion() = default;
  explicit CylinderUnion(std::vector<Word> words);
  static CylinderUnion whole_space() { return CylinderUnion({Word()}); }
  static CylinderUnion parse(const std::string& text);  // comma-separated words

  bool empty() const { return cylinders.empty(); }
  int max_len() const;
  std::string text() const;

  // at least one cylinder word lies in the spec's language
  bool nonempty_in(const SubshiftSpec& spec) const;
  // drop words outside the language
  CylinderUnion restricted_to(const SubshiftSpec& spec) const;

  bool contains_word_prefix(const Word& w) const;  // some cylinder covers w
  bool disjoint_from(const CylinderUnion& other) const;

  bool operator==(const CylinderUnion&) const = default;
};

// U ∩ V as an explicit union (both based at 0)
CylinderUnion intersect(const SubshiftSpec& spec, const CylinderUnion& u,
                        const CylinderUnion& v);

// U ∩ T^{-m}V materialized as explicit cylinders of length m + |v|
// (all allowed completions of the gap are enumerated).
CylinderUnion intersect_shifted(const SubshiftSpec& spec, const CylinderUnion& u,
                                int m, const CylinderUnion& v,
                                long long enumeration_cap = 1 << 16);

}  // namespace deltamix
