#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltamix/bitmat.hpp"
#include "deltamix/config.hpp"
#include "deltamix/errors.hpp"
#include "deltamix/word.hpp"

namespace deltamix {

struct ValidationReport {
  int alphabet_size = 0;
  std::vector<Symbol> removed_symbols;  // dropped while trimming to the core
  bool essential_input = true;
  bool irreducible = false;
  int period = 0;  // gcd of cycle lengths; meaningful when irreducible
  int state_count = 0;
  int context_len = 1;
  std::string text() const;
};

// A one-sided subshift of finite type. Construction trims the transition
// graph to its essential core (every state keeps an incoming and an outgoing
// edge); an empty core is rejected. Forbidden words of length > 2 are recoded
// into an order-1 graph over length-(m-1) contexts, where m is the longest
// forbidden word. Instances are immutable.
class SubshiftSpec {
 public:
  static SubshiftSpec from_matrix(int alphabet_size,
                                  const std::vector<std::vector<int>>& rows,
                                  std::string name = "");
  static SubshiftSpec from_forbidden_words(int alphabet_size,
                                           const std::vector<Word>& forbidden,
                                           std::string name = "");

  const std::string& name() const { return name_; }
  const std::string& origin() const { return origin_; }
  int alphabet_size() const { return alphabet_size_; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  const std::vector<Word>& forbidden_words() const { return forbidden_; }

  // internal order-1 automaton
  int context_len() const { return context_len_; }  // symbols per state
  int state_count() const { return static_cast<int>(states_.size()); }
  const std::vector<Word>& states() const { return states_; }
  const BitMat& adjacency() const { return adj_; }
  // states whose context reads symbol `a` at offset t (0 <= t < context_len)
  uint64_t symbol_mask(int t, Symbol a) const {
    return symbol_masks_[static_cast<size_t>(t) * alphabet_size_ + a];
  }
  bool symbol_alive(Symbol a) const {
    return a >= 0 && a < alphabet_size_ && symbol_mask(0, a) != 0;
  }

  // membership in the language of the trimmed core
  bool word_allowed(const Word& w) const;
  // no forbidden factor / all transitions present, before trimming
  bool word_locally_admissible(const Word& w) const;

  // all allowed words of length n, lexicographically sorted
  std::vector<Word> language(int n, const RunConfig& config = RunConfig()) const;
  // |L_n| without materializing the words
  unsigned long long language_count(int n) const;

  ValidationReport validate() const;

  bool operator==(const SubshiftSpec& other) const {
    return alphabet_size_ == other.alphabet_size_ &&
           matrix_ == other.matrix_ && forbidden_ == other.forbidden_ &&
           origin_ == other.origin_ && name_ == other.name_;
  }

 private:
  SubshiftSpec() = default;
  void build_automaton();

  std::string name_;
  std::string origin_;  // "matrix" or "forbidden_words"
  int alphabet_size_ = 0;
  std::vector<std::vector<int>> matrix_;  // order-1 view; empty if recoded
  std::vector<Word> forbidden_;

  int context_len_ = 1;
  std::vector<Word> states_;  // sorted contexts of length context_len_
  BitMat adj_;
  std::vector<uint64_t> symbol_masks_;  // [t * alphabet_size + a]
  std::vector<Symbol> removed_symbols_;
  bool essential_input_ = true;

  friend ValidationReport;
};

// spec file I/O (canonical JSON; round-trips byte for byte)
SubshiftSpec parse_spec_json(const std::string& text);
std::string spec_to_json_text(const SubshiftSpec& spec);
SubshiftSpec load_spec_file(const std::string& path);

}  // namespace deltamix
