#pragma once

#include <map>
#include <string>
#include <vector>

#include "deltamix/cylinder.hpp"
#include "deltamix/subshift.hpp"
#include "deltamix/timeset.hpp"

namespace deltamix {

// Brute-force reference path: plain word enumeration and window matching,
// no reachability machinery. Checks fast-path results on desk-scale queries.

// every locally admissible word of length n (the corpus uses essential
// specs, where this is the language)
std::vector<Word> enumerate_words_direct(const SubshiftSpec& spec, int n);

// generalized hitting set computed by scanning the enumerated words
TimeSet generalized_hitting_set_oracle(const SubshiftSpec& spec,
                                       const std::vector<CylinderUnion>& us,
                                       int horizon);

struct OracleQuery {
  int spec_index = 0;
  int horizon = 0;
  std::vector<CylinderUnion> sets;
};

struct OracleCorpus {
  std::vector<std::pair<std::string, SubshiftSpec>> specs;
  std::vector<OracleQuery> queries;
};

// fixed deterministic sweep; >= 200 queries over alphabets <= 3 with total
// word length <= 20
OracleCorpus default_oracle_corpus();

std::string corpus_to_text(const OracleCorpus& corpus);
OracleCorpus parse_corpus(const std::string& text);

struct OracleDiffResult {
  int total = 0;
  int mismatches = 0;
  std::vector<std::string> detail;  // one line per mismatch
};
OracleDiffResult oracle_diff(const OracleCorpus& corpus);

}  // namespace deltamix
