#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltamix/config.hpp"
#include "deltamix/cylinder.hpp"
#include "deltamix/independence.hpp"
#include "deltamix/subshift.hpp"
#include "deltamix/timeset.hpp"

namespace deltamix {

enum class DeltaKind {
  TransitiveSystem,
  TransitiveSet,
  WeaklyMixingSet,
  AmMembership,
};
std::string delta_kind_name(DeltaKind kind);

struct DeltaCertificate {
  DeltaKind kind = DeltaKind::TransitiveSystem;
  int d = 0;
  int n = 0;  // the certified integer
  std::vector<CylinderUnion> sets;
  std::optional<CylinderUnion> relative_set;
  std::optional<Word> witness;  // realizing word for plain hitting instances
  std::optional<IndependenceCertificate> independence;
  std::vector<Word> cover;  // the W_i for A_m membership
  int m = 0;                // A_m scale
  std::string text() const;
};

// least n in N(U_1,...,U_d) within the horizon
DeltaCertificate delta_transitive_certificate(const SubshiftSpec& spec,
                                              const std::vector<CylinderUnion>& us,
                                              int horizon);

// grid sweep over all single-word cylinder tuples with words up to max_word_len
struct DeltaSystemRow {
  std::vector<Word> words;
  int d = 0;
  std::optional<int> n;
};
struct DeltaSystemReport {
  int max_word_len = 0;
  int max_d = 0;
  int horizon = 0;
  std::vector<DeltaSystemRow> rows;
  int certified = 0;
  int failed = 0;
};
DeltaSystemReport delta_transitive_system_report(const SubshiftSpec& spec,
                                                 int max_word_len, int max_d,
                                                 int horizon);

// least n with {0, n, ..., (d-1)n} an independence set for (U_1,...,U_d)
// relative to A
DeltaCertificate delta_wm_certificate(const SubshiftSpec& spec,
                                      const CylinderUnion& a,
                                      const std::vector<CylinderUnion>& us,
                                      int horizon, long long cap = 4096);

// A_m membership: cover E by cylinders of length ceil(log2 m)+1 and certify
// one n for all k^k selector hitting sets
DeltaCertificate a_m_membership(const SubshiftSpec& spec, const CylinderUnion& e,
                                int m, int horizon, long long cap = 4096);

// (eps,d)-spread witness: k > 2^q with T^{jk}[z_i] forced into [g_j(z_i)]
// for every extension inside E
struct SpreadWitness {
  std::vector<Word> base_points;            // z_i
  std::vector<std::vector<Word>> targets;   // targets[i][j-1] = g_j(z_i)
  int d = 0;
  int k = 0;
  int target_len = 0;  // q, eps = 2^-q
};
SpreadWitness spread_witness(const SubshiftSpec& spec, const CylinderUnion& e,
                             const std::vector<Word>& zs,
                             const std::vector<std::vector<Word>>& targets,
                             int horizon);

// ----- inductive construction ---------------------------------------------

struct TreeLevel {
  int n_k = 0;  // spacing used to build this level; 0 at level 1
  std::vector<Word> words;
  std::vector<int> J;
  int target_size = 0;  // requested |J| after cap clamping
  IndependenceCertificate certificate;  // in memory only; files keep a digest
  DensityReport density;
};

struct ConstructionTree {
  std::string spec_json;  // canonical one-line spec document
  std::vector<Word> seeds;
  int depth = 0;
  int horizon = 0;
  long long selector_cap = 0;
  std::vector<TreeLevel> levels;
};

// Builds the nested families level by level: certify independence of the
// current family, pull an arithmetic progression out of the certified set,
// realize every product word along the progression, re-certify. Requires
// positive entropy.
ConstructionTree theorem_b_construct(const SubshiftSpec& spec,
                                     const std::vector<Word>& seeds, int depth,
                                     int horizon,
                                     const RunConfig& config = RunConfig());

// Replays all invariants (sizes, nesting, disjointness, diameter,
// independence). Throws InvariantViolation naming the first failure.
void check_tree_invariants(const SubshiftSpec& spec, const ConstructionTree& tree);

// expected family size at a level: n, n^2, n^6, ... (n^{k!})
long long tree_level_size(int seed_count, int level);

// ----- transitive point scheduling on the full shift -----------------------

struct TransitivePointRequirement {
  int d = 0;
  std::vector<Word> words;  // w_1..w_d
};
struct TransitivePointResult {
  Word prefix;
  std::vector<std::pair<int, int>> schedule;  // (requirement index, n)
};
// Greedy placement: requirement i gets the least n with windows at
// n, 2n, ..., dn beyond everything placed before and mutually consistent.
TransitivePointResult delta_transitive_point(
    int alphabet_size, const std::vector<TransitivePointRequirement>& reqs,
    int budget);

}  // namespace deltamix
