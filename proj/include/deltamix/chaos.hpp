#pragma once

#include <string>
#include <vector>

#include "deltamix/config.hpp"
#include "deltamix/mixing.hpp"
#include "deltamix/point.hpp"
#include "deltamix/subshift.hpp"

namespace deltamix {

struct ScrambledThresholds {
  int p_min = 10;       // proximal means some tail distance <= 2^-p_min
  int eps_min_exp = 2;  // separated means some tail distance >= 2^-eps_min_exp
  int tail_num = 1, tail_den = 2;
};

enum class Verdict { AsymptoticEvidence, ScrambledEvidence, ProximalEvidence,
                     Inconclusive };
std::string verdict_name(Verdict v);

struct ScrambledReport {
  std::string pair_id;
  int r = 0, s = 0;
  int horizon = 0;
  int window = 0;
  int tail_start = 0;
  DyadicDistance min_tail, max_tail;
  Verdict verdict = Verdict::Inconclusive;
  ScrambledThresholds thresholds;
  std::vector<std::pair<long long, DyadicDistance>> trace;  // optional
  std::string row() const;  // one delimited line, fixed column order
};

std::vector<std::pair<long long, DyadicDistance>> orbit_distance_profile(
    const PointGen& x, const PointGen& y, int r, int s, int horizon,
    int window);

ScrambledReport scrambled_report(const PointGen& x, const PointGen& y,
                                 const std::string& pair_id, int r, int s,
                                 int horizon, int window,
                                 const ScrambledThresholds& thresholds,
                                 bool keep_trace = false);

struct NamedPair {
  std::string id;
  PointGen x, y;
};

// full grid of reports; for every k with both (1,1) and (k,k) requested the
// subsampling identity profile_{k,k}(n) = profile_{1,1}(kn) is checked
std::vector<ScrambledReport> prox_asy_grid(
    const std::vector<NamedPair>& pairs,
    const std::vector<std::pair<int, int>>& rs_list, int horizon, int window,
    const ScrambledThresholds& thresholds);

// Two eventually periodic points read off a construction tree: their period
// starts with the two branch words and realizes, once per period and per
// requested (r,s), a shared-target window (proximal event) and a pair of
// separated branch windows (distal event), both drawn from the tree family.
struct TreePairEvent {
  int r = 0, s = 0;
  bool proximal = false;
  long long n = 0;
};
struct TreePair {
  PointGen x, y;
  int period = 0;
  int suggested_horizon = 0;
  std::vector<TreePairEvent> schedule;
};
TreePair pair_from_tree(const SubshiftSpec& spec, const ConstructionTree& tree,
                        int branch_a, int branch_b,
                        const std::vector<std::pair<int, int>>& rs_list,
                        const ScrambledThresholds& thresholds);

}  // namespace deltamix
